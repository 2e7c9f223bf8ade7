#pragma once

#include <filesystem>
#include <ostream>

#include "spingate/dynamics.hpp"

namespace spingate {

/// CSV export: header `t,sx,sy,sz,energy`, one row per sample, decimal floats
/// with 17 significant digits, '\n' newlines. Byte-identical for identical
/// inputs.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);

/// Static SVG 1.1 rendering of the (x,z) and (y,z) orthographic projections
/// of the trajectory as polylines on unit-circle backdrops.
void write_trajectory_svg(const Trajectory& traj, std::ostream& out);
void write_trajectory_svg(const Trajectory& traj, const std::filesystem::path& path);

}  // namespace spingate
