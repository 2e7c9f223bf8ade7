#pragma once

#include <cstddef>
#include <vector>

#include "spingate/model.hpp"
#include "spingate/spin.hpp"
#include "spingate/vec3.hpp"

namespace spingate {

/// Effective field seen by the target spin.
/// Collinear: (h_perp*[drive_on], 0, h_par + s1^z + s2^z + 2 a z).
/// Non-collinear: (s1 + s2 + h)*[drive_on] + (0, 0, 2 a z).
Vec3 effective_field(const CollinearModel& model, ControlConfig config, const Vec3& s,
                     bool drive_on = true);
Vec3 effective_field(const NonCollinearModel& model, ControlConfig config, const Vec3& s,
                     bool drive_on = true);
Vec3 effective_field(const Model& model, ControlConfig config, const Vec3& s,
                     bool drive_on = true);

/// Landau-Lifshitz-Gilbert right-hand side:
/// (1+eta^2) ds/dt = s x [h - eta (s x h)]. Reduces to s x h for eta = 0.
Vec3 llg_rhs(const Vec3& s, const Vec3& h, double eta);

/// Hamiltonian value in units JS^2 = 1. The effective field above is
/// -dE/ds, so undamped flow conserves it and damping dissipates it.
double energy(const CollinearModel& model, ControlConfig config, const Vec3& s,
              bool drive_on = true);
double energy(const NonCollinearModel& model, ControlConfig config, const Vec3& s,
              bool drive_on = true);
double energy(const Model& model, ControlConfig config, const Vec3& s, bool drive_on = true);

struct TrajectorySample {
    double t;
    Spin3 s;
    double energy;
};

/// Time-sampled target-spin states plus conserved-quantity diagnostics.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    Model model;
    ControlConfig config;
    double dt;
    FieldSchedule schedule;

    const TrajectorySample& final_sample() const { return samples.back(); }
};

/// Classical fixed-step RK4 on the LLG equation with per-step renormalization
/// of the spin. The drive switch-off is snapped to the nearest step boundary.
/// Records every step when the run has <= 100000 steps, otherwise decimates
/// to at most ~100000 samples (stride = 0 picks this default); the final
/// state is always recorded. Throws IntegrationError on non-finite state.
Trajectory integrate(const Model& model, ControlConfig config, const Spin3& s0,
                     FieldSchedule schedule, double t_end, double dt, std::size_t stride = 0);

}  // namespace spingate
