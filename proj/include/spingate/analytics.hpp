#pragma once

#include <array>

#include "spingate/model.hpp"
#include "spingate/spin.hpp"

namespace spingate {

/// Precession periods of the four control configurations.
struct PeriodSet {
    double t00, t01, t10, t11;

    double of(ControlConfig config) const;
};

/// Collinear a = 0 periods at h_par = -2:
/// T11 = 2pi/h_perp, T01 = T10 = 2pi/sqrt(h_perp^2+4), T00 = 2pi/sqrt(h_perp^2+16).
PeriodSet periods_collinear_a0(double h_perp);

/// Anisotropic pole-to-pole flip time (half period) for in-plane drive h_drive
/// and easy-axis anisotropy a: (pi/h_drive) * K_norm(a/h_drive).
/// Requires h_drive > a, otherwise the spin cannot cross the equator
/// (ConfinementError).
double half_period_flip(double h_drive, double a);

/// First integral of the collinear z-motion, zdot^2 = P(z) with
/// P(z) = h_perp^2 - r^2 + 2 h_tilde r z - e z^2 - 2 a h_tilde z^3 - a^2 z^4,
/// r = a + pole*h_tilde, e = h_perp^2 + h_tilde^2 - 2 a r. The start pole is a
/// turning point: P(pole) = 0 to within 1e-12.
struct QuarticFirstIntegral {
    std::array<double, 5> c;  // c[i] multiplies z^i
    double h_tilde;
    double r;
    double e;
    int start_pole;  // +1 or -1

    double value(double z) const;
    double derivative(double z) const;
};

QuarticFirstIntegral quartic_first_integral(const CollinearModel& model, ControlConfig config,
                                            int start_pole);

struct PeriodResult {
    double period;
    bool flips;  // the orbit reaches the opposite pole
};

/// Orbit period of the collinear z-motion from the start pole, by locating the
/// companion turning point of P(z) (grid scan + bisection) and integrating
/// 2*Int dz/sqrt(P) with the endpoint singularities removed analytically
/// (deflation by the bracketing roots, then z = mid + half*sin(u) and
/// Gauss-Legendre). Separatrix orbits (double turning points, divergent
/// period) raise NumericError instead of returning a large number.
PeriodResult period_numeric(const CollinearModel& model, ControlConfig config, int start_pole);

}  // namespace spingate
