// Test-only independent oracles. None of these share a code path with the
// library implementations they check.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "spingate/vec3.hpp"

namespace oracles {

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: max depth reached");
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Standard adaptive Simpson quadrature to absolute tolerance tol.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

/// Quadrature route for the normalized elliptic integral:
/// (1/pi) Int_0^pi du / sqrt(1 - k^2 sin^2 u).
inline double elliptic_k_norm_quadrature(double k, double tol = 1e-13) {
    const double k2 = k * k;
    auto f = [k2](double u) {
        const double s = std::sin(u);
        return 1.0 / std::sqrt(1.0 - k2 * s * s);
    };
    return adaptive_simpson(f, 0.0, std::numbers::pi, tol) / std::numbers::pi;
}

/// Quadrature route for the pole-to-pole flip time:
/// Int_0^pi du / sqrt(h^2 - a^2 sin^2 u) (requires h > a).
inline double flip_time_quadrature(double h, double a, double tol = 1e-13) {
    auto f = [h, a](double u) {
        const double s = std::sin(u);
        return 1.0 / std::sqrt(h * h - a * a * s * s);
    };
    return adaptive_simpson(f, 0.0, std::numbers::pi, tol);
}

/// Quadrature route for the confined-orbit period (a > h, start at a pole):
/// with sin(theta) = (h/a) sin(psi) the z-orbit period is
/// 2 Int_0^{pi/2} dpsi / (a sqrt(1 - (h/a)^2 sin^2 psi)).
inline double confined_period_quadrature(double h, double a, double tol = 1e-13) {
    const double q = h / a;
    auto f = [q, a](double psi) {
        const double s = std::sin(psi);
        return 1.0 / (a * std::sqrt(1.0 - q * q * s * s));
    };
    return 2.0 * adaptive_simpson(f, 0.0, std::numbers::pi / 2.0, tol);
}

/// Closed-form Larmor precession about a constant field: the solution of
/// ds/dt = s x h is a rigid rotation about h-hat through angle -|h| t.
inline spingate::Vec3 precession(const spingate::Vec3& s0, const spingate::Vec3& h, double t) {
    const double mag = h.norm();
    if (mag == 0.0) return s0;
    const spingate::Vec3 u = h * (1.0 / mag);
    const double angle = -mag * t;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // Rodrigues' formula.
    return s0 * c + u.cross(s0) * s + u * (u.dot(s0) * (1.0 - c));
}

}  // namespace oracles
