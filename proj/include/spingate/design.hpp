#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "spingate/model.hpp"

namespace spingate {

/// Output of a gate-condition solver: the integer tuple, the solved field or
/// control angle, the gate time and the residual of the remaining condition.
struct DesignSolution {
    std::string scheme;  // "collinear-a0" | "noncollinear"
    int n = 0;
    int m = 0;
    std::optional<int> l;
    std::optional<double> h_perp;
    std::optional<double> phi;
    double t_g = 0.0;
    double residual = 0.0;

    nlohmann::json to_json() const;
};

/// Approximate collinear a = 0 design (h_par = -2): pick (n, m), solve the
/// first commensurability condition exactly for h_perp, report how far the
/// third condition sits from an integer l. Requires 2m > 2n+1.
DesignSolution design_collinear_a0(int n, int m);

/// Exhaustive-search certificate that 16 m^2 - 4 l^2 = 3 (2n+1)^2 has no
/// integer solutions (the left side is divisible by 4, the right side odd).
struct ParityCertificate {
    int bound = 0;
    std::int64_t triples_checked = 0;
    std::int64_t solutions = 0;
    bool lhs_always_mod4_zero = false;
    bool rhs_always_odd = false;

    bool no_solution() const { return solutions == 0; }
    nlohmann::json to_json() const;
};

ParityCertificate parity_obstruction(int search_bound);

/// Commensurability residual of the anisotropic collinear gate. With
/// t_G = (2n+1) T11/2 (T11 from the elliptic flip time), returns the larger
/// distance of t_G/T01 and t_G/T00 from an integer, with those periods
/// computed from the quartic first-integral quadrature. There is no closed
/// solver here, only the scan quantity; requires h_perp > a so [11] flips.
double collinear_aniso_residual(const CollinearModel& model, int n);

/// Non-collinear design: a = 0 gives cos(phi) = (2n+1)/(4m) in closed form;
/// a > 0 solves (2n+1)/(4 cos phi) K_norm(a/(4 cos phi)) = m K_norm(a/2) by
/// bisection on (0.01, pi/2 - 0.01). Requires 2n+1 < 4m, and a < 2 so the
/// [01]/[10] period exists. Gate time t_G = m * pi * K_norm(a/2).
DesignSolution design_noncollinear(int n, int m, double a);

/// Linear stability of the poles under LLG with the drive off: eigenvalues
/// are 0 and -(2a + z h_tilde)(eta +- i); a pole is stable iff 2a + z h_tilde > 0.
struct PoleStability {
    int pole = 0;                           // +1 (north) or -1 (south)
    std::array<double, 2> eig_real{};       // real parts of the conjugate pair
    bool stable = false;
};

struct StabilityReport {
    double a = 0.0, h_tilde = 0.0, eta = 0.0;
    PoleStability north, south;
    bool both_stable = false;     // 2a > |h_tilde|
    bool in_window_a_gt_2 = false;  // the h_par = -2 worst case |h_tilde| = 4

    nlohmann::json to_json() const;
};

StabilityReport pole_stability(double a, double h_tilde, double eta);

/// Physical-unit estimates for spin modulus S, exchange J (kelvin) and
/// g-factor: H_par = 2 J k_B S / (g_s mu_B), minimal stable anisotropy
/// A = 2J, H_perp,min = A k_B S / (g_s mu_B), time unit hbar/(J k_B S).
struct PhysicalEstimate {
    double j_kelvin = 0.0;
    double spin_s = 0.0;
    double g_s = 0.0;
    double a_kelvin = 0.0;  // anisotropy actually used for H_perp,min
    double h_par_tesla = 0.0;
    double a_min_kelvin = 0.0;
    double h_perp_min_tesla = 0.0;
    double time_unit_ps = 0.0;
    double gate_time_ps = 0.0;

    nlohmann::json to_json() const;
};

/// a_kelvin overrides the default minimal anisotropy A = 2J when given.
PhysicalEstimate to_physical_units(double j_kelvin, double spin_s, double g_s,
                                   double t_g_dimensionless,
                                   std::optional<double> a_kelvin = std::nullopt);

// CODATA values, fixed for bit-for-bit reproducible estimates.
inline constexpr double k_boltzmann_j_per_k = 1.380649e-23;
inline constexpr double mu_bohr_j_per_t = 9.2740100783e-24;
inline constexpr double hbar_j_s = 1.054571817e-34;

}  // namespace spingate
