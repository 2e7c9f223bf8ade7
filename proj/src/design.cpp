#include "spingate/design.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spingate/analytics.hpp"
#include "spingate/elliptic.hpp"
#include "spingate/errors.hpp"

namespace spingate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_design_integers(int n, int m) {
    if (n < 0) throw std::invalid_argument("design: n must be >= 0");
    if (m < 1) throw std::invalid_argument("design: m must be >= 1");
}

}  // namespace

nlohmann::json DesignSolution::to_json() const {
    nlohmann::json j;
    j["scheme"] = scheme;
    j["n"] = n;
    j["m"] = m;
    if (l) j["l"] = *l;
    if (h_perp) j["h_perp"] = *h_perp;
    if (phi) j["phi"] = *phi;
    j["t_G"] = t_g;
    j["residual"] = residual;
    return j;
}

DesignSolution design_collinear_a0(int n, int m) {
    require_design_integers(n, m);
    const double odd = 2.0 * n + 1.0;
    if (2 * m <= 2 * n + 1)
        throw InfeasibleError("design_collinear_a0: need 2m > 2n+1 for a real h_perp");

    const double ratio = 2.0 * m / odd;
    const double h_perp = 2.0 / std::sqrt(ratio * ratio - 1.0);
    const double t_g = odd * kPi / h_perp;  // (2n+1)/2 * T11
    const double l_real = 0.5 * odd * std::sqrt(1.0 + 16.0 / (h_perp * h_perp));
    const double l_round = std::round(l_real);

    DesignSolution sol;
    sol.scheme = "collinear-a0";
    sol.n = n;
    sol.m = m;
    sol.l = static_cast<int>(l_round);
    sol.h_perp = h_perp;
    sol.t_g = t_g;
    sol.residual = std::abs(l_real - l_round);
    return sol;
}

nlohmann::json ParityCertificate::to_json() const {
    nlohmann::json j;
    j["bound"] = bound;
    j["triples_checked"] = triples_checked;
    j["solutions"] = solutions;
    j["no_solution"] = no_solution();
    j["lhs_always_mod4_zero"] = lhs_always_mod4_zero;
    j["rhs_always_odd"] = rhs_always_odd;
    return j;
}

ParityCertificate parity_obstruction(int search_bound) {
    if (search_bound < 1) throw std::invalid_argument("parity_obstruction: bound must be >= 1");

    ParityCertificate cert;
    cert.bound = search_bound;
    cert.lhs_always_mod4_zero = true;
    cert.rhs_always_odd = true;
    for (std::int64_t n = 0; n <= search_bound; ++n) {
        const std::int64_t odd = 2 * n + 1;
        const std::int64_t rhs = 3 * odd * odd;
        if (rhs % 2 == 0) cert.rhs_always_odd = false;
        for (std::int64_t m = 1; m <= search_bound; ++m) {
            const std::int64_t m_term = 16 * m * m;
            for (std::int64_t l = 1; l <= search_bound; ++l) {
                const std::int64_t lhs = m_term - 4 * l * l;
                if (lhs % 4 != 0) cert.lhs_always_mod4_zero = false;
                if (lhs == rhs) ++cert.solutions;
                ++cert.triples_checked;
            }
        }
    }
    return cert;
}

double collinear_aniso_residual(const CollinearModel& model, int n) {
    if (n < 0) throw std::invalid_argument("collinear_aniso_residual: n must be >= 0");
    if (std::abs(model.h_tilde(ControlConfig::C11)) > 1e-12)
        throw InfeasibleError("collinear_aniso_residual: the [11] orbit only flips for "
                              "h_par = -2");
    const double t_g = (2.0 * n + 1.0) * half_period_flip(model.h_perp, model.a);
    const double t01 = period_numeric(model, ControlConfig::C01, +1).period;
    const double t00 = period_numeric(model, ControlConfig::C00, +1).period;
    auto frac = [](double x) { return std::abs(x - std::round(x)); };
    return std::max(frac(t_g / t01), frac(t_g / t00));
}

DesignSolution design_noncollinear(int n, int m, double a) {
    require_design_integers(n, m);
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::invalid_argument("design_noncollinear: a must be >= 0");
    if (2 * n + 1 >= 4 * m)
        throw InfeasibleError("design_noncollinear: need 2n+1 < 4m so that cos(phi) < 1");

    DesignSolution sol;
    sol.scheme = "noncollinear";
    sol.n = n;
    sol.m = m;
    const double odd = 2.0 * n + 1.0;

    if (a == 0.0) {
        sol.phi = std::acos(odd / (4.0 * m));
        sol.t_g = m * kPi;
        sol.residual = 0.0;
        return sol;
    }

    if (a >= 2.0)
        throw ConfinementError("design_noncollinear: a >= 2 confines the [01]/[10] orbits "
                               "(h_tilde_01 = 2), no gate period exists");

    const double rhs = m * elliptic_k_norm(a / 2.0);
    // Increasing in phi on the feasible region; +inf once 4cos(phi) <= a.
    auto lhs_minus_rhs = [&](double phi) {
        const double c = 4.0 * std::cos(phi);
        if (c <= a) return std::numeric_limits<double>::infinity();
        return odd / c * elliptic_k_norm(a / c) - rhs;
    };

    double lo = 0.01;
    double hi = kPi / 2.0 - 0.01;
    if (!(lhs_minus_rhs(lo) < 0.0) || !(lhs_minus_rhs(hi) > 0.0))
        throw NumericError("design_noncollinear: no sign change in the (0.01, pi/2-0.01) "
                           "bracket");
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (lhs_minus_rhs(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    sol.phi = 0.5 * (lo + hi);
    sol.t_g = m * kPi * elliptic_k_norm(a / 2.0);  // m * T01
    sol.residual = hi - lo;
    return sol;
}

nlohmann::json StabilityReport::to_json() const {
    auto pole_json = [](const PoleStability& p) {
        return nlohmann::json{{"pole", p.pole},
                              {"eig_real", {p.eig_real[0], p.eig_real[1]}},
                              {"stable", p.stable}};
    };
    nlohmann::json j;
    j["a"] = a;
    j["h_tilde"] = h_tilde;
    j["eta"] = eta;
    j["north"] = pole_json(north);
    j["south"] = pole_json(south);
    j["both_stable"] = both_stable;
    j["in_window_a_gt_2"] = in_window_a_gt_2;
    return j;
}

StabilityReport pole_stability(double a, double h_tilde, double eta) {
    if (!(eta >= 0.0)) throw std::invalid_argument("pole_stability: eta must be >= 0");
    StabilityReport rep;
    rep.a = a;
    rep.h_tilde = h_tilde;
    rep.eta = eta;
    for (int pole : {+1, -1}) {
        PoleStability p;
        p.pole = pole;
        const double margin = 2.0 * a + pole * h_tilde;
        p.eig_real = {-margin * eta, -margin * eta};
        p.stable = margin > 0.0;
        (pole > 0 ? rep.north : rep.south) = p;
    }
    rep.both_stable = 2.0 * a > std::abs(h_tilde);
    rep.in_window_a_gt_2 = a > 2.0;
    return rep;
}

nlohmann::json PhysicalEstimate::to_json() const {
    nlohmann::json j;
    j["J_kelvin"] = j_kelvin;
    j["S"] = spin_s;
    j["g_s"] = g_s;
    j["A_kelvin"] = a_kelvin;
    j["H_par_tesla"] = h_par_tesla;
    j["A_min_kelvin"] = a_min_kelvin;
    j["H_perp_min_tesla"] = h_perp_min_tesla;
    j["time_unit_ps"] = time_unit_ps;
    j["gate_time_ps"] = gate_time_ps;
    return j;
}

PhysicalEstimate to_physical_units(double j_kelvin, double spin_s, double g_s,
                                   double t_g_dimensionless, std::optional<double> a_kelvin) {
    auto require_pos = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("to_physical_units: ") + name +
                                        " must be > 0");
    };
    require_pos(j_kelvin, "J");
    require_pos(spin_s, "S");
    require_pos(g_s, "g_s");
    require_pos(t_g_dimensionless, "t_G");
    if (a_kelvin) require_pos(*a_kelvin, "A");

    PhysicalEstimate est;
    est.j_kelvin = j_kelvin;
    est.spin_s = spin_s;
    est.g_s = g_s;
    est.a_min_kelvin = 2.0 * j_kelvin;
    est.a_kelvin = a_kelvin.value_or(est.a_min_kelvin);

    const double j_joule = j_kelvin * k_boltzmann_j_per_k;
    est.h_par_tesla = 2.0 * j_joule * spin_s / (g_s * mu_bohr_j_per_t);
    est.h_perp_min_tesla =
        est.a_kelvin * k_boltzmann_j_per_k * spin_s / (g_s * mu_bohr_j_per_t);
    est.time_unit_ps = hbar_j_s / (j_joule * spin_s) * 1e12;
    est.gate_time_ps = t_g_dimensionless * est.time_unit_ps;
    return est;
}

}  // namespace spingate
