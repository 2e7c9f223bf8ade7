#include "spingate/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "spingate/elliptic.hpp"
#include "spingate/errors.hpp"

namespace spingate {

namespace {

constexpr double kPi = std::numbers::pi;

struct GaussRule {
    std::vector<double> x;  // nodes on (-1, 1)
    std::vector<double> w;
};

GaussRule make_gauss_legendre(int n) {
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(x) and P_{n-1}(x).
            double p = 1.0, pm = 0.0;
            for (int k = 0; k < n; ++k) {
                const double pk = ((2.0 * k + 1.0) * x * p - k * pm) / (k + 1.0);
                pm = p;
                p = pk;
            }
            dp = n * (x * p - pm) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss_rule(int n) {
    static const GaussRule g64 = make_gauss_legendre(64);
    static const GaussRule g96 = make_gauss_legendre(96);
    static const GaussRule g192 = make_gauss_legendre(192);
    switch (n) {
        case 64: return g64;
        case 96: return g96;
        case 192: return g192;
    }
    throw std::logic_error("gauss_rule: unsupported order");
}

/// Divide the polynomial (coefficients low-to-high) by (z - root), dropping
/// the (numerically tiny) remainder.
std::array<double, 4> deflate(const std::array<double, 5>& c, double root) {
    std::array<double, 4> q{};
    q[3] = c[4];
    q[2] = c[3] + root * q[3];
    q[1] = c[2] + root * q[2];
    q[0] = c[1] + root * q[1];
    return q;
}

std::array<double, 3> deflate(const std::array<double, 4>& c, double root) {
    std::array<double, 3> q{};
    q[2] = c[3];
    q[1] = c[2] + root * q[2];
    q[0] = c[1] + root * q[1];
    return q;
}

/// 2 * Int_{z_lo}^{z_hi} dz / sqrt(P), where P = (z - z_lo)(z - z_hi) R(z):
/// with z = mid + half*sin(u) the integrand becomes 1/sqrt(-R(z(u))), smooth
/// over u in (-pi/2, pi/2) when the bracketing roots are simple.
double period_quadrature(const std::array<double, 3>& r, double z_lo, double z_hi, int order) {
    const GaussRule& rule = gauss_rule(order);
    const double mid = 0.5 * (z_lo + z_hi);
    const double half = 0.5 * (z_hi - z_lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double u = 0.5 * kPi * rule.x[i];
        const double z = mid + half * std::sin(u);
        const double g = -(r[0] + z * (r[1] + z * r[2]));
        if (!(g > 0.0))
            throw NumericError("period_numeric: deflated integrand not positive inside orbit");
        sum += rule.w[i] / std::sqrt(g);
    }
    return 2.0 * (0.5 * kPi) * sum;
}

}  // namespace

double PeriodSet::of(ControlConfig config) const {
    switch (config) {
        case ControlConfig::C00: return t00;
        case ControlConfig::C01: return t01;
        case ControlConfig::C10: return t10;
        case ControlConfig::C11: return t11;
    }
    throw std::invalid_argument("PeriodSet::of: bad ControlConfig");
}

PeriodSet periods_collinear_a0(double h_perp) {
    if (!(h_perp > 0.0) || !std::isfinite(h_perp))
        throw std::domain_error("periods_collinear_a0: h_perp must be > 0");
    const double h2 = h_perp * h_perp;
    return PeriodSet{2.0 * kPi / std::sqrt(h2 + 16.0), 2.0 * kPi / std::sqrt(h2 + 4.0),
                     2.0 * kPi / std::sqrt(h2 + 4.0), 2.0 * kPi / h_perp};
}

double half_period_flip(double h_drive, double a) {
    if (!(h_drive > 0.0) || !std::isfinite(h_drive))
        throw std::domain_error("half_period_flip: drive field must be > 0");
    if (!(a >= 0.0)) throw std::domain_error("half_period_flip: a must be >= 0");
    if (a >= h_drive)
        throw ConfinementError("half_period_flip: a >= drive field, the spin cannot cross "
                               "the equator (a=" +
                               std::to_string(a) + ", h=" + std::to_string(h_drive) + ")");
    return kPi / h_drive * elliptic_k_norm(a / h_drive);
}

double QuarticFirstIntegral::value(double z) const {
    return c[0] + z * (c[1] + z * (c[2] + z * (c[3] + z * c[4])));
}

double QuarticFirstIntegral::derivative(double z) const {
    return c[1] + z * (2.0 * c[2] + z * (3.0 * c[3] + z * 4.0 * c[4]));
}

QuarticFirstIntegral quartic_first_integral(const CollinearModel& model, ControlConfig config,
                                            int start_pole) {
    if (start_pole != 1 && start_pole != -1)
        throw std::invalid_argument("quartic_first_integral: start_pole must be +1 or -1");
    QuarticFirstIntegral q;
    q.start_pole = start_pole;
    q.h_tilde = model.h_tilde(config);
    q.r = model.a + start_pole * q.h_tilde;
    q.e = model.h_perp * model.h_perp + q.h_tilde * q.h_tilde - 2.0 * model.a * q.r;
    q.c = {model.h_perp * model.h_perp - q.r * q.r, 2.0 * q.h_tilde * q.r, -q.e,
           -2.0 * model.a * q.h_tilde, -model.a * model.a};

    double scale = 1.0;
    for (double ci : q.c) scale = std::max(scale, std::abs(ci));
    if (std::abs(q.value(start_pole)) > 1e-12 * scale)
        throw NumericError("quartic_first_integral: start pole is not a turning point");
    return q;
}

PeriodResult period_numeric(const CollinearModel& model, ControlConfig config, int start_pole) {
    const QuarticFirstIntegral q = quartic_first_integral(model, config, start_pole);
    const double pole = static_cast<double>(start_pole);

    double scale = 1.0;
    for (double ci : q.c) scale = std::max(scale, std::abs(ci));

    // Turning-point scan: 1e4 intervals over [-1, 1], bracket sign changes,
    // refine by bisection to 1e-14.
    constexpr int kGrid = 10000;
    std::vector<double> roots;
    double z_prev = -1.0;
    double p_prev = q.value(z_prev);
    for (int j = 1; j <= kGrid; ++j) {
        const double z = -1.0 + 2.0 * j / kGrid;
        const double pv = q.value(z);
        if (pv == 0.0 && j < kGrid) {
            roots.push_back(z);  // the grid point itself is a turning point
        } else if ((p_prev < 0.0 && pv > 0.0) || (p_prev > 0.0 && pv < 0.0)) {
            double lo = z_prev, hi = z;
            double plo = p_prev;
            while (hi - lo > 1e-14) {
                const double mid = 0.5 * (lo + hi);
                const double pm = q.value(mid);
                if ((plo < 0.0) == (pm < 0.0)) {
                    lo = mid;
                    plo = pm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        z_prev = z;
        p_prev = pv;
    }

    // Drop scan artifacts at the poles themselves; they are handled analytically.
    std::erase_if(roots, [](double z) { return std::abs(std::abs(z) - 1.0) < 1e-9; });

    // Companion turning point: nearest interior root on the interior side of
    // the start pole with P > 0 in between; failing that, the opposite pole
    // (reachable only when P(-pole) = -4*h_tilde^2 vanishes).
    double companion = 0.0;
    bool found = false;
    if (start_pole > 0) {
        std::sort(roots.begin(), roots.end(), std::greater<>());
    } else {
        std::sort(roots.begin(), roots.end());
    }
    for (double z : roots) {
        if (q.value(0.5 * (z + pole)) > 0.0) {
            companion = z;
            found = true;
            break;
        }
    }
    if (!found) {
        const double opposite = -pole;
        if (std::abs(q.value(opposite)) <= 1e-9 * scale && q.value(0.0) > 0.0) {
            companion = opposite;
            found = true;
        }
    }
    if (!found)
        throw NumericError("period_numeric: no companion turning point (P <= 0 on the "
                           "interior side: the start pole is an equilibrium)");

    const bool flips = std::abs(companion + pole) < 1e-9;

    // Double turning point => separatrix orbit with divergent period.
    if (std::abs(q.derivative(companion)) < 1e-8 * scale)
        throw NumericError("period_numeric: separatrix orbit (double turning point), "
                           "period diverges");

    const double z_lo = std::min(pole, flips ? -pole : companion);
    const double z_hi = std::max(pole, flips ? -pole : companion);
    const auto quadratic = deflate(deflate(q.c, z_hi), z_lo);

    double period = period_quadrature(quadratic, z_lo, z_hi, 96);
    const double check = period_quadrature(quadratic, z_lo, z_hi, 64);
    if (std::abs(period - check) > 1e-10 * std::max(1.0, std::abs(period))) {
        const double refined = period_quadrature(quadratic, z_lo, z_hi, 192);
        if (std::abs(refined - period) > 1e-10 * std::max(1.0, std::abs(refined)))
            throw NumericError("period_numeric: quadrature did not converge (near-separatrix "
                               "orbit?)");
        period = refined;
    }
    return PeriodResult{period, flips};
}

}  // namespace spingate
