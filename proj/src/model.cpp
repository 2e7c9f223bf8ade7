#include "spingate/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spingate {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

void require_nonneg(double v, const char* name) {
    require_finite(v, name);
    if (v < 0.0) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

}  // namespace

CollinearModel::CollinearModel(double a_, double h_par_, double h_perp_, double eta_)
    : a(a_), h_par(h_par_), h_perp(h_perp_), eta(eta_) {
    require_nonneg(a, "a");
    require_finite(h_par, "h_par");
    require_nonneg(h_perp, "h_perp");
    require_nonneg(eta, "eta");
}

double CollinearModel::h_tilde(ControlConfig config) const {
    const auto [s1z, s2z] = control_sz(config);
    return h_par + s1z + s2z;
}

NonCollinearModel::NonCollinearModel(double phi_, double a_, double eta_)
    : phi(phi_), a(a_), eta(eta_) {
    require_finite(phi, "phi");
    if (!(phi > 0.0 && phi < std::numbers::pi / 2))
        throw std::invalid_argument("phi must lie in (0, pi/2)");
    require_nonneg(a, "a");
    require_nonneg(eta, "eta");
    e1_ = Vec3{std::cos(phi), std::sin(phi), 0.0};
    e2_ = Vec3{std::cos(phi), -std::sin(phi), 0.0};
}

Vec3 NonCollinearModel::drive_vector(ControlConfig config) const {
    const auto [c1, c2] = control_bits(config);
    const Vec3 s1 = c1 ? e1_ : -e1_;
    const Vec3 s2 = c2 ? e2_ : -e2_;
    return s1 + s2 + h();
}

double NonCollinearModel::h_tilde(ControlConfig config) const {
    switch (config) {
        case ControlConfig::C00: return 0.0;
        case ControlConfig::C01:
        case ControlConfig::C10: return 2.0;
        case ControlConfig::C11: return 4.0 * std::cos(phi);
    }
    throw std::invalid_argument("h_tilde: bad ControlConfig");
}

double model_eta(const Model& model) {
    return std::visit([](const auto& m) { return m.eta; }, model);
}

double model_anisotropy(const Model& model) {
    return std::visit([](const auto& m) { return m.a; }, model);
}

const char* model_scheme(const Model& model) {
    return std::holds_alternative<CollinearModel>(model) ? "collinear" : "noncollinear";
}

FieldSchedule FieldSchedule::switch_off_at(double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("FieldSchedule: t_off must be finite and >= 0");
    return FieldSchedule{t};
}

}  // namespace spingate
