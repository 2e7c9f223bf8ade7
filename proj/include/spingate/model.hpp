#pragma once

#include <limits>
#include <variant>

#include "spingate/spin.hpp"
#include "spingate/vec3.hpp"

namespace spingate {

/// Collinear three-spin model: Ising-coupled controls frozen along z,
/// easy-axis anisotropy a, longitudinal field h_par, transverse drive h_perp,
/// Gilbert damping eta. Units: JS^2 = 1 (energy), (JS)^-1 = 1 (time).
struct CollinearModel {
    double a = 0.0;
    double h_par = -2.0;
    double h_perp = 0.0;
    double eta = 0.0;

    CollinearModel(double a_, double h_par_, double h_perp_, double eta_ = 0.0);

    /// Net z-field seen by the target: h_par + s1^z + s2^z.
    double h_tilde(ControlConfig config) const;
};

/// Non-collinear model: control easy axes e1, e2 in the xy-plane at
/// angles +-phi from x, compensating field h = e1 + e2, target anisotropy a
/// along z, damping eta. The [00] configuration is frozen by construction.
struct NonCollinearModel {
    double phi;
    double a = 0.0;
    double eta = 0.0;

    explicit NonCollinearModel(double phi_, double a_ = 0.0, double eta_ = 0.0);

    const Vec3& e1() const { return e1_; }
    const Vec3& e2() const { return e2_; }
    Vec3 h() const { return e1_ + e2_; }

    /// s1 + s2 + h for the given configuration (the switchable drive part
    /// of the effective field; vanishes for [00]).
    Vec3 drive_vector(ControlConfig config) const;

    /// In-plane drive magnitude: 0, 2, 2, 4cos(phi) for [00],[01],[10],[11].
    double h_tilde(ControlConfig config) const;

  private:
    Vec3 e1_, e2_;
};

using Model = std::variant<CollinearModel, NonCollinearModel>;

double model_eta(const Model& model);
double model_anisotropy(const Model& model);
const char* model_scheme(const Model& model);  // "collinear" | "noncollinear"

/// Drive switch-off schedule: the transverse field h_perp (collinear) or the
/// whole exchange+field interaction (non-collinear) is removed at t_off.
/// Anisotropy is intrinsic and always stays on.
struct FieldSchedule {
    double t_off = std::numeric_limits<double>::infinity();

    static FieldSchedule always_on() { return {}; }
    static FieldSchedule switch_off_at(double t);

    bool always() const { return !std::isfinite(t_off); }
};

}  // namespace spingate
