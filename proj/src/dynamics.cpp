#include "spingate/dynamics.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "spingate/errors.hpp"

namespace spingate {

namespace {

/// Both models reduce to: field = [drive_on]*drive + (0, 0, axial + 2 a z),
/// energy = -([drive_on]*drive.s + axial*z + a z^2 + e_const).
struct StepParams {
    Vec3 drive;
    double axial;
    double two_a;
    double a;
    double eta;
    double e_const;
};

StepParams make_params(const CollinearModel& m, ControlConfig config) {
    const auto [s1z, s2z] = control_sz(config);
    StepParams p;
    p.drive = Vec3{m.h_perp, 0.0, 0.0};
    p.axial = m.h_par + s1z + s2z;
    p.a = m.a;
    p.two_a = 2.0 * m.a;
    p.eta = m.eta;
    p.e_const = m.a * 2.0 + m.h_par * (s1z + s2z);  // (s1^z)^2 = (s2^z)^2 = 1
    return p;
}

StepParams make_params(const NonCollinearModel& m, ControlConfig config) {
    StepParams p;
    p.drive = m.drive_vector(config);
    p.axial = 0.0;
    p.a = m.a;
    p.two_a = 2.0 * m.a;
    p.eta = m.eta;
    p.e_const = 0.0;
    return p;
}

StepParams make_params(const Model& m, ControlConfig config) {
    return std::visit([&](const auto& mm) { return make_params(mm, config); }, m);
}

inline Vec3 field_of(const StepParams& p, const Vec3& s, bool on) {
    Vec3 h{0.0, 0.0, p.axial + p.two_a * s.z};
    if (on) h += p.drive;
    return h;
}

inline double energy_of(const StepParams& p, const Vec3& s, bool on) {
    double e = p.axial * s.z + p.a * s.z * s.z + p.e_const;
    if (on) e += p.drive.dot(s);
    return -e;
}

}  // namespace

Vec3 effective_field(const CollinearModel& model, ControlConfig config, const Vec3& s,
                     bool drive_on) {
    return field_of(make_params(model, config), s, drive_on);
}

Vec3 effective_field(const NonCollinearModel& model, ControlConfig config, const Vec3& s,
                     bool drive_on) {
    return field_of(make_params(model, config), s, drive_on);
}

Vec3 effective_field(const Model& model, ControlConfig config, const Vec3& s, bool drive_on) {
    return field_of(make_params(model, config), s, drive_on);
}

Vec3 llg_rhs(const Vec3& s, const Vec3& h, double eta) {
    if (!(eta >= 0.0)) throw std::invalid_argument("llg_rhs: eta must be >= 0");
    const Vec3 sxh = s.cross(h);
    if (eta == 0.0) return sxh;
    return s.cross(h - eta * sxh) * (1.0 / (1.0 + eta * eta));
}

double energy(const CollinearModel& model, ControlConfig config, const Vec3& s, bool drive_on) {
    return energy_of(make_params(model, config), s, drive_on);
}

double energy(const NonCollinearModel& model, ControlConfig config, const Vec3& s,
              bool drive_on) {
    return energy_of(make_params(model, config), s, drive_on);
}

double energy(const Model& model, ControlConfig config, const Vec3& s, bool drive_on) {
    return energy_of(make_params(model, config), s, drive_on);
}

Trajectory integrate(const Model& model, ControlConfig config, const Spin3& s0,
                     FieldSchedule schedule, double t_end, double dt, std::size_t stride) {
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("integrate: t_end must be > 0");
    if (!(dt > 0.0) || !(dt <= t_end))
        throw std::invalid_argument("integrate: dt must satisfy 0 < dt <= t_end");

    const StepParams p = make_params(model, config);
    const double inv_damp = 1.0 / (1.0 + p.eta * p.eta);
    const bool damped = p.eta > 0.0;

    // Step count: full dt steps, last step shortened to land exactly on t_end.
    auto n_steps = static_cast<std::int64_t>(std::ceil(t_end / dt - 1e-9));
    if (n_steps < 1) n_steps = 1;
    const double last_h = t_end - static_cast<double>(n_steps - 1) * dt;

    // Switch-off snapped to the nearest step boundary.
    const std::int64_t k_off =
        schedule.always() ? n_steps + 1 : std::llround(schedule.t_off / dt);

    if (stride == 0) {
        const std::int64_t total = n_steps + 1;
        stride = total > 100000 ? static_cast<std::size_t>((total + 99999) / 100000) : 1;
    }

    auto rhs = [&](const Vec3& s, bool on) -> Vec3 {
        const Vec3 h = field_of(p, s, on);
        const Vec3 sxh = s.cross(h);
        if (!damped) return sxh;
        return s.cross(h - p.eta * sxh) * inv_damp;
    };

    Trajectory traj{{}, model, config, dt, schedule};
    traj.samples.reserve(static_cast<std::size_t>(n_steps / static_cast<std::int64_t>(stride)) + 2);
    Vec3 s = s0.vec();
    traj.samples.push_back({0.0, s0, energy_of(p, s, 0 < k_off)});

    for (std::int64_t i = 0; i < n_steps; ++i) {
        const double h = (i + 1 < n_steps) ? dt : last_h;
        const bool on = i < k_off;

        const Vec3 k1 = rhs(s, on);
        const Vec3 k2 = rhs(s + (0.5 * h) * k1, on);
        const Vec3 k3 = rhs(s + (0.5 * h) * k2, on);
        const Vec3 k4 = rhs(s + h * k3, on);
        s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double t = (i + 1 < n_steps) ? static_cast<double>(i + 1) * dt : t_end;
        if (!s.finite()) throw IntegrationError("integrate: non-finite spin state", t);
        const double norm = s.norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw IntegrationError("integrate: spin norm degenerate", t);
        s = s * (1.0 / norm);

        if ((i + 1) % static_cast<std::int64_t>(stride) == 0 || i + 1 == n_steps)
            traj.samples.push_back(
                {t, Spin3::renormalized(s), energy_of(p, s, i + 1 < k_off)});
    }
    return traj;
}

}  // namespace spingate
