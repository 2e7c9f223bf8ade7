#include "spingate/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "spingate/parallel.hpp"

namespace spingate {

namespace {

nlohmann::json model_params_json(const Model& model) {
    nlohmann::json j;
    if (const auto* c = std::get_if<CollinearModel>(&model)) {
        j["a"] = c->a;
        j["h_par"] = c->h_par;
        j["h_perp"] = c->h_perp;
        j["eta"] = c->eta;
    } else {
        const auto& nc = std::get<NonCollinearModel>(model);
        j["phi"] = nc.phi;
        j["a"] = nc.a;
        j["eta"] = nc.eta;
    }
    return j;
}

}  // namespace

const char* bit_value_label(BitValue v) {
    switch (v) {
        case BitValue::Zero: return "0";
        case BitValue::One: return "1";
        case BitValue::Undecided: return "undecided";
    }
    return "?";
}

nlohmann::json GateReport::to_json() const {
    nlohmann::json j;
    j["scheme"] = model_scheme(model);
    j["params"] = model_params_json(model);
    j["t_G"] = t_g;
    j["relax_time"] = relax_time;
    j["dt"] = dt;
    j["threshold"] = threshold;
    if (!schedule.always()) j["t_off"] = schedule.t_off;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"c1", r.c1},
                             {"c2", r.c2},
                             {"t_in", r.t_in},
                             {"t_expected", r.t_expected},
                             {"s_final", {r.s_final.x(), r.s_final.y(), r.s_final.z()}},
                             {"decoded", bit_value_label(r.decoded)},
                             {"proj_error", r.proj_error},
                             {"pole_alignment", r.pole_alignment}});
    }
    j["pass"] = pass;
    j["max_proj_error"] = max_proj_error;
    j["min_pole_alignment"] = min_pole_alignment;
    if (damped) j["relax_converged"] = relax_converged;
    return j;
}

GateReport run_truth_table(const Model& model, double t_g, FieldSchedule schedule,
                           double relax_time, double dt, double threshold, unsigned threads) {
    if (!(t_g > 0.0) || !std::isfinite(t_g))
        throw std::invalid_argument("run_truth_table: t_G must be > 0");
    if (!(relax_time >= 0.0) || !std::isfinite(relax_time))
        throw std::invalid_argument("run_truth_table: relax_time must be >= 0");

    GateReport report;
    report.model = model;
    report.t_g = t_g;
    report.relax_time = relax_time;
    report.dt = dt;
    report.threshold = threshold;
    report.schedule = schedule;
    report.damped = relax_time > 0.0 && model_eta(model) > 0.0;

    const Axis3 z = Axis3::z_axis();
    const double t_end = t_g + relax_time;

    parallel_for_indexed(8, threads, [&](std::size_t idx) {
        const int c1 = static_cast<int>(idx >> 2) & 1;
        const int c2 = static_cast<int>(idx >> 1) & 1;
        const int t_in = static_cast<int>(idx) & 1;

        TruthTableRow row;
        row.c1 = c1;
        row.c2 = c2;
        row.t_in = t_in;
        row.t_expected = toffoli_expected(c1, c2, t_in);

        const ControlConfig config = config_from_bits(c1, c2);
        const Trajectory traj =
            integrate(model, config, encode_bit(t_in, z), schedule, t_end, dt);
        row.s_final = traj.final_sample().s;
        row.decoded = decode_bit(row.s_final, z, threshold);

        const Vec3 pole = encode_bit(row.t_expected, z).vec();
        row.pole_alignment = row.s_final.vec().dot(pole);
        row.proj_error = 1.0 - std::abs(row.pole_alignment);
        row.pass = (row.decoded == (row.t_expected ? BitValue::One : BitValue::Zero));
        report.rows[idx] = row;
    });

    report.pass = true;
    report.relax_converged = true;
    report.max_proj_error = 0.0;
    report.min_pole_alignment = 1.0;
    for (const auto& row : report.rows) {
        report.pass = report.pass && row.pass;
        report.relax_converged = report.relax_converged && row.pole_alignment > 0.999;
        report.max_proj_error = std::max(report.max_proj_error, row.proj_error);
        report.min_pole_alignment = std::min(report.min_pole_alignment, row.pole_alignment);
    }
    if (!report.damped) report.relax_converged = false;
    return report;
}

}  // namespace spingate
