#pragma once

#include <array>

#include "json.hpp"
#include "spingate/dynamics.hpp"
#include "spingate/model.hpp"
#include "spingate/spin.hpp"

namespace spingate {

struct TruthTableRow {
    int c1 = 0, c2 = 0;
    int t_in = 0;
    int t_expected = 0;
    Spin3 s_final{0.0, 0.0, 1.0};
    BitValue decoded = BitValue::Undecided;
    double proj_error = 0.0;      // 1 - |s_final . expected pole|
    double pole_alignment = 0.0;  // s_final . expected pole (signed)
    bool pass = false;            // decoded bit matches the Toffoli table
};

/// Truth-table verification result: the 8 rows in lexicographic (c1, c2, t)
/// order plus aggregates. pass requires every row to decode to its expected
/// bit; for damped runs (relax_time > 0 and eta > 0) the stricter
/// |s.pole| > 0.999 convergence criterion is reported in relax_converged.
struct GateReport {
    std::array<TruthTableRow, 8> rows{};
    bool pass = false;
    double max_proj_error = 0.0;
    double min_pole_alignment = 0.0;
    bool damped = false;
    bool relax_converged = false;

    Model model{CollinearModel(0.0, -2.0, 0.0)};
    double t_g = 0.0;
    double relax_time = 0.0;
    double dt = 0.0;
    double threshold = 0.0;
    FieldSchedule schedule;

    nlohmann::json to_json() const;
};

/// Run all 8 Toffoli rows: encode controls and target, integrate to
/// t_G + relax_time under the given drive schedule, decode the target on the
/// z-axis. Rows evaluate independently (fanned out over `threads` workers,
/// 0 = hardware concurrency) and are reported in deterministic order.
GateReport run_truth_table(const Model& model, double t_g, FieldSchedule schedule,
                           double relax_time, double dt, double threshold,
                           unsigned threads = 0);

const char* bit_value_label(BitValue v);

}  // namespace spingate
