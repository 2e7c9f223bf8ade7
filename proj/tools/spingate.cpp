// Command-line front end: simulate | design | verify | sweep.
// Exit codes: 0 ok/pass, 1 gate fail, 2 usage, 3 numeric failure, 4 infeasible design.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spingate/analytics.hpp"
#include "spingate/design.hpp"
#include "spingate/dynamics.hpp"
#include "spingate/elliptic.hpp"
#include "spingate/errors.hpp"
#include "spingate/parallel.hpp"
#include "spingate/trajectory_io.hpp"
#include "spingate/verify.hpp"

namespace {

using namespace spingate;

constexpr int kExitOk = 0;
constexpr int kExitGateFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitInfeasible = 4;

ControlConfig parse_config(const std::string& s) {
    if (s == "00") return ControlConfig::C00;
    if (s == "01") return ControlConfig::C01;
    if (s == "10") return ControlConfig::C10;
    if (s == "11") return ControlConfig::C11;
    throw std::invalid_argument("--config must be one of 00, 01, 10, 11");
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ModelFlags {
    std::string scheme;
    double a = 0.0;
    double h_par = -2.0;
    double h_perp = 0.0;
    double eta = 0.0;
    double phi = std::numeric_limits<double>::quiet_NaN();
    double phi_deg = std::numeric_limits<double>::quiet_NaN();

    void add_to(CLI::App* cmd) {
        cmd->add_option("--scheme", scheme, "model scheme")
            ->required()
            ->check(CLI::IsMember({"collinear", "noncollinear"}));
        cmd->add_option("--a", a, "easy-axis anisotropy (>= 0)")->check(CLI::NonNegativeNumber);
        cmd->add_option("--h-par", h_par, "longitudinal field h_par (collinear; default -2)");
        cmd->add_option("--h-perp", h_perp, "transverse drive h_perp (collinear)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--eta", eta, "Gilbert damping (>= 0)")->check(CLI::NonNegativeNumber);
        auto* phi_opt = cmd->add_option("--phi", phi, "control half-angle phi in radians "
                                                      "(noncollinear)");
        auto* deg_opt = cmd->add_option("--phi-deg", phi_deg, "control half-angle in degrees");
        phi_opt->excludes(deg_opt);
    }

    bool has_angle() const { return std::isfinite(phi) || std::isfinite(phi_deg); }

    double angle() const {
        if (std::isfinite(phi)) return phi;
        return phi_deg * std::numbers::pi / 180.0;
    }

    Model build() const {
        if (scheme == "collinear") return CollinearModel(a, h_par, h_perp, eta);
        if (!has_angle())
            throw std::invalid_argument("noncollinear scheme needs --phi or --phi-deg");
        return NonCollinearModel(angle(), a, eta);
    }
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateArgs {
    ModelFlags model;
    std::string config;
    int target_bit = 1;
    double t_end = 0.0;
    double dt = 1e-3;
    double t_off = std::numeric_limits<double>::quiet_NaN();
    std::size_t stride = 0;
    std::string out;
    std::string svg;
};

int run_simulate(const SimulateArgs& args) {
    const Model model = args.model.build();
    const ControlConfig config = parse_config(args.config);
    const FieldSchedule schedule = std::isfinite(args.t_off)
                                       ? FieldSchedule::switch_off_at(args.t_off)
                                       : FieldSchedule::always_on();
    const Spin3 s0 = encode_bit(args.target_bit, Axis3::z_axis());

    const Trajectory traj =
        integrate(model, config, s0, schedule, args.t_end, args.dt, args.stride);

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + args.out);
    write_trajectory_csv(traj, out);
    if (!args.svg.empty()) {
        std::ofstream svg(args.svg, std::ios::binary);
        if (!svg) throw std::runtime_error("cannot open output file: " + args.svg);
        write_trajectory_svg(traj, svg);
    }
    std::cout << "wrote " << traj.samples.size() << " samples to " << args.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// design
// ---------------------------------------------------------------------------

struct DesignArgs {
    std::string scheme;
    int n = 0;
    int m = 1;
    double a = 0.0;
    std::string out;
};

DesignSolution solve_design(const std::string& scheme, int n, int m, double a) {
    if (scheme == "collinear-a0") return design_collinear_a0(n, m);
    return design_noncollinear(n, m, a);
}

int run_design(const DesignArgs& args) {
    const DesignSolution sol = solve_design(args.scheme, args.n, args.m, args.a);
    const std::string text = sol.to_json().dump(2) + "\n";
    std::cout << text;
    if (!args.out.empty()) write_text_file(args.out, text);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    ModelFlags model;
    bool auto_design = false;
    int n = 0;
    int m = 1;
    double t_g = std::numeric_limits<double>::quiet_NaN();
    double t_off = std::numeric_limits<double>::quiet_NaN();
    bool flip_off = false;
    double relax = 0.0;
    double dt = 1e-3;
    double threshold = 0.9;
    unsigned threads = 0;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    ModelFlags mf = args.model;
    double t_g = args.t_g;

    if (args.auto_design == std::isfinite(t_g))
        throw std::invalid_argument("verify needs exactly one of --t-g and --auto");

    if (args.auto_design) {
        if (mf.scheme == "collinear") {
            if (mf.a != 0.0)
                throw std::invalid_argument("--auto with the collinear scheme designs the "
                                            "a = 0 gate; pass --t-g for a > 0");
            const DesignSolution sol = design_collinear_a0(args.n, args.m);
            mf.h_perp = *sol.h_perp;
            t_g = sol.t_g;
        } else {
            const DesignSolution sol = design_noncollinear(args.n, args.m, mf.a);
            mf.phi = *sol.phi;
            t_g = sol.t_g;
        }
    }

    const Model model = mf.build();

    FieldSchedule schedule = FieldSchedule::always_on();
    if (args.flip_off && std::isfinite(args.t_off))
        throw std::invalid_argument("--flip-off and --t-off are mutually exclusive");
    if (args.flip_off) {
        const double h_drive = std::holds_alternative<CollinearModel>(model)
                                   ? std::get<CollinearModel>(model).h_perp
                                   : std::get<NonCollinearModel>(model).h_tilde(
                                         ControlConfig::C11);
        schedule = FieldSchedule::switch_off_at(half_period_flip(h_drive, mf.a));
    } else if (std::isfinite(args.t_off)) {
        schedule = FieldSchedule::switch_off_at(args.t_off);
    }

    const GateReport report = run_truth_table(model, t_g, schedule, args.relax, args.dt,
                                              args.threshold, args.threads);
    const std::string text = report.to_json().dump(2) + "\n";
    std::cout << text;
    if (!args.out.empty()) write_text_file(args.out, text);
    return report.pass ? kExitOk : kExitGateFail;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string scheme;
    std::string param;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    int n = 0;
    int m = 1;
    double a = 0.0;
    double h_perp = 0.0;
    std::string metric = "design";
    double dt = 1e-3;
    double threshold = 0.9;
    unsigned threads = 0;
    std::string out;
};

int run_sweep(const SweepArgs& args) {
    const bool aniso = args.scheme == "collinear-aniso";
    if (args.param == "a" && args.scheme == "collinear-a0")
        throw std::invalid_argument("--param a does not apply to the collinear-a0 scheme");
    if (aniso && args.param == "m")
        throw std::invalid_argument("collinear-aniso scans use --param a or h-perp with a "
                                    "fixed --n");
    if (args.param == "h-perp" && !aniso)
        throw std::invalid_argument("--param h-perp applies to the collinear-aniso scheme");

    std::vector<double> grid(static_cast<std::size_t>(args.steps));
    for (int i = 0; i < args.steps; ++i)
        grid[static_cast<std::size_t>(i)] =
            args.steps == 1
                ? args.from
                : args.from + (args.to - args.from) * static_cast<double>(i) / (args.steps - 1);
    std::sort(grid.begin(), grid.end());

    const bool gate_metric = args.metric == "gate";
    const bool noncollinear = args.scheme == "noncollinear";

    struct Row {
        double value;
        std::string text;
    };
    std::vector<Row> rows(grid.size());

    parallel_for_indexed(grid.size(), args.threads, [&](std::size_t i) {
        const double v = grid[i];
        int n = args.n, m = args.m;
        double a = args.a;
        double h_perp = args.h_perp;
        if (args.param == "n") n = static_cast<int>(std::llround(v));
        if (args.param == "m") m = static_cast<int>(std::llround(v));
        if (args.param == "a") a = v;
        if (args.param == "h-perp") h_perp = v;

        std::string line = g17(v);
        try {
            if (aniso) {
                const CollinearModel model(a, -2.0, h_perp, 0.0);
                const double t_g = (2.0 * n + 1.0) * half_period_flip(h_perp, a);
                line += "," + g17(t_g) + "," + g17(collinear_aniso_residual(model, n));
                if (gate_metric) {
                    const GateReport rep =
                        run_truth_table(model, t_g, FieldSchedule::always_on(), 0.0, args.dt,
                                        args.threshold, 1);
                    line += "," + g17(rep.max_proj_error);
                }
            } else {
                const DesignSolution sol = solve_design(args.scheme, n, m, a);
                line += "," + g17(noncollinear ? *sol.phi : *sol.h_perp) + "," +
                        g17(sol.t_g) + "," + g17(sol.residual);
                if (gate_metric) {
                    const Model model =
                        noncollinear ? Model(NonCollinearModel(*sol.phi, a, 0.0))
                                     : Model(CollinearModel(0.0, -2.0, *sol.h_perp, 0.0));
                    const GateReport rep =
                        run_truth_table(model, sol.t_g, FieldSchedule::always_on(), 0.0,
                                        args.dt, args.threshold, 1);
                    line += "," + g17(rep.max_proj_error);
                }
            }
        } catch (const std::domain_error&) {
            line += aniso ? ",nan,nan" : ",nan,nan,nan";
            if (gate_metric) line += ",nan";
        } catch (const NumericError&) {
            line += aniso ? ",nan,nan" : ",nan,nan,nan";
            if (gate_metric) line += ",nan";
        }
        rows[i] = {v, line};
    });

    std::string text =
        aniso ? std::string("param,t_G,residual")
              : std::string("param,") + (noncollinear ? "phi" : "h_perp") + ",t_G,residual";
    text += (gate_metric ? ",max_proj_error\n" : "\n");
    for (const auto& row : rows) text += row.text + "\n";

    if (args.out.empty())
        std::cout << text;
    else
        write_text_file(args.out, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spingate: classical-spin Toffoli gate design and verification workbench"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate one target-spin trajectory");
    sim.model.add_to(sim_cmd);
    sim_cmd->add_option("--config", sim.config, "control configuration: 00|01|10|11")
        ->required();
    sim_cmd->add_option("--target-bit", sim.target_bit, "initial target bit (default 1)")
        ->check(CLI::Range(0, 1));
    sim_cmd->add_option("--t-end", sim.t_end, "integration time")
        ->required()
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--dt", sim.dt, "RK4 step (default 1e-3)")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--t-off", sim.t_off, "drive switch-off time (default: always on)")
        ->check(CLI::NonNegativeNumber);
    sim_cmd->add_option("--stride", sim.stride, "sample stride (0 = automatic)");
    sim_cmd->add_option("--out", sim.out, "trajectory CSV path")->required();
    sim_cmd->add_option("--svg", sim.svg, "optional SVG projection path");

    DesignArgs des;
    auto* des_cmd = app.add_subcommand("design", "solve the gate commensurability conditions");
    des_cmd->add_option("--scheme", des.scheme, "design scheme")
        ->required()
        ->check(CLI::IsMember({"collinear-a0", "noncollinear"}));
    des_cmd->add_option("--n", des.n, "odd-multiple index n (t_G = (2n+1) T11/2)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    des_cmd->add_option("--m", des.m, "period multiple m (t_G = m T01)")
        ->required()
        ->check(CLI::PositiveNumber);
    des_cmd->add_option("--a", des.a, "anisotropy (noncollinear)")->check(CLI::NonNegativeNumber);
    des_cmd->add_option("--out", des.out, "also write the JSON here");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "run the 8-row Toffoli truth table");
    ver.model.add_to(ver_cmd);
    ver_cmd->add_flag("--auto", ver.auto_design, "take t_G (and h_perp/phi) from a design step");
    ver_cmd->add_option("--n", ver.n, "design integer n (with --auto)")
        ->check(CLI::NonNegativeNumber);
    ver_cmd->add_option("--m", ver.m, "design integer m (with --auto)")
        ->check(CLI::PositiveNumber);
    ver_cmd->add_option("--t-g", ver.t_g, "explicit gate time")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--t-off", ver.t_off, "drive switch-off time")
        ->check(CLI::NonNegativeNumber);
    ver_cmd->add_flag("--flip-off", ver.flip_off,
                      "switch the drive off at the anisotropic pole-to-pole flip time");
    ver_cmd->add_option("--relax", ver.relax, "post-gate relaxation time (default 0)")
        ->check(CLI::NonNegativeNumber);
    ver_cmd->add_option("--dt", ver.dt, "RK4 step (default 1e-3)")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--threshold", ver.threshold, "decode threshold in (0,1] (default 0.9)");
    ver_cmd->add_option("--threads", ver.threads, "row fan-out width (0 = hardware)");
    ver_cmd->add_option("--out", ver.out, "also write the report JSON here");

    SweepArgs swp;
    auto* swp_cmd = app.add_subcommand("sweep", "scan a design parameter over a grid");
    swp_cmd->add_option("--scheme", swp.scheme, "design scheme")
        ->required()
        ->check(CLI::IsMember({"collinear-a0", "collinear-aniso", "noncollinear"}));
    swp_cmd->add_option("--param", swp.param, "swept parameter")
        ->required()
        ->check(CLI::IsMember({"n", "m", "a", "h-perp"}));
    swp_cmd->add_option("--from", swp.from, "grid start")->required();
    swp_cmd->add_option("--to", swp.to, "grid end")->required();
    swp_cmd->add_option("--steps", swp.steps, "number of grid points (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    swp_cmd->add_option("--n", swp.n, "fixed n")->check(CLI::NonNegativeNumber);
    swp_cmd->add_option("--m", swp.m, "fixed m")->check(CLI::PositiveNumber);
    swp_cmd->add_option("--a", swp.a, "fixed a")->check(CLI::NonNegativeNumber);
    swp_cmd->add_option("--h-perp", swp.h_perp, "fixed h_perp (collinear-aniso)")
        ->check(CLI::NonNegativeNumber);
    swp_cmd->add_option("--metric", swp.metric, "design residual or full gate error")
        ->check(CLI::IsMember({"design", "gate"}));
    swp_cmd->add_option("--dt", swp.dt, "RK4 step for --metric gate")
        ->check(CLI::PositiveNumber);
    swp_cmd->add_option("--threshold", swp.threshold, "decode threshold for --metric gate");
    swp_cmd->add_option("--threads", swp.threads, "grid fan-out width (0 = hardware)");
    swp_cmd->add_option("--out", swp.out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sim_cmd->parsed()) return run_simulate(sim);
        if (des_cmd->parsed()) return run_design(des);
        if (ver_cmd->parsed()) return run_verify(ver);
        return run_sweep(swp);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ConfinementError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const IntegrationError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
