#include "scangame/cli.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "scangame/config.hpp"
#include "scangame/equilibrium.hpp"
#include "scangame/model.hpp"
#include "scangame/oracle.hpp"
#include "scangame/sweep.hpp"
#include "scangame/textfmt.hpp"
#include "scangame/tiling.hpp"

namespace scangame {

namespace {

Regime parse_regime(const std::string& name) {
    return name == "unknown" ? Regime::unknown : Regime::known;
}

struct SolveArgs {
    std::string config;
    double q = -1.0;
    bool has_q = false;
    std::string regime = "known";
};

struct SweepArgs {
    std::string config;
    std::string param;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string regime;  // empty = default by swept parameter
};

struct SimulateArgs {
    double x = 0.0;
    double y = 0.0;
    long long trials = 0;
    unsigned long long seed = 0;
};

struct VerifyArgs {
    std::string config;
    int grid = 2001;
    std::string regime = "known";
    double q = -1.0;
    bool has_q = false;
    double x = 0.0;
    double y = 0.0;
    bool has_x = false;
    bool has_y = false;
    int placements = 10001;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
    GameParams p = load_config(args.config);
    if (args.has_q) {
        p.q = args.q;
        validate_params(p);
    }
    const Regime regime = parse_regime(args.regime);
    const Equilibrium eq =
        regime == Regime::known ? solve_known_type(p) : solve_unknown_type(p);
    out << serialize_equilibrium(eq);
    return kExitSuccess;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    SweepSpec spec;
    spec.param = args.param == "F" ? SweepParam::F : SweepParam::q;
    spec.from = args.from;
    spec.to = args.to;
    spec.steps = args.steps;
    spec.base = load_config(args.config);

    if (args.regime.empty()) {
        // F-sweeps default to the known-type solver; q only matters to the
        // unknown-type solver, so q-sweeps default there.
        spec.regime =
            spec.param == SweepParam::q ? Regime::unknown : Regime::known;
    } else {
        spec.regime = parse_regime(args.regime);
        if (spec.param == SweepParam::q && spec.regime == Regime::known) {
            err << "sweep: --param q requires --regime unknown (q has no "
                   "effect on the known-type game)\n";
            return kExitUsage;
        }
    }

    const std::vector<SweepRow> rows = run_sweep(spec);
    out << sweep_csv(spec, rows);
    return kExitSuccess;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
    const TilingSolution sol = build_tilings(args.x, args.y);
    const SimResult sim = simulate_detection(sol, args.trials, args.seed);
    const double z = sim.std_error > 0.0
                         ? (sim.estimate - sol.value) / sim.std_error
                         : 0.0;
    out << serialize_tiling(sol);
    out << "exact " << g17(sol.value) << "\n"
        << "estimate " << g17(sim.estimate) << "\n"
        << "std_error " << g17(sim.std_error) << "\n"
        << "z " << g17(z) << "\n"
        << "trials " << sim.trials << "\n"
        << "seed " << sim.seed << "\n";
    return kExitSuccess;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    if (args.has_x != args.has_y) {
        err << "verify: --x and --y must be given together\n";
        return kExitUsage;
    }
    GameParams p = load_config(args.config);
    if (args.has_q) {
        p.q = args.q;
        validate_params(p);
    }
    const Regime regime = parse_regime(args.regime);

    double x = 0.0;
    double y = 0.0;
    if (args.has_x) {
        x = args.x;
        y = args.y;
        out << "candidate x " << g17(x) << " y " << g17(y) << "\n";
    } else {
        const Equilibrium eq = regime == Regime::known ? solve_known_type(p)
                                                       : solve_unknown_type(p);
        out << serialize_equilibrium(eq);
        x = eq.x;
        y = eq.y;
    }

    GridSpec grid;
    grid.n_x = args.grid;
    grid.n_y = args.grid;
    const NashCertificate cert = certify_equilibrium(p, x, y, grid, regime);
    out << serialize_certificate(cert);

    const TilingSolution sol = build_tilings(x, y);
    const SaddleReport saddle = verify_saddle_bounds(sol, args.placements);
    out << serialize_saddle_report(saddle);

    const bool pass = cert.passed && saddle.pass;
    out << "verify " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kExitSuccess : kExitVerification;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Two-player spectrum-scanning game: solver, sweeps, "
                 "simulation, and verification"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "Solve the width-selection game for one parameter set");
    solve->add_option("--config", solve_args.config, "Parameter file")
        ->required();
    solve->add_option("--q", solve_args.q,
                      "Override the config's activity probability q");
    solve->add_option("--regime", solve_args.regime,
                      "Solver variant: known or unknown invader type")
        ->check(CLI::IsMember({"known", "unknown"}));

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Re-solve along a parameter range and emit CSV");
    sweep->add_option("--config", sweep_args.config, "Parameter file")
        ->required();
    sweep->add_option("--param", sweep_args.param, "Swept parameter: F or q")
        ->required()
        ->check(CLI::IsMember({"F", "q"}));
    sweep->add_option("--from", sweep_args.from, "Range start")->required();
    sweep->add_option("--to", sweep_args.to, "Range end")->required();
    sweep->add_option("--steps", sweep_args.steps, "Sample count (>= 2)")
        ->required();
    sweep->add_option("--regime", sweep_args.regime,
                      "Solver variant (defaults: F -> known, q -> unknown)")
        ->check(CLI::IsMember({"known", "unknown"}));

    SimulateArgs sim_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte-Carlo detection estimate for one width pair");
    simulate->add_option("--x", sim_args.x, "Scanner band width")->required();
    simulate->add_option("--y", sim_args.y, "Invader band width")->required();
    simulate->add_option("--trials", sim_args.trials, "Sample count")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_args.seed, "RNG seed")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Certify an equilibrium against brute-force oracles");
    verify->add_option("--config", verify_args.config, "Parameter file")
        ->required();
    verify->add_option("--grid", verify_args.grid,
                       "Oracle grid resolution per axis")
        ->check(CLI::Range(3, 20001));
    verify->add_option("--regime", verify_args.regime,
                       "Solver variant: known or unknown invader type")
        ->check(CLI::IsMember({"known", "unknown"}));
    verify->add_option("--q", verify_args.q,
                       "Override the config's activity probability q");
    verify->add_option("--x", verify_args.x,
                       "Candidate scanner width (with --y; skips the solver)");
    verify->add_option("--y", verify_args.y,
                       "Candidate invader width (with --x; skips the solver)");
    verify->add_option("--placements", verify_args.placements,
                       "Band placements per side in the saddle sweep")
        ->check(CLI::Range(3, 2000001));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    solve_args.has_q = solve->count("--q") > 0;
    verify_args.has_q = verify->count("--q") > 0;
    verify_args.has_x = verify->count("--x") > 0;
    verify_args.has_y = verify->count("--y") > 0;

    try {
        if (app.got_subcommand(solve)) return cmd_solve(solve_args, out);
        if (app.got_subcommand(sweep)) return cmd_sweep(sweep_args, out, err);
        if (app.got_subcommand(simulate)) return cmd_simulate(sim_args, out);
        return cmd_verify(verify_args, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace scangame
