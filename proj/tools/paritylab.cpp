// paritylab: command-line front end for the parity-game toolkit.
//
//   paritylab generate  --nodes 1000 --degree 4 --seed 7 --out game.pg
//   paritylab solve     game.pg --algorithm swcp --out game.sol
//   paritylab verify    game.pg
//   paritylab sweep     --kind success_prob --grid-n 500,1000 --grid-d 2,4,8
//   paritylab threshold --max-d 16
//
// Exit codes: 0 success, 1 usage or precondition error, 2 verification
// failure, 3 I/O or file-format error. Relative output paths are resolved
// under $PARITYLAB_OUT_DIR when that variable is set.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parity/parity.hpp"

namespace {

namespace fs = std::filesystem;

std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("PARITYLAB_OUT_DIR");
    if (!dir || !*dir) return path;
    fs::path p(path);
    if (p.is_absolute()) return path;
    return (fs::path(dir) / p).string();
}

void ensure_parent_dir(const std::string& path) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(std::stoi(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

std::vector<parity::DegreeSpec> parse_degree_list(const std::string& csv) {
    std::vector<parity::DegreeSpec> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(parity::parse_degree_spec(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

int cmd_generate(const std::string& config_path, int nodes, const std::string& degree,
                 int priorities, bool self_loops, std::uint64_t seed, std::string out_path) {
    parity::GenConfig cfg;
    if (!config_path.empty()) {
        cfg = parity::parse_gen_config(parity::read_text_file(config_path), cfg);
    }
    if (nodes > 0) cfg.node_count = nodes;
    if (!degree.empty()) cfg.degree = parity::parse_degree_spec(degree);
    if (priorities > 0) cfg.priority_count = priorities;
    if (self_loops) cfg.allow_self_loops = true;
    if (seed != 0 || config_path.empty()) cfg.seed = seed;

    const parity::ParityGame g = parity::generate(cfg);
    out_path = resolve_out(out_path);
    ensure_parent_dir(out_path);
    parity::write_text_file(out_path, parity::write_pgsolver(g));
    std::cout << "wrote " << out_path << " (" << g.node_count() << " nodes, degree "
              << parity::degree_of(cfg.degree, cfg.node_count) << ", seed " << cfg.seed << ")\n";
    return 0;
}

int cmd_solve(const std::string& in_path, const std::string& algorithm, std::string out_path) {
    const parity::ParityGame g = parity::parse_pgsolver(parity::read_text_file(in_path));
    if (const auto bad = parity::validate(g)) {
        throw std::invalid_argument("invalid game (node " + std::to_string(bad->node) +
                                    "): " + bad->message);
    }

    const auto t0 = std::chrono::steady_clock::now();
    parity::PartialSolution result(g.node_count());
    if (algorithm == "swcp") {
        result = parity::swcp_solve(g);
    } else if (algorithm == "zielonka") {
        result = parity::to_partial(parity::zielonka_solve(g));
    } else if (algorithm == "brute") {
        result = parity::to_partial(parity::brute_force_solve(g));
    } else if (algorithm == "d1") {
        result = parity::to_partial(parity::solve_d1(g));
    } else {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (out_path.empty()) out_path = in_path + ".sol";
    out_path = resolve_out(out_path);
    ensure_parent_dir(out_path);
    parity::write_text_file(out_path, parity::write_solution(result));

    const int n = g.node_count();
    const int decided = result.decided_count();
    std::cout << algorithm << ": decided " << decided << "/" << n << " ("
              << (decided == n ? "complete" : "incomplete") << ") in " << secs << "s, wrote "
              << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& in_path) {
    const parity::ParityGame g = parity::parse_pgsolver(parity::read_text_file(in_path));
    if (const auto bad = parity::validate(g)) {
        throw std::invalid_argument("invalid game (node " + std::to_string(bad->node) +
                                    "): " + bad->message);
    }
    constexpr int kVerifyNodeBudget = 4000;
    if (g.node_count() > kVerifyNodeBudget) {
        throw std::invalid_argument("verify: game exceeds the oracle budget of " +
                                    std::to_string(kVerifyNodeBudget) + " nodes");
    }

    const parity::Solution truth = parity::zielonka_solve(g);
    const parity::PartialSolution swcp = parity::swcp_solve(g);

    int mismatches = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        if (swcp.value[v] != 0 && swcp.value[v] != parity::embed(truth.winner[v])) ++mismatches;
    }
    std::cout << "swcp vs zielonka: " << swcp.decided_count() << "/" << g.node_count()
              << " decided, " << mismatches << " disagreements\n";

    if (parity::strategy_pair_count(g) <= parity::kBruteForceLimit) {
        const parity::Solution brute = parity::brute_force_solve(g);
        int brute_mismatch = 0;
        for (int v = 0; v < g.node_count(); ++v) {
            brute_mismatch += (brute.winner[v] != truth.winner[v]);
        }
        std::cout << "brute vs zielonka: " << brute_mismatch << " disagreements\n";
        mismatches += brute_mismatch;
    }

    bool all_degree_one = true;
    for (int v = 0; v < g.node_count() && all_degree_one; ++v) {
        all_degree_one = (g.out_degree(v) == 1);
    }
    if (all_degree_one) {
        const parity::Solution d1 = parity::solve_d1(g);
        int d1_mismatch = 0;
        for (int v = 0; v < g.node_count(); ++v) {
            d1_mismatch += (d1.winner[v] != truth.winner[v]);
        }
        std::cout << "d1 vs zielonka: " << d1_mismatch << " disagreements\n";
        mismatches += d1_mismatch;
    }

    if (mismatches > 0) {
        std::cout << "VERIFY FAILED\n";
        return 2;
    }
    std::cout << "VERIFY OK\n";
    return 0;
}

int cmd_sweep(const std::string& kind, const std::string& grid_n, const std::string& grid_d,
              int trials, std::uint64_t seed, int priorities, int workers,
              std::string out_dir) {
    parity::SweepSpec spec;
    spec.kind = parity::parse_sweep_kind(kind);
    spec.n_grid = parse_int_list(grid_n);
    spec.d_grid = parse_degree_list(grid_d);
    spec.trials = trials;
    spec.base_seed = seed;
    spec.priority_count = priorities;

    const auto cells = parity::run_sweep(spec, workers);
    const std::string csv = parity::sweep_csv(spec, cells);
    const std::string svg = parity::svg_for_sweep(spec, cells);

    out_dir = resolve_out(out_dir);
    fs::create_directories(out_dir);
    const std::string stem = std::string("sweep_") + parity::sweep_kind_name(spec.kind);
    const std::string csv_path = (fs::path(out_dir) / (stem + ".csv")).string();
    const std::string svg_path = (fs::path(out_dir) / (stem + ".svg")).string();
    parity::write_text_file(csv_path, csv);
    parity::write_text_file(svg_path, svg);
    std::cout << "wrote " << csv_path << " and " << svg_path << " (" << cells.size()
              << " cells x " << trials << " trials)\n";
    return 0;
}

int cmd_threshold(int max_d, const std::string& out_path) {
    std::string csv = "d,eta,d_eta,closed_form,condition_holds\n";
    std::printf("%4s  %-14s  %-14s  %-14s  %s\n", "d", "eta(d-1,1/4)", "d*eta", "closed form",
                "verdict");
    for (int d = 2; d <= max_d; ++d) {
        const auto c = parity::threshold_check(d);
        const double eta = c.lhs_fixed_point / d;
        std::printf("%4d  %-14.10f  %-14.10f  %-14.10f  %s\n", d, eta, c.lhs_fixed_point,
                    c.lhs_closed_form, c.condition_holds ? "holds" : "fails");
        char row[160];
        std::snprintf(row, sizeof row, "%d,%.12g,%.12g,%.12g,%d\n", d, eta, c.lhs_fixed_point,
                      c.lhs_closed_form, c.condition_holds ? 1 : 0);
        csv += row;
    }
    std::printf("minimal sufficient degree: %d\n", parity::min_sufficient_degree());
    if (!out_path.empty()) {
        const std::string resolved = resolve_out(out_path);
        ensure_parent_dir(resolved);
        parity::write_text_file(resolved, csv);
        std::cout << "wrote " << resolved << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity-game toolkit: generation, solving, verification, experiment sweeps"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "generate a random game (PGSolver format)");
    std::string gen_config, gen_degree, gen_out = "game.pg";
    int gen_nodes = 0, gen_priorities = 0;
    bool gen_self_loops = false;
    std::uint64_t gen_seed = 0;
    gen->add_option("--config", gen_config, "key=value config file (flags override it)");
    gen->add_option("--nodes", gen_nodes, "number of nodes");
    gen->add_option("--degree", gen_degree, "out-degree: integer, ln_n, sqrt_n, or frac:A");
    gen->add_option("--priorities", gen_priorities, "number of distinct priorities (even)");
    gen->add_option("--seed", gen_seed, "64-bit seed");
    gen->add_flag("--self-loops", gen_self_loops, "allow self-loops");
    gen->add_option("--out", gen_out, "output path (default game.pg)");

    auto* solve = app.add_subcommand("solve", "solve a game file and write the solution");
    std::string solve_in, solve_algorithm = "swcp", solve_out;
    solve->add_option("input", solve_in, "game file (PGSolver format)")->required();
    solve->add_option("--algorithm", solve_algorithm, "swcp | zielonka | brute | d1");
    solve->add_option("--out", solve_out, "solution path (default <input>.sol)");

    auto* verify = app.add_subcommand("verify", "cross-check solvers on one game");
    std::string verify_in;
    verify->add_option("input", verify_in, "game file (PGSolver format)")->required();

    auto* sweep = app.add_subcommand("sweep", "run an experiment sweep, write CSV + SVG");
    std::string sweep_kind = "success_prob", sweep_grid_n = "1000", sweep_grid_d = "2,4,8";
    std::string sweep_out = ".";
    int sweep_trials = 20, sweep_priorities = 2, sweep_workers = 1;
    std::uint64_t sweep_seed = 0;
    sweep->add_option("--kind", sweep_kind,
                      "success_prob | self_winning_frac | nonsparse_loss | timing");
    sweep->add_option("--grid-n", sweep_grid_n, "comma-separated node counts");
    sweep->add_option("--grid-d", sweep_grid_d,
                      "comma-separated degrees or tags (ln_n, sqrt_n, frac:A)");
    sweep->add_option("--trials", sweep_trials, "trials per grid cell");
    sweep->add_option("--seed", sweep_seed, "base seed");
    sweep->add_option("--priorities", sweep_priorities, "number of distinct priorities (even)");
    sweep->add_option("--workers", sweep_workers, "worker threads (output is identical)");
    sweep->add_option("--out", sweep_out, "output directory");

    auto* threshold = app.add_subcommand("threshold", "print the sufficient-degree table");
    int threshold_max_d = 16;
    std::string threshold_out;
    threshold->add_option("--max-d", threshold_max_d, "largest degree to tabulate");
    threshold->add_option("--out", threshold_out, "also write the table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit 0, any parse error is usage
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(gen_config, gen_nodes, gen_degree, gen_priorities,
                                gen_self_loops, gen_seed, gen_out);
        }
        if (solve->parsed()) return cmd_solve(solve_in, solve_algorithm, solve_out);
        if (verify->parsed()) return cmd_verify(verify_in);
        if (sweep->parsed()) {
            return cmd_sweep(sweep_kind, sweep_grid_n, sweep_grid_d, sweep_trials, sweep_seed,
                             sweep_priorities, sweep_workers, sweep_out);
        }
        if (threshold->parsed()) return cmd_threshold(threshold_max_d, threshold_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
