// Experiment sweeps over (n, d) grids: the four figure-reproducing metrics,
// a deterministic parallel trial runner, and CSV emission.
//
// Reproducibility contract: every trial's seed derives only from (base_seed,
// n, effective degree, trial index), trials write into preassigned result
// slots, and the reduction runs in fixed grid order - so the CSV is
// byte-identical for a fixed spec no matter how many workers run the trials.
#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "parity/core.hpp"
#include "parity/generate.hpp"
#include "parity/rng.hpp"
#include "parity/self_reach.hpp"
#include "parity/swcp.hpp"
#include "parity/zielonka.hpp"

namespace parity {

enum class SweepKind { SuccessProb, SelfWinningFrac, NonsparseLoss, Timing };

inline const char* sweep_kind_name(SweepKind k) {
    switch (k) {
        case SweepKind::SuccessProb: return "success_prob";
        case SweepKind::SelfWinningFrac: return "self_winning_frac";
        case SweepKind::NonsparseLoss: return "nonsparse_loss";
        case SweepKind::Timing: return "timing";
    }
    return "?";
}

inline SweepKind parse_sweep_kind(const std::string& s) {
    if (s == "success_prob") return SweepKind::SuccessProb;
    if (s == "self_winning_frac") return SweepKind::SelfWinningFrac;
    if (s == "nonsparse_loss") return SweepKind::NonsparseLoss;
    if (s == "timing") return SweepKind::Timing;
    throw std::invalid_argument("unknown sweep kind '" + s + "'");
}

struct SweepSpec {
    SweepKind kind = SweepKind::SuccessProb;
    std::vector<int> n_grid;
    std::vector<DegreeSpec> d_grid;
    int trials = 1;
    std::uint64_t base_seed = 0;
    int priority_count = 2;
};

struct SweepCell {
    int n = 0;
    int d_effective = 0;
    int trials = 0;
    double metric = 0.0;
    double stderr_value = 0.0;
    std::string kind_label;
    std::uint64_t cell_seed = 0;
    std::vector<std::pair<std::string, double>> extras;
};

// Ground truth for the non-sparse metric comes from the exact solver up to
// this many nodes; larger cells fall back to reach-certification, whose
// uncertified fraction is only an upper bound on the loss and is labeled
// "<kind>_bound" in the output.
inline constexpr int kNonsparseOracleBudget = 800;

namespace detail {

inline std::uint64_t cell_seed(std::uint64_t base, int n, int d_eff) {
    return derive_seed(derive_seed(base, static_cast<std::uint64_t>(n)),
                       static_cast<std::uint64_t>(d_eff));
}

struct TrialStats {
    double mean = 0.0;
    double stderr_value = 0.0;
};

inline TrialStats reduce(const std::vector<double>& xs) {
    TrialStats st;
    const auto t = static_cast<double>(xs.size());
    for (double x : xs) st.mean += x;
    st.mean /= t;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - st.mean) * (x - st.mean);
        st.stderr_value = std::sqrt(ss / (t - 1) / t);
    }
    return st;
}

// Runs one trial of a statistical sweep kind; returns the primary metric and,
// for success sweeps, the whole-game success indicator through `aux`.
inline double run_trial(const SweepSpec& spec, int n, const DegreeSpec& d,
                        std::uint64_t trial_seed, double* aux) {
    GenConfig cfg;
    cfg.node_count = n;
    cfg.degree = d;
    cfg.priority_count = spec.priority_count;
    cfg.seed = trial_seed;
    const ParityGame g = generate(cfg);

    switch (spec.kind) {
        case SweepKind::SuccessProb: {
            const PartialSolution s = swcp_solve(g);
            if (aux) *aux = s.fully_solved() ? 1.0 : 0.0;
            return static_cast<double>(s.decided_count()) / n;
        }
        case SweepKind::SelfWinningFrac: {
            const SelfWinningReport r = find_self_winning(g);
            return static_cast<double>(r.marked_count()) / n;
        }
        case SweepKind::NonsparseLoss: {
            if (n <= kNonsparseOracleBudget) {
                const Solution sol = zielonka_solve(g);
                int lost = 0;
                for (int v = 0; v < n; ++v) lost += (sol.winner[v] != g.owner[v]);
                return static_cast<double>(lost) / n;
            }
            // Marked set identical with or without anchor skipping; skipping
            // avoids rescanning the dense filters this regime produces.
            SelfWinningOptions opts;
            opts.skip_marked_anchors = true;
            const auto labels = self_reach_labels(g, find_self_winning(g, opts));
            int uncertified = 0;
            for (int v = 0; v < n; ++v) {
                uncertified += (labels[v] == SelfReachLabel::Unknown);
            }
            return static_cast<double>(uncertified) / n;
        }
        case SweepKind::Timing:
            break;  // handled separately, sequentially
    }
    throw std::logic_error("run_trial: bad kind");
}

}  // namespace detail

// Runs the sweep and returns one cell per grid point, in n-major, d-minor
// order. Statistical kinds may fan trials out over `workers` threads; the
// timing kind always runs sequentially (one warm-up solve per cell is
// discarded, then each trial is measured on the monotonic clock).
inline std::vector<SweepCell> run_sweep(const SweepSpec& spec, int workers = 1) {
    if (spec.trials < 1) throw std::invalid_argument("sweep needs trials >= 1");
    if (spec.n_grid.empty() || spec.d_grid.empty()) {
        throw std::invalid_argument("sweep grids must be nonempty");
    }

    struct CellPlan {
        int n;
        int d_eff;
        std::uint64_t seed;
    };
    std::vector<CellPlan> plan;
    for (int n : spec.n_grid) {
        for (const DegreeSpec& d : spec.d_grid) {
            const int d_eff = degree_of(d, n);
            plan.push_back({n, d_eff, detail::cell_seed(spec.base_seed, n, d_eff)});
        }
    }
    const int cells = static_cast<int>(plan.size());
    const int trials = spec.trials;

    std::vector<std::vector<double>> metric(cells, std::vector<double>(trials, 0.0));
    std::vector<std::vector<double>> aux(cells, std::vector<double>(trials, 0.0));

    if (spec.kind == SweepKind::Timing) {
        for (int c = 0; c < cells; ++c) {
            GenConfig cfg;
            cfg.node_count = plan[c].n;
            cfg.degree = DegreeSpec::constant(plan[c].d_eff);
            cfg.priority_count = spec.priority_count;
            cfg.seed = derive_seed(plan[c].seed, 0);
            swcp_solve(generate(cfg));  // warm-up, discarded
            for (int t = 0; t < trials; ++t) {
                cfg.seed = derive_seed(plan[c].seed, static_cast<std::uint64_t>(t));
                const ParityGame g = generate(cfg);
                const auto t0 = std::chrono::steady_clock::now();
                const PartialSolution s = swcp_solve(g);
                // Keep the solve observable so the timed call cannot be elided.
                asm volatile("" : : "g"(s.value.data()) : "memory");
                const auto t1 = std::chrono::steady_clock::now();
                metric[c][t] = std::chrono::duration<double>(t1 - t0).count();
            }
        }
    } else {
        const long total = static_cast<long>(cells) * trials;
        std::atomic<long> cursor{0};
        const auto body = [&]() {
            for (long task = cursor.fetch_add(1); task < total; task = cursor.fetch_add(1)) {
                const int c = static_cast<int>(task / trials);
                const int t = static_cast<int>(task % trials);
                const std::uint64_t trial_seed =
                    derive_seed(plan[c].seed, static_cast<std::uint64_t>(t));
                double a = 0.0;
                metric[c][t] = detail::run_trial(spec, plan[c].n,
                                                 DegreeSpec::constant(plan[c].d_eff),
                                                 trial_seed, &a);
                aux[c][t] = a;
            }
        };
        if (workers <= 1) {
            body();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(body);
            for (auto& th : pool) th.join();
        }
    }

    std::vector<SweepCell> out;
    out.reserve(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c) {
        SweepCell cell;
        cell.n = plan[c].n;
        cell.d_effective = plan[c].d_eff;
        cell.trials = trials;
        cell.cell_seed = plan[c].seed;
        const auto st = detail::reduce(metric[c]);
        cell.metric = st.mean;
        cell.stderr_value = st.stderr_value;
        cell.kind_label = sweep_kind_name(spec.kind);
        switch (spec.kind) {
            case SweepKind::SuccessProb: {
                const auto ag = detail::reduce(aux[c]);
                cell.extras.emplace_back("metric_game", ag.mean);
                cell.extras.emplace_back("stderr_game", ag.stderr_value);
                break;
            }
            case SweepKind::NonsparseLoss:
                if (cell.n > kNonsparseOracleBudget) cell.kind_label += "_bound";
                break;
            case SweepKind::Timing: {
                const double m = static_cast<double>(cell.n) * cell.d_effective;
                cell.extras.emplace_back("n2", static_cast<double>(cell.n) * cell.n);
                cell.extras.emplace_back("nm", static_cast<double>(cell.n) * m);
                break;
            }
            case SweepKind::SelfWinningFrac:
                break;
        }
        out.push_back(std::move(cell));
    }
    return out;
}

// CSV with the stable seven-column prefix "n,d,trials,metric,stderr,kind,seed";
// kind-specific extra columns follow the prefix.
inline std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
    std::string out = "n,d,trials,metric,stderr,kind,seed";
    switch (spec.kind) {
        case SweepKind::SuccessProb: out += ",metric_game,stderr_game"; break;
        case SweepKind::Timing: out += ",n2,nm"; break;
        default: break;
    }
    out += '\n';
    char buf[64];
    const auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.10g", x);
        out += buf;
    };
    for (const SweepCell& c : cells) {
        out += std::to_string(c.n);
        out += ',';
        out += std::to_string(c.d_effective);
        out += ',';
        out += std::to_string(c.trials);
        out += ',';
        num(c.metric);
        out += ',';
        num(c.stderr_value);
        out += ',';
        out += c.kind_label;
        out += ',';
        out += std::to_string(c.cell_seed);
        for (const auto& [_, value] : c.extras) {
            out += ',';
            num(value);
        }
        out += '\n';
    }
    return out;
}

// Named wrappers matching the four figure metrics; each checks the kind and
// returns the finished CSV.
inline std::string sweep_success_prob(const SweepSpec& spec, int workers = 1) {
    if (spec.kind != SweepKind::SuccessProb) throw std::invalid_argument("kind mismatch");
    return sweep_csv(spec, run_sweep(spec, workers));
}
inline std::string sweep_self_winning(const SweepSpec& spec, int workers = 1) {
    if (spec.kind != SweepKind::SelfWinningFrac) throw std::invalid_argument("kind mismatch");
    return sweep_csv(spec, run_sweep(spec, workers));
}
inline std::string sweep_nonsparse(const SweepSpec& spec, int workers = 1) {
    if (spec.kind != SweepKind::NonsparseLoss) throw std::invalid_argument("kind mismatch");
    return sweep_csv(spec, run_sweep(spec, workers));
}
inline std::string sweep_timing(const SweepSpec& spec) {
    if (spec.kind != SweepKind::Timing) throw std::invalid_argument("kind mismatch");
    return sweep_csv(spec, run_sweep(spec, 1));
}

}  // namespace parity
