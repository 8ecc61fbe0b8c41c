// Seeded random game generation: every node draws an owner uniformly, a
// priority uniformly from {0,...,c-1} with c even (so odd and even priorities
// are exactly balanced), and a uniform d-subset of allowed targets as its
// successor set. Each node uses its own derived RNG sub-stream, so the output
// is a pure function of the config and independent of evaluation order.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parity/core.hpp"
#include "parity/rng.hpp"

namespace parity {

// Degree as a constant or as a function of the node count.
struct DegreeSpec {
    enum class Kind { Const, LnN, SqrtN, Frac };

    Kind kind = Kind::Const;
    int value = 1;        // Const
    double alpha = 0.0;   // Frac

    static DegreeSpec constant(int d) { return {Kind::Const, d, 0.0}; }
    static DegreeSpec ln_n() { return {Kind::LnN, 0, 0.0}; }
    static DegreeSpec sqrt_n() { return {Kind::SqrtN, 0, 0.0}; }
    static DegreeSpec frac(double a) { return {Kind::Frac, 0, a}; }

    bool operator==(const DegreeSpec&) const = default;
};

// Evaluates a degree spec at n nodes: const(d) -> d, ln_n -> max(1, floor(ln n)),
// sqrt_n -> floor(sqrt n), frac(a) -> floor(a*n) clamped to [1, n-1].
inline int degree_of(const DegreeSpec& spec, int n) {
    switch (spec.kind) {
        case DegreeSpec::Kind::Const:
            return spec.value;
        case DegreeSpec::Kind::LnN:
            return std::max(1, static_cast<int>(std::floor(std::log(static_cast<double>(n)))));
        case DegreeSpec::Kind::SqrtN: {
            int r = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
            // Guard against floating-point off-by-one at perfect squares.
            while (static_cast<std::int64_t>(r + 1) * (r + 1) <= n) ++r;
            while (r > 0 && static_cast<std::int64_t>(r) * r > n) --r;
            return r;
        }
        case DegreeSpec::Kind::Frac: {
            int d = static_cast<int>(std::floor(spec.alpha * n));
            return std::clamp(d, 1, n - 1);
        }
    }
    return 1;
}

// Renders a degree spec the same way the CLI and config files accept it.
inline std::string degree_tag(const DegreeSpec& spec) {
    switch (spec.kind) {
        case DegreeSpec::Kind::Const: return std::to_string(spec.value);
        case DegreeSpec::Kind::LnN: return "ln_n";
        case DegreeSpec::Kind::SqrtN: return "sqrt_n";
        case DegreeSpec::Kind::Frac: {
            std::string s = "frac:" + std::to_string(spec.alpha);
            return s;
        }
    }
    return "1";
}

// Accepts "7", "ln_n", "sqrt_n", or "frac:0.5".
inline DegreeSpec parse_degree_spec(std::string_view text) {
    if (text == "ln_n") return DegreeSpec::ln_n();
    if (text == "sqrt_n") return DegreeSpec::sqrt_n();
    if (text.rfind("frac:", 0) == 0) {
        const double a = std::stod(std::string(text.substr(5)));
        if (!(a > 0.0) || a >= 1.0) throw std::invalid_argument("frac degree needs 0 < alpha < 1");
        return DegreeSpec::frac(a);
    }
    std::size_t used = 0;
    const int d = std::stoi(std::string(text), &used);
    if (used != text.size() || d < 1) {
        throw std::invalid_argument("bad degree '" + std::string(text) + "'");
    }
    return DegreeSpec::constant(d);
}

struct GenConfig {
    int node_count = 0;
    DegreeSpec degree = DegreeSpec::constant(2);
    int priority_count = 2;           // c, must be even
    bool allow_self_loops = false;
    std::uint64_t seed = 0;
};

// Validates a config against the model's invariants; throws on violation.
inline void check_config(const GenConfig& cfg) {
    if (cfg.node_count < 1) throw std::invalid_argument("node_count must be positive");
    if (cfg.priority_count < 2 || cfg.priority_count % 2 != 0) {
        throw std::invalid_argument("priority_count must be a positive even integer");
    }
    const int d = degree_of(cfg.degree, cfg.node_count);
    const int max_degree = cfg.allow_self_loops ? cfg.node_count : cfg.node_count - 1;
    if (d < 1 || d > max_degree) {
        throw std::invalid_argument("degree " + std::to_string(d) + " not in [1, " +
                                    std::to_string(max_degree) + "] for " +
                                    std::to_string(cfg.node_count) + " nodes");
    }
}

// Draws one game from the model. Per node v, a sub-stream seeded from
// (seed, v) supplies, in order: the owner, the priority, then the successor
// set as a uniform d-subset of the candidate targets (all nodes, minus v
// itself unless self-loops are allowed), sampled without replacement by
// Floyd's algorithm and stored in ascending order.
inline ParityGame generate(const GenConfig& cfg) {
    check_config(cfg);
    const int n = cfg.node_count;
    const int d = degree_of(cfg.degree, n);

    ParityGame g;
    g.owner.resize(static_cast<std::size_t>(n));
    g.prio.resize(static_cast<std::size_t>(n));
    g.offset.resize(static_cast<std::size_t>(n) + 1);
    g.succ.resize(static_cast<std::size_t>(n) * d);
    for (int v = 0; v <= n; ++v) g.offset[v] = static_cast<std::int32_t>(v) * d;

    std::vector<std::int32_t> sample;
    sample.reserve(static_cast<std::size_t>(d));
    std::vector<std::int32_t> cand;  // scratch for the dense-degree path
    for (int v = 0; v < n; ++v) {
        SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(v)));
        g.owner[v] = rng.next_below(2) ? Player::Odd : Player::Even;
        g.prio[v] = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(cfg.priority_count)));

        // Uniform d-subset of [0, pool), then mapped over the gap at v when
        // self-loops are excluded. Floyd's algorithm costs O(d^2) with the
        // linear membership probe below, so dense degrees switch to a partial
        // Fisher-Yates shuffle, O(pool); both draw exactly uniformly.
        const int pool = cfg.allow_self_loops ? n : n - 1;
        sample.clear();
        if (static_cast<std::int64_t>(d) * d <= 4 * static_cast<std::int64_t>(pool)) {
            for (int j = pool - d; j < pool; ++j) {
                const auto t = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
                if (std::find(sample.begin(), sample.end(), t) != sample.end()) {
                    sample.push_back(static_cast<std::int32_t>(j));
                } else {
                    sample.push_back(t);
                }
            }
        } else {
            cand.resize(static_cast<std::size_t>(pool));
            for (int i = 0; i < pool; ++i) cand[i] = i;
            for (int i = 0; i < d; ++i) {
                const auto j = i + static_cast<std::int32_t>(
                                       rng.next_below(static_cast<std::uint64_t>(pool - i)));
                std::swap(cand[i], cand[j]);
                sample.push_back(cand[i]);
            }
        }
        std::sort(sample.begin(), sample.end());
        for (int i = 0; i < d; ++i) {
            std::int32_t target = sample[i];
            if (!cfg.allow_self_loops && target >= v) ++target;
            g.succ[static_cast<std::size_t>(v) * d + i] = target;
        }
    }
    return g;
}

// Plain-text config: one "key=value" per line, '#' starts a comment.
// Keys: nodes, degree, priorities, self_loops, seed. Unknown keys are
// rejected so typos do not silently fall back to defaults.
inline GenConfig parse_gen_config(std::string_view text, GenConfig base = {}) {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key == "nodes") {
            base.node_count = std::stoi(value);
        } else if (key == "degree") {
            base.degree = parse_degree_spec(value);
        } else if (key == "priorities") {
            base.priority_count = std::stoi(value);
        } else if (key == "self_loops") {
            if (value == "true" || value == "1") base.allow_self_loops = true;
            else if (value == "false" || value == "0") base.allow_self_loops = false;
            else throw std::invalid_argument("config line " + std::to_string(line_no) + ": bad boolean");
        } else if (key == "seed") {
            base.seed = std::stoull(value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return base;
}

}  // namespace parity
