// Text serialization: the PGSolver game format and a per-node solution format.
//
// Writer contract (bit-exact): header "parity <max_node_id>;", then one line
// per node in ascending id order, "<id> <priority> <owner> <s0>,<s1>,...;"
// with owner 0 = Even / 1 = Odd, successors ascending, LF endings, no
// trailing spaces. The parser is lenient: arbitrary whitespace, any record
// order, and optional quoted node names are accepted.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parity/core.hpp"
#include "parity/solution.hpp"

namespace parity {

inline std::string write_pgsolver(const ParityGame& g) {
    const int n = g.node_count();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * 16 + 16);
    out += "parity ";
    out += std::to_string(n - 1);
    out += ";\n";
    std::vector<std::int32_t> row;
    for (int v = 0; v < n; ++v) {
        row.assign(g.successors(v).begin(), g.successors(v).end());
        std::sort(row.begin(), row.end());
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(g.prio[v]);
        out += ' ';
        out += (g.owner[v] == Player::Odd) ? '1' : '0';
        out += ' ';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(row[i]);
        }
        out += ";\n";
    }
    return out;
}

namespace detail {

// Minimal whitespace-skipping token scanner over the input text.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::int64_t integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) fail("expected integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    std::string word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected keyword");
        return std::string(text_.substr(start, pos_ - start));
    }

    // Skips an optional double-quoted string (node names in some files).
    void skip_quoted() {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '"') return;
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
        if (pos_ >= text_.size()) fail("unterminated quoted name");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("parse error at line " + std::to_string(line_) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

}  // namespace detail

inline ParityGame parse_pgsolver(std::string_view text) {
    detail::Scanner sc(text);
    if (sc.word() != "parity") sc.fail("missing 'parity' header");
    const std::int64_t max_id = sc.integer();
    if (max_id < 0) sc.fail("negative max node id");
    sc.expect(';');

    const int n = static_cast<int>(max_id) + 1;
    std::vector<std::vector<std::int32_t>> lists(static_cast<std::size_t>(n));
    std::vector<Player> owners(static_cast<std::size_t>(n), Player::Even);
    std::vector<std::int32_t> prios(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);

    while (!sc.at_end()) {
        const std::int64_t id = sc.integer();
        if (id < 0 || id >= n) sc.fail("node id outside header range");
        if (seen[static_cast<std::size_t>(id)]) sc.fail("duplicate node record");
        seen[static_cast<std::size_t>(id)] = true;

        const std::int64_t prio = sc.integer();
        if (prio < 0) sc.fail("negative priority");
        const std::int64_t owner = sc.integer();
        if (owner != 0 && owner != 1) sc.fail("owner must be 0 or 1");

        auto& row = lists[static_cast<std::size_t>(id)];
        row.push_back(static_cast<std::int32_t>(sc.integer()));
        while (sc.peek() == ',') {
            sc.expect(',');
            row.push_back(static_cast<std::int32_t>(sc.integer()));
        }
        sc.skip_quoted();
        sc.expect(';');

        owners[static_cast<std::size_t>(id)] = owner ? Player::Odd : Player::Even;
        prios[static_cast<std::size_t>(id)] = static_cast<std::int32_t>(prio);
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) {
            throw std::runtime_error("parse error: node " + std::to_string(v) + " has no record");
        }
    }
    return ParityGame::from_lists(lists, std::move(owners), std::move(prios));
}

// Solution format: one line per node, "<id> <winner> [witness]", where the
// winner is 0 (Even), 1 (Odd) or ? (undecided); the witness successor is
// present only for decided nodes that recorded one.
inline std::string write_solution(const PartialSolution& s) {
    std::string out;
    for (std::size_t v = 0; v < s.value.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        if (s.value[v] == 0) {
            out += '?';
        } else {
            out += (s.value[v] > 0) ? '1' : '0';
        }
        if (s.witness[v] != kNoWitness) {
            out += ' ';
            out += std::to_string(s.witness[v]);
        }
        out += '\n';
    }
    return out;
}

inline PartialSolution parse_solution(std::string_view text) {
    std::vector<std::int8_t> values;
    std::vector<std::int32_t> witnesses;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::int64_t id = -1;
        std::string win;
        if (!(row >> id >> win)) {
            throw std::runtime_error("solution parse error at line " + std::to_string(line_no));
        }
        if (id != static_cast<std::int64_t>(values.size())) {
            throw std::runtime_error("solution parse error: ids must be dense and ascending");
        }
        std::int8_t value = 0;
        if (win == "0") value = -1;
        else if (win == "1") value = +1;
        else if (win != "?") {
            throw std::runtime_error("solution parse error: bad winner '" + win + "'");
        }
        std::int64_t witness = kNoWitness;
        row >> witness;
        values.push_back(value);
        witnesses.push_back(static_cast<std::int32_t>(witness));
    }
    PartialSolution s(static_cast<int>(values.size()));
    s.value = std::move(values);
    s.witness = std::move(witnesses);
    return s;
}

// File helpers; I/O failures throw with the offending path in the message.
inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failure: " + path);
    return std::move(buf).str();
}

inline void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace parity
