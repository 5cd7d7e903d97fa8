#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "srd/errors.hpp"
#include "srd/graph.hpp"

namespace srd {

// A vertex label of a signed Roman dominating function.
using Label = std::int8_t;

inline constexpr Label kMinusOne = -1;
inline constexpr Label kOne = 1;
inline constexpr Label kTwo = 2;

inline bool is_valid_label(int v) { return v == -1 || v == 1 || v == 2; }

// Total assignment V -> {-1, +1, +2}, one label per vertex index. Values are
// checked at construction, so a Labeling never holds anything else.
class Labeling {
public:
    Labeling() = default;

    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
        for (Label l : labels_)
            if (!is_valid_label(l))
                throw InvalidParameterError("label must be -1, 1 or 2, got " + std::to_string(l));
    }

    static Labeling all_plus_one(int n) {
        return Labeling(std::vector<Label>(static_cast<std::size_t>(n), kOne));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    Label operator[](int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<Label>& values() const { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

    // Lexicographic order under -1 < 1 < 2 in vertex-index order; used for
    // deterministic witness tie-breaking.
    friend bool operator<(const Labeling& a, const Labeling& b) {
        return a.labels_ < b.labels_;
    }

private:
    std::vector<Label> labels_;
};

inline int weight(const Labeling& l) {
    int w = 0;
    for (Label v : l.values()) w += v;
    return w;
}

struct PartitionCounts {
    int n_minus = 0;
    int n_one = 0;
    int n_two = 0;
};

inline PartitionCounts partition_counts(const Labeling& l) {
    PartitionCounts c;
    for (Label v : l.values()) {
        if (v == -1) ++c.n_minus;
        else if (v == 1) ++c.n_one;
        else ++c.n_two;
    }
    return c;
}

// Per-vertex diagnostics for the two SRDF conditions:
//   (1) every closed neighborhood sums to >= 1,
//   (2) every -1 vertex has a +2 neighbor.
struct ValidationReport {
    std::vector<int> closed_sums;           // per vertex
    std::vector<bool> cond2_ok;             // per vertex; meaningful where label == -1
    std::vector<int> cond1_violations;      // vertices with closed sum < 1
    std::vector<int> cond2_violations;      // -1 vertices with no +2 neighbor
    bool valid = false;
};

inline ValidationReport validate(const Graph& g, const Labeling& l) {
    if (l.size() != g.vertex_count())
        throw InvalidParameterError("labeling size " + std::to_string(l.size()) +
                                    " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
    ValidationReport r;
    const int n = g.vertex_count();
    r.closed_sums.resize(static_cast<std::size_t>(n));
    r.cond2_ok.resize(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v) {
        int sum = l[v];
        bool has_two_neighbor = false;
        for (int u : g.neighbors(v)) {
            sum += l[u];
            has_two_neighbor = has_two_neighbor || l[u] == 2;
        }
        r.closed_sums[static_cast<std::size_t>(v)] = sum;
        if (sum < 1) r.cond1_violations.push_back(v);
        if (l[v] == -1 && !has_two_neighbor) {
            r.cond2_ok[static_cast<std::size_t>(v)] = false;
            r.cond2_violations.push_back(v);
        }
    }
    r.valid = r.cond1_violations.empty() && r.cond2_violations.empty();
    return r;
}

inline bool is_valid_srdf(const Graph& g, const Labeling& l) {
    return validate(g, l).valid;
}

// ---------------------------------------------------------------------------
// Labeling text format: one "<vertex_index> <label>" line per vertex, sorted
// by index; '#' comments allowed.
// ---------------------------------------------------------------------------

inline void write_labeling(const Labeling& l, std::ostream& os) {
    for (int v = 0; v < l.size(); ++v)
        os << v << " " << static_cast<int>(l[v]) << "\n";
}

inline std::string to_labeling_string(const Labeling& l) {
    std::ostringstream os;
    write_labeling(l, os);
    return os.str();
}

inline Labeling read_labeling(std::istream& is) {
    std::vector<int> seen_values;
    std::string line;
    long long expected_index = 0;
    while (std::getline(is, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        long long idx, val;
        std::string rest;
        if (!(ls >> idx >> val)) throw ParseError("bad labeling line: '" + line + "'");
        if (ls >> rest) throw ParseError("trailing tokens in labeling line: '" + line + "'");
        if (idx != expected_index)
            throw ParseError("labeling lines must cover indices 0,1,2,... in order; got index " +
                             std::to_string(idx) + " where " + std::to_string(expected_index) +
                             " was expected");
        if (!is_valid_label(static_cast<int>(val)))
            throw ParseError("label must be -1, 1 or 2, got " + std::to_string(val));
        seen_values.push_back(static_cast<int>(val));
        ++expected_index;
    }
    std::vector<Label> labels(seen_values.begin(), seen_values.end());
    return Labeling(std::move(labels));
}

// Coordinate rendering "(row,col)=label ..." for the ladder families.
inline std::string coordinate_string(const Labeling& l) {
    std::ostringstream os;
    for (int v = 0; v < l.size(); ++v) {
        VertexCoord c = index_to_coord(v);
        if (v) os << " ";
        os << "(" << c.row << "," << c.col << ")=" << static_cast<int>(l[v]);
    }
    return os.str();
}

} // namespace srd
