#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "srd/errors.hpp"

namespace srd {

// ---------------------------------------------------------------------------
// Graph families
// ---------------------------------------------------------------------------

enum class Family {
    path,
    cycle,
    complete,
    ladder,
    circular_ladder,
    ladder_complement,
    circular_ladder_complement,
};

struct FamilySpec {
    Family family;
    int n;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::ladder: return "ladder";
        case Family::circular_ladder: return "circular-ladder";
        case Family::ladder_complement: return "ladder-complement";
        case Family::circular_ladder_complement: return "circular-ladder-complement";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::ladder,
                     Family::circular_ladder, Family::ladder_complement,
                     Family::circular_ladder_complement}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

inline int family_min_n(Family f) {
    switch (f) {
        case Family::path: return 1;
        case Family::cycle: return 3;
        case Family::complete: return 1;
        case Family::ladder: return 2;
        case Family::circular_ladder: return 3;
        case Family::ladder_complement: return 2;
        case Family::circular_ladder_complement: return 3;
    }
    return 1;
}

inline void check_family_spec(const FamilySpec& spec) {
    if (spec.n < family_min_n(spec.family)) {
        throw InvalidParameterError(std::string(family_name(spec.family)) +
                                    " requires n >= " + std::to_string(family_min_n(spec.family)) +
                                    ", got n = " + std::to_string(spec.n));
    }
}

// The two ladder families use a fixed (row, column) <-> linear index bijection
// so labelings, figures, and the column DP all agree on vertex order.
// row in {1,2}, column in 1..n, index = (column-1)*2 + (row-1).
struct VertexCoord {
    int row;
    int col;

    friend bool operator==(const VertexCoord&, const VertexCoord&) = default;
};

inline int coord_to_index(VertexCoord c) { return (c.col - 1) * 2 + (c.row - 1); }
inline int coord_to_index(int row, int col) { return (col - 1) * 2 + (row - 1); }
inline VertexCoord index_to_coord(int index) { return {index % 2 + 1, index / 2 + 1}; }

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

// Immutable undirected simple graph. Adjacency lists are kept sorted so that
// equality checks and text output are deterministic.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges,
                            std::optional<FamilySpec> family = std::nullopt) {
        if (vertex_count < 0) throw InvalidParameterError("negative vertex count");
        Graph g;
        g.n_ = vertex_count;
        g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw InvalidParameterError("edge endpoint out of range");
            if (u == v) throw InvalidParameterError("self-loop not allowed");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw InvalidParameterError("duplicate edge not allowed");
        }
        g.m_ = static_cast<int>(edges.size());
        g.family_ = family;
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    const std::optional<FamilySpec>& family() const { return family_; }

    Graph with_family(FamilySpec spec) const {
        Graph g = *this;
        g.family_ = spec;
        return g;
    }

    // Canonical edge list: u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Equality ignores family metadata; two graphs are equal iff they have the
    // same vertex count and identical adjacency.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::optional<FamilySpec> family_;
};

// Checks the structural invariants every constructor must maintain. Tests run
// this on all generated graphs; it throws on the first violation.
inline void check_graph_invariants(const Graph& g) {
    long long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        if (!std::is_sorted(nb.begin(), nb.end()))
            throw std::logic_error("adjacency list not sorted");
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::logic_error("duplicate neighbor");
        for (int u : nb) {
            if (u == v) throw std::logic_error("self-loop");
            if (u < 0 || u >= g.vertex_count()) throw std::logic_error("neighbor out of range");
            if (!g.has_edge(u, v)) throw std::logic_error("asymmetric adjacency");
        }
        degree_sum += nb.size();
    }
    if (degree_sum != 2LL * g.edge_count())
        throw std::logic_error("degree sum != 2|E|");
}

// ---------------------------------------------------------------------------
// Base constructors
// ---------------------------------------------------------------------------

inline Graph path(int n) {
    if (n < 1) throw InvalidParameterError("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges), FamilySpec{Family::path, n});
}

inline Graph cycle(int n) {
    if (n < 3) throw InvalidParameterError("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return Graph::from_edges(n, std::move(edges), FamilySpec{Family::cycle, n});
}

inline Graph complete(int n) {
    if (n < 1) throw InvalidParameterError("complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges), FamilySpec{Family::complete, n});
}

// ---------------------------------------------------------------------------
// Products and complements
// ---------------------------------------------------------------------------

// Vertex (a, b) with a in V(g), b in V(h) maps to linear index b*|V(g)| + a.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(ng) * h.edge_count() +
                  static_cast<std::size_t>(nh) * g.edge_count());
    for (int b = 0; b < nh; ++b)
        for (auto [u, v] : g.edges())
            edges.emplace_back(b * ng + u, b * ng + v);
    for (auto [b1, b2] : h.edges())
        for (int a = 0; a < ng; ++a)
            edges.emplace_back(b1 * ng + a, b2 * ng + a);
    return Graph::from_edges(ng * nh, std::move(edges));
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Family factory
// ---------------------------------------------------------------------------

inline Graph family_graph(const FamilySpec& spec) {
    check_family_spec(spec);
    const int n = spec.n;
    switch (spec.family) {
        case Family::path: return path(n);
        case Family::cycle: return cycle(n);
        case Family::complete: return complete(n);
        case Family::ladder:
            // P_2 as the first factor realizes index = (col-1)*2 + (row-1).
            return cartesian_product(path(2), path(n)).with_family(spec);
        case Family::circular_ladder:
            return cartesian_product(path(2), cycle(n)).with_family(spec);
        case Family::ladder_complement:
            return complement(family_graph({Family::ladder, n})).with_family(spec);
        case Family::circular_ladder_complement:
            return complement(family_graph({Family::circular_ladder, n})).with_family(spec);
    }
    throw InvalidParameterError("unknown family");
}

// ---------------------------------------------------------------------------
// Degree statistics
// ---------------------------------------------------------------------------

struct DegreeStats {
    int min_degree;
    int max_degree;
    std::vector<int> degrees;
};

inline DegreeStats degree_stats(const Graph& g) {
    if (g.vertex_count() == 0)
        throw InvalidParameterError("degree_stats requires a non-empty graph");
    DegreeStats s{g.degree(0), g.degree(0), {}};
    s.degrees.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        s.degrees.push_back(d);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
    }
    return s;
}

inline bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Edge-list text format
//   line 1: "<vertex_count> <edge_count>", then one "u v" line per edge with
//   u < v, sorted lexicographically. Lines starting with '#' are comments.
// ---------------------------------------------------------------------------

inline void write_edge_list(const Graph& g, std::ostream& os) {
    if (g.family())
        os << "# family: " << family_name(g.family()->family) << " n=" << g.family()->n << "\n";
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

inline std::string to_edge_list_string(const Graph& g) {
    std::ostringstream os;
    write_edge_list(g, os);
    return os.str();
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError("empty graph file");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad header line, expected '<vertex_count> <edge_count>'");
    std::string rest;
    if (hs >> rest) throw ParseError("trailing tokens in header line");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el)) throw ParseError("unexpected end of file in edge list");
        std::istringstream es(el);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError("bad edge line: '" + el + "'");
        if (es >> rest) throw ParseError("trailing tokens in edge line: '" + el + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range: '" + el + "'");
        if (u == v) throw ParseError("self-loop in edge list: '" + el + "'");
        edges.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
    }
    std::string extra;
    if (next_data_line(extra)) throw ParseError("trailing content after edge list");
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const InvalidParameterError& e) {
        throw ParseError(e.what());
    }
}

// FNV-1a over the canonical edge list (header + edges, no comments), so two
// equal graphs hash equal regardless of how they were built.
inline std::string graph_content_hash(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    const std::string text = os.str();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

// One-line human description used in certificates and reports.
inline std::string graph_description(const Graph& g) {
    std::string desc;
    if (g.family()) {
        desc = std::string(family_name(g.family()->family)) +
               " n=" + std::to_string(g.family()->n);
    } else {
        desc = graph_content_hash(g);
    }
    desc += " [" + std::to_string(g.vertex_count()) + " vertices, " +
            std::to_string(g.edge_count()) + " edges]";
    return desc;
}

} // namespace srd
