#pragma once

#include <random>
#include <utility>
#include <vector>

#include "srd/graph.hpp"
#include "srd/labeling.hpp"

namespace srd::testutil {

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

// Erdos-Renyi style graph, retried until connected when asked.
inline Graph random_graph(std::mt19937& rng, int n, double p, bool require_connected) {
    std::bernoulli_distribution edge(p);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, std::move(edges));
        if (!require_connected || is_connected(g)) return g;
    }
}

inline Labeling random_labeling(std::mt19937& rng, int n) {
    static constexpr Label kChoices[3] = {-1, 1, 2};
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = kChoices[pick(rng)];
    return Labeling(std::move(labels));
}

inline Labeling labeling_of(std::vector<int> values) {
    std::vector<Label> labels(values.begin(), values.end());
    return Labeling(std::move(labels));
}

} // namespace srd::testutil
