#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "srd/certificate.hpp"
#include "srd/errors.hpp"
#include "srd/formulas.hpp"
#include "srd/graph.hpp"
#include "srd/labeling.hpp"

namespace srd {

struct ExhaustiveOptions {
    int max_vertices = 16; // 3^16 ~ 43M labelings
};

struct BranchBoundOptions {
    int max_vertices = 40;
    int workers = 1; // >1 partitions the top branching levels across threads
};

namespace detail {

inline Certificate make_certificate(const Graph& g, Labeling labeling, SolveMethod method,
                                    bool optimal, SearchStats stats) {
    Certificate c;
    c.graph_desc = graph_description(g);
    c.family = g.family();
    c.graph_hash = graph_content_hash(g);
    c.weight = weight(labeling);
    c.labeling = std::move(labeling);
    c.claimed_optimal = optimal;
    c.method = method;
    c.stats = stats;
    return c;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Flattened adjacency for tight solver loops.
struct FlatAdj {
    std::vector<int> offsets; // size n+1
    std::vector<int> nbrs;

    explicit FlatAdj(const Graph& g) {
        const int n = g.vertex_count();
        offsets.resize(static_cast<std::size_t>(n) + 1, 0);
        nbrs.reserve(2 * static_cast<std::size_t>(g.edge_count()));
        for (int v = 0; v < n; ++v) {
            offsets[static_cast<std::size_t>(v)] = static_cast<int>(nbrs.size());
            for (int u : g.neighbors(v)) nbrs.push_back(u);
        }
        offsets[static_cast<std::size_t>(n)] = static_cast<int>(nbrs.size());
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive enumeration over all 3^n labelings. The independent oracle: no
// pruning, no shared code with the other engines. Returns the
// lexicographically smallest optimal labeling under -1 < 1 < 2 with vertex 0
// most significant (the enumeration order itself is lexicographic, so the
// first strictly better labeling found is the canonical witness).
// ---------------------------------------------------------------------------

inline Certificate solve_exhaustive(const Graph& g, ExhaustiveOptions opts = {}) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices)
        throw SizeLimitError("exhaustive solver capped at " + std::to_string(opts.max_vertices) +
                             " vertices, graph has " + std::to_string(n));
    detail::Timer timer;
    if (n == 0) {
        SearchStats stats{1, timer.elapsed_ms()};
        return detail::make_certificate(g, Labeling{}, SolveMethod::exhaustive, true, stats);
    }

    detail::FlatAdj adj(g);
    std::vector<Label> lab(static_cast<std::size_t>(n), kMinusOne);
    std::vector<Label> best_lab;
    int best = 0;
    bool found = false;
    std::uint64_t count = 0;

    for (;;) {
        ++count;
        int w = 0;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int s = lab[static_cast<std::size_t>(v)];
            bool two = false;
            for (int k = adj.offsets[static_cast<std::size_t>(v)];
                 k < adj.offsets[static_cast<std::size_t>(v) + 1]; ++k) {
                const Label lu = lab[static_cast<std::size_t>(adj.nbrs[static_cast<std::size_t>(k)])];
                s += lu;
                two = two || lu == 2;
            }
            if (s < 1) ok = false;
            else if (lab[static_cast<std::size_t>(v)] == -1 && !two) ok = false;
        }
        if (ok) {
            for (int v = 0; v < n; ++v) w += lab[static_cast<std::size_t>(v)];
            if (!found || w < best) {
                found = true;
                best = w;
                best_lab = lab;
            }
        }
        // odometer step: -1 -> 1 -> 2, vertex n-1 fastest
        int i = n - 1;
        while (i >= 0 && lab[static_cast<std::size_t>(i)] == 2) {
            lab[static_cast<std::size_t>(i)] = kMinusOne;
            --i;
        }
        if (i < 0) break;
        lab[static_cast<std::size_t>(i)] = lab[static_cast<std::size_t>(i)] == -1 ? kOne : kTwo;
    }

    if (!found)
        throw std::runtime_error("infeasible: no valid labeling exists"); // unreachable for
                                                                          // simple graphs
    SearchStats stats{count, timer.elapsed_ms()};
    return detail::make_certificate(g, Labeling(std::move(best_lab)), SolveMethod::exhaustive,
                                    true, stats);
}

// ---------------------------------------------------------------------------
// Branch and bound with propagation.
//   branch order: descending degree (index ascending on ties), labels tried
//   in order -1, 1, 2;
//   pruning: (a) a closed neighborhood that cannot reach sum >= 1 even if all
//   its unlabeled members take +2, (b) a -1 vertex whose neighbors are all
//   labeled with no +2 among them, (c) optimistic completion bound
//   weight + (-1)*unlabeled >= incumbent. The size-based floor is
//   precomputed once for early termination.
// ---------------------------------------------------------------------------

namespace detail {

struct BbShared {
    std::atomic<int> best_weight;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> done{false};
    int floor_weight;
    std::mutex witness_mutex;
    std::vector<Label> best_lab;
};

class BbWorker {
public:
    BbWorker(const Graph& g, const std::vector<int>& order, BbShared& shared)
        : adj_(g), order_(order), shared_(shared) {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        label_.assign(n, 0);
        closed_sum_.assign(n, 0);
        unassigned_closed_.assign(n, 0);
        unassigned_nbrs_.assign(n, 0);
        two_nbrs_.assign(n, 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            unassigned_closed_[static_cast<std::size_t>(v)] = g.degree(v) + 1;
            unassigned_nbrs_[static_cast<std::size_t>(v)] = g.degree(v);
        }
        remaining_ = g.vertex_count();
        weight_ = 0;
        nodes_ = 0;
    }

    // Applies a prefix of labels along the branch order; returns false if the
    // prefix is infeasible (callers then skip the whole subtree).
    bool apply_prefix(const std::vector<Label>& prefix) {
        for (std::size_t d = 0; d < prefix.size(); ++d)
            if (!assign(order_[d], prefix[d])) return false;
        return true;
    }

    void search(std::size_t depth) { dfs(depth); }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool assign(int u, Label l) {
        ++nodes_;
        label_[static_cast<std::size_t>(u)] = l;
        weight_ += l;
        --remaining_;
        closed_sum_[static_cast<std::size_t>(u)] += l;
        --unassigned_closed_[static_cast<std::size_t>(u)];
        for (int k = adj_.offsets[static_cast<std::size_t>(u)];
             k < adj_.offsets[static_cast<std::size_t>(u) + 1]; ++k) {
            const auto v = static_cast<std::size_t>(adj_.nbrs[static_cast<std::size_t>(k)]);
            closed_sum_[v] += l;
            --unassigned_closed_[v];
            --unassigned_nbrs_[v];
            if (l == 2) ++two_nbrs_[v];
        }
        return feasible_around(u);
    }

    void unassign(int u) {
        const Label l = label_[static_cast<std::size_t>(u)];
        label_[static_cast<std::size_t>(u)] = 0;
        weight_ -= l;
        ++remaining_;
        closed_sum_[static_cast<std::size_t>(u)] -= l;
        ++unassigned_closed_[static_cast<std::size_t>(u)];
        for (int k = adj_.offsets[static_cast<std::size_t>(u)];
             k < adj_.offsets[static_cast<std::size_t>(u) + 1]; ++k) {
            const auto v = static_cast<std::size_t>(adj_.nbrs[static_cast<std::size_t>(k)]);
            closed_sum_[v] -= l;
            ++unassigned_closed_[v];
            ++unassigned_nbrs_[v];
            if (l == 2) --two_nbrs_[v];
        }
    }

    bool vertex_feasible(std::size_t v) const {
        if (closed_sum_[v] + 2 * unassigned_closed_[v] < 1) return false;
        if (label_[v] == -1 && two_nbrs_[v] == 0 && unassigned_nbrs_[v] == 0) return false;
        return true;
    }

    bool feasible_around(int u) {
        if (!vertex_feasible(static_cast<std::size_t>(u))) return false;
        for (int k = adj_.offsets[static_cast<std::size_t>(u)];
             k < adj_.offsets[static_cast<std::size_t>(u) + 1]; ++k)
            if (!vertex_feasible(static_cast<std::size_t>(adj_.nbrs[static_cast<std::size_t>(k)])))
                return false;
        return true;
    }

    void dfs(std::size_t depth) {
        if (shared_.done.load(std::memory_order_relaxed)) return;
        const int best = shared_.best_weight.load(std::memory_order_relaxed);
        if (weight_ - remaining_ >= best) return; // optimistic bound
        if (remaining_ == 0) {
            report_solution();
            return;
        }
        const int u = order_[depth];
        for (Label l : {kMinusOne, kOne, kTwo}) {
            if (assign(u, l)) dfs(depth + 1);
            unassign(u);
            if (shared_.done.load(std::memory_order_relaxed)) return;
        }
    }

    void report_solution() {
        // All constraints are fully checked incrementally, so reaching a leaf
        // means the labeling is a valid SRDF.
        std::lock_guard<std::mutex> lock(shared_.witness_mutex);
        const int best = shared_.best_weight.load(std::memory_order_relaxed);
        if (weight_ < best || (weight_ == best && (shared_.best_lab.empty() ||
                                                   label_ < shared_.best_lab))) {
            shared_.best_weight.store(weight_, std::memory_order_relaxed);
            shared_.best_lab = label_;
            if (weight_ == shared_.floor_weight)
                shared_.done.store(true, std::memory_order_relaxed);
        }
    }

    FlatAdj adj_;
    const std::vector<int>& order_;
    BbShared& shared_;
    std::vector<Label> label_;
    std::vector<int> closed_sum_;
    std::vector<int> unassigned_closed_;
    std::vector<int> unassigned_nbrs_;
    std::vector<int> two_nbrs_;
    int remaining_;
    int weight_;
    std::uint64_t nodes_;
};

} // namespace detail

inline Certificate solve_branch_bound(const Graph& g, BranchBoundOptions opts = {}) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices)
        throw SizeLimitError("branch-and-bound solver capped at " +
                             std::to_string(opts.max_vertices) + " vertices, graph has " +
                             std::to_string(n));
    detail::Timer timer;
    if (n == 0) {
        SearchStats stats{0, timer.elapsed_ms()};
        return detail::make_certificate(g, Labeling{}, SolveMethod::branch_bound, true, stats);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    detail::BbShared shared;
    shared.best_weight.store(n); // all-(+1) upper bound
    shared.best_lab.assign(static_cast<std::size_t>(n), kOne);
    auto size_bound = lower_bound_size(g);
    shared.floor_weight = size_bound ? static_cast<int>(size_bound->ceil()) : -n;

    const int workers = std::max(1, opts.workers);
    std::uint64_t total_nodes = 0;

    if (workers == 1) {
        detail::BbWorker w(g, order, shared);
        w.search(0);
        total_nodes = w.nodes();
    } else {
        // Split the first few branching levels into tasks; label tuples are
        // handed to workers through an atomic cursor.
        std::size_t depth = 0;
        std::size_t count = 1;
        while (count < static_cast<std::size_t>(4 * workers) &&
               depth < static_cast<std::size_t>(n)) {
            count *= 3;
            ++depth;
        }
        std::vector<std::vector<Label>> tasks;
        std::vector<Label> cur;
        // All 3^depth prefixes; infeasible ones are rejected by apply_prefix.
        std::vector<Label> tuple(depth, kMinusOne);
        for (;;) {
            tasks.push_back(tuple);
            std::size_t i = depth;
            while (i > 0 && tuple[i - 1] == 2) {
                tuple[i - 1] = kMinusOne;
                --i;
            }
            if (i == 0) break;
            tuple[i - 1] = tuple[i - 1] == -1 ? kOne : kTwo;
        }

        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        std::vector<std::uint64_t> node_counts(static_cast<std::size_t>(workers), 0);
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                detail::BbWorker w(g, order, shared);
                std::uint64_t nodes = 0;
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= tasks.size()) break;
                    detail::BbWorker local = w; // fresh root state per task
                    if (local.apply_prefix(tasks[i])) local.search(depth);
                    nodes += local.nodes();
                    if (shared.done.load(std::memory_order_relaxed)) break;
                }
                node_counts[static_cast<std::size_t>(t)] = nodes;
            });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t c : node_counts) total_nodes += c;
    }

    SearchStats stats{total_nodes, timer.elapsed_ms()};
    return detail::make_certificate(g, Labeling(std::move(shared.best_lab)),
                                    SolveMethod::branch_bound, true, stats);
}

} // namespace srd
