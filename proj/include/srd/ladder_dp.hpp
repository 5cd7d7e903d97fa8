#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "srd/certificate.hpp"
#include "srd/errors.hpp"
#include "srd/exact_solver.hpp"
#include "srd/graph.hpp"
#include "srd/labeling.hpp"

namespace srd {

struct LadderDpOptions {
    // Disables the steady-state fast-forward; only useful for tests that
    // cross-check the two sweep modes against each other.
    bool force_plain_sweep = false;
};

// ---------------------------------------------------------------------------
// Column-profile dynamic program over the two-vertex columns of LG_n / LC_n.
//
// A column's two SRDF constraints involve only the column itself and its two
// neighbor columns, so a state of (previous column labels, current column
// labels) is enough: the transition that appends column i+1 finalizes the
// checks of column i. Columns are swept left to right; the first column is
// checked at seed time (linear) or deferred to the ring closure (circular),
// the last at closure.
//
// The dp vector over the 81 states becomes periodic up to a constant shift
// after a short burn-in (the weight structure repeats mod 4), so for large n
// the sweep detects the period and skips ahead, keeping solve time constant
// per column count actually simulated. The witness is rebuilt from the
// backpointers of the simulated prefix, the detected period window repeated
// k times, and the simulated tail.
// ---------------------------------------------------------------------------

namespace detail::ldp {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;
inline constexpr int kPairs = 9;   // (top, bottom) labels of one column
inline constexpr int kStates = 81; // (previous pair, current pair)
inline constexpr int kAutoSweepMax = 64;   // plain sweep below this n
inline constexpr int kDetectCap = 4096;    // give up period detection past this

inline int label_value(int idx) { return idx == 0 ? -1 : idx; } // 0,1,2 -> -1,1,2
inline int pair_top(int p) { return p / 3; }
inline int pair_bottom(int p) { return p % 3; }

struct Tables {
    std::array<int, kPairs> pair_weight{};
    std::array<bool, 729> ok_mid{};  // [ (l*9+c)*9 + r ]
    std::array<bool, 81> ok_first{}; // [ c*9 + r ], no left column
    std::array<bool, 81> ok_last{};  // [ l*9 + c ], no right column

    static bool column_ok(int cur, int left, int right, bool has_left, bool has_right) {
        const int t = label_value(pair_top(cur));
        const int b = label_value(pair_bottom(cur));
        const int lt = has_left ? label_value(pair_top(left)) : 0;
        const int lb = has_left ? label_value(pair_bottom(left)) : 0;
        const int rt = has_right ? label_value(pair_top(right)) : 0;
        const int rb = has_right ? label_value(pair_bottom(right)) : 0;
        if (t + b + lt + rt < 1) return false;
        if (b + t + lb + rb < 1) return false;
        if (t == -1) {
            const bool two = b == 2 || (has_left && lt == 2) || (has_right && rt == 2);
            if (!two) return false;
        }
        if (b == -1) {
            const bool two = t == 2 || (has_left && lb == 2) || (has_right && rb == 2);
            if (!two) return false;
        }
        return true;
    }

    static const Tables& get() {
        static const Tables t = [] {
            Tables tt;
            for (int p = 0; p < kPairs; ++p)
                tt.pair_weight[static_cast<std::size_t>(p)] =
                    label_value(pair_top(p)) + label_value(pair_bottom(p));
            for (int l = 0; l < kPairs; ++l)
                for (int c = 0; c < kPairs; ++c)
                    for (int r = 0; r < kPairs; ++r)
                        tt.ok_mid[static_cast<std::size_t>((l * 9 + c) * 9 + r)] =
                            column_ok(c, l, r, true, true);
            for (int c = 0; c < kPairs; ++c)
                for (int r = 0; r < kPairs; ++r)
                    tt.ok_first[static_cast<std::size_t>(c * 9 + r)] =
                        column_ok(c, -1, r, false, true);
            for (int l = 0; l < kPairs; ++l)
                for (int c = 0; c < kPairs; ++c)
                    tt.ok_last[static_cast<std::size_t>(l * 9 + c)] =
                        column_ok(c, l, -1, true, false);
            return tt;
        }();
        return t;
    }
};

class Sweep {
public:
    Sweep(int n, bool fast_forward) : n_(n), ff_(fast_forward) {
        dp_.fill(kInf);
    }

    // Seeds a state (p1, p2) at column 2. Relaxes on repeat seeding.
    void seed(int state, int w) {
        if (w < dp_[static_cast<std::size_t>(state)]) dp_[static_cast<std::size_t>(state)] = w;
    }

    // Applies transitions until column n holds the final dp values.
    void run() {
        const Tables& T = Tables::get();
        while (virtual_col_ < n_ && !dead_) {
            if (ff_ && !jumped_) try_jump();
            if (virtual_col_ >= n_) break;
            advance(T);
        }
    }

    const std::array<int, kStates>& final_dp() const { return dp_; }
    std::uint64_t nodes() const { return nodes_; }

    // Rebuilds the full pair sequence p_1..p_n ending in final_state.
    std::vector<std::int8_t> reconstruct(int final_state) const {
        std::vector<std::int8_t> out;
        out.reserve(static_cast<std::size_t>(n_));
        int s = final_state;
        auto emit_range = [&](int hi, int lo) { // simulated columns hi down to lo
            for (int col = hi; col >= lo; --col) {
                out.push_back(static_cast<std::int8_t>(s % 9));
                const int x = bp_col(col)[static_cast<std::size_t>(s)];
                if (x < 0) throw std::logic_error("dp backpointer chain broken");
                s = x * 9 + s / 9;
            }
        };
        if (jumped_) {
            emit_range(sim_col_, jump_c_ + 1);
            for (int t = 0; t < jump_k_; ++t) emit_range(jump_c_, jump_cprime_ + 1);
            emit_range(jump_c_, 3);
        } else {
            emit_range(sim_col_, 3);
        }
        out.push_back(static_cast<std::int8_t>(s % 9)); // column 2
        out.push_back(static_cast<std::int8_t>(s / 9)); // column 1
        std::reverse(out.begin(), out.end());
        if (static_cast<int>(out.size()) != n_)
            throw std::logic_error("dp reconstruction produced wrong column count");
        return out;
    }

private:
    const std::array<std::int8_t, kStates>& bp_col(int col) const {
        return bp_[static_cast<std::size_t>(col - 3)];
    }

    void advance(const Tables& T) {
        std::array<int, kStates> nd;
        std::array<std::int8_t, kStates> nb;
        nd.fill(kInf);
        nb.fill(-1);
        bool any = false;
        for (int a = 0; a < kPairs; ++a) {
            for (int b = 0; b < kPairs; ++b) {
                const int w = dp_[static_cast<std::size_t>(a * 9 + b)];
                if (w >= kInf) continue;
                const bool* ok = &T.ok_mid[static_cast<std::size_t>((a * 9 + b) * 9)];
                for (int c = 0; c < kPairs; ++c) {
                    if (!ok[c]) continue;
                    const int ns = b * 9 + c;
                    const int nw = w + T.pair_weight[static_cast<std::size_t>(c)];
                    if (nw < nd[static_cast<std::size_t>(ns)]) {
                        nd[static_cast<std::size_t>(ns)] = nw;
                        nb[static_cast<std::size_t>(ns)] = static_cast<std::int8_t>(a);
                        any = true;
                    }
                }
                nodes_ += kPairs;
            }
        }
        dp_ = nd;
        bp_.push_back(nb);
        ++sim_col_;
        ++virtual_col_;
        if (!any) dead_ = true;
    }

    // Period detection: when the dp vector repeats up to a constant shift,
    // whole periods can be skipped by adding the accumulated shift.
    void try_jump() {
        if (static_cast<int>(snapshots_.size()) > kDetectCap) {
            ff_ = false;
            return;
        }
        int mn = kInf;
        for (int v : dp_) mn = std::min(mn, v);
        if (mn >= kInf) return;
        std::array<int, kStates> key;
        for (int i = 0; i < kStates; ++i)
            key[static_cast<std::size_t>(i)] =
                dp_[static_cast<std::size_t>(i)] >= kInf ? kInf : dp_[static_cast<std::size_t>(i)] - mn;
        auto [it, inserted] = snapshots_.try_emplace(key, std::pair<int, int>{virtual_col_, mn});
        if (inserted) return;
        const auto [prev_col, prev_min] = it->second;
        const int period = virtual_col_ - prev_col;
        const int k = (n_ - virtual_col_) / period;
        if (k < 1) return;
        const int delta = mn - prev_min;
        for (int& v : dp_)
            if (v < kInf) v += k * delta;
        jumped_ = true;
        jump_c_ = sim_col_;
        jump_cprime_ = sim_col_ - period;
        jump_k_ = k;
        virtual_col_ += k * period;
        snapshots_.clear();
    }

    int n_;
    bool ff_;
    bool dead_ = false;
    std::array<int, kStates> dp_;
    std::vector<std::array<std::int8_t, kStates>> bp_; // per simulated column, from column 3
    int sim_col_ = 2;
    int virtual_col_ = 2;
    bool jumped_ = false;
    int jump_c_ = 0, jump_cprime_ = 0, jump_k_ = 0;
    std::uint64_t nodes_ = 0;
    std::map<std::array<int, kStates>, std::pair<int, int>> snapshots_;
};

inline Labeling pairs_to_labeling(const std::vector<std::int8_t>& pairs) {
    std::vector<Label> labels(pairs.size() * 2);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const int p = pairs[i];
        labels[2 * i] = static_cast<Label>(label_value(pair_top(p)));
        labels[2 * i + 1] = static_cast<Label>(label_value(pair_bottom(p)));
    }
    return Labeling(std::move(labels));
}

} // namespace detail::ldp

inline Certificate solve_ladder_dp(int n, LadderDpOptions opts = {}) {
    if (n < 2) throw InvalidParameterError("solve_ladder_dp requires n >= 2");
    detail::Timer timer;
    using namespace detail::ldp;
    const Tables& T = Tables::get();
    const bool ff = !opts.force_plain_sweep && n > kAutoSweepMax;

    Sweep sweep(n, ff);
    for (int p1 = 0; p1 < kPairs; ++p1)
        for (int p2 = 0; p2 < kPairs; ++p2)
            if (T.ok_first[static_cast<std::size_t>(p1 * 9 + p2)])
                sweep.seed(p1 * 9 + p2,
                           T.pair_weight[static_cast<std::size_t>(p1)] +
                               T.pair_weight[static_cast<std::size_t>(p2)]);
    sweep.run();

    int best = kInf, best_state = -1;
    for (int s = 0; s < kStates; ++s) {
        if (!T.ok_last[static_cast<std::size_t>(s)]) continue;
        if (sweep.final_dp()[static_cast<std::size_t>(s)] < best) {
            best = sweep.final_dp()[static_cast<std::size_t>(s)];
            best_state = s;
        }
    }
    if (best_state < 0) throw std::logic_error("ladder dp found no valid labeling");

    Labeling labeling = pairs_to_labeling(sweep.reconstruct(best_state));
    if (weight(labeling) != best)
        throw std::logic_error("ladder dp witness weight mismatch");

    const Graph g = family_graph({Family::ladder, n});
    SearchStats stats{sweep.nodes(), timer.elapsed_ms()};
    return detail::make_certificate(g, std::move(labeling), SolveMethod::ladder_dp, true, stats);
}

inline Certificate solve_circular_ladder_dp(int n, LadderDpOptions opts = {}) {
    if (n < 3) throw InvalidParameterError("solve_circular_ladder_dp requires n >= 3");
    detail::Timer timer;
    using namespace detail::ldp;
    const Tables& T = Tables::get();
    const bool ff = !opts.force_plain_sweep && n > kAutoSweepMax;

    int best = kInf;
    Labeling best_labeling;
    std::uint64_t nodes = 0;

    // Ring closure: fix the first two column pairs, run the linear sweep with
    // the first column's checks deferred, then re-check columns n and 1 with
    // the wrap edges included.
    for (int p1 = 0; p1 < kPairs; ++p1) {
        for (int p2 = 0; p2 < kPairs; ++p2) {
            Sweep sweep(n, ff);
            sweep.seed(p1 * 9 + p2,
                       T.pair_weight[static_cast<std::size_t>(p1)] +
                           T.pair_weight[static_cast<std::size_t>(p2)]);
            sweep.run();
            nodes += sweep.nodes();
            int run_best = kInf, run_state = -1;
            for (int a = 0; a < kPairs; ++a) {
                for (int b = 0; b < kPairs; ++b) {
                    const int s = a * 9 + b;
                    const int w = sweep.final_dp()[static_cast<std::size_t>(s)];
                    if (w >= run_best) continue;
                    if (!T.ok_mid[static_cast<std::size_t>((a * 9 + b) * 9 + p1)]) continue;
                    if (!T.ok_mid[static_cast<std::size_t>((b * 9 + p1) * 9 + p2)]) continue;
                    run_best = w;
                    run_state = s;
                }
            }
            if (run_state >= 0 && run_best < best) {
                best = run_best;
                best_labeling = pairs_to_labeling(sweep.reconstruct(run_state));
            }
        }
    }
    if (best >= kInf) throw std::logic_error("circular ladder dp found no valid labeling");
    if (weight(best_labeling) != best)
        throw std::logic_error("circular ladder dp witness weight mismatch");

    const Graph g = family_graph({Family::circular_ladder, n});
    SearchStats stats{nodes, timer.elapsed_ms()};
    return detail::make_certificate(g, std::move(best_labeling), SolveMethod::ladder_dp, true,
                                    stats);
}

} // namespace srd
