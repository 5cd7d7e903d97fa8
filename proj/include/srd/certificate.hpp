#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "srd/graph.hpp"
#include "srd/labeling.hpp"

namespace srd {

enum class SolveMethod {
    exhaustive,
    branch_bound,
    ladder_dp,
    construction,
};

inline const char* solve_method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::exhaustive: return "exhaustive";
        case SolveMethod::branch_bound: return "branch-bound";
        case SolveMethod::ladder_dp: return "ladder-dp";
        case SolveMethod::construction: return "construction";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

// A concrete labeling plus its weight, witnessing an upper bound on gamma_SR;
// claimed_optimal means the producing engine proved the weight minimal.
struct Certificate {
    std::string graph_desc;
    std::optional<FamilySpec> family;
    std::string graph_hash;
    Labeling labeling;
    int weight = 0;
    bool claimed_optimal = false;
    SolveMethod method = SolveMethod::exhaustive;
    SearchStats stats;
};

} // namespace srd
