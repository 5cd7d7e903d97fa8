#pragma once

#include <optional>
#include <string>

#include "srd/graph.hpp"
#include "srd/rational.hpp"

namespace srd {

// Where a cataloged closed-form value comes from.
enum class FormulaSource {
    theorem,      // stated and proved as a closed form
    figure,       // read off an illustrated labeling / worked example
    known_prior,  // established before this family study
};

inline const char* formula_source_name(FormulaSource s) {
    switch (s) {
        case FormulaSource::theorem: return "theorem";
        case FormulaSource::figure: return "figure";
        case FormulaSource::known_prior: return "known-prior";
    }
    return "?";
}

struct FormulaResult {
    std::optional<long long> value;
    std::optional<FormulaSource> source;

    bool covered() const { return value.has_value(); }

    static FormulaResult not_covered() { return {}; }
    static FormulaResult of(long long v, FormulaSource s) { return {v, s}; }
};

// Cataloged gamma_SR value for a family member. These are the claimed closed
// forms; the table command compares them against the exact engines and
// reports any disagreement instead of asserting it away.
inline FormulaResult gamma_formula(const FamilySpec& spec) {
    check_family_spec(spec);
    const long long n = spec.n;
    switch (spec.family) {
        case Family::path:
            return FormulaResult::of(2 * n / 3, FormulaSource::known_prior);
        case Family::cycle:
            return FormulaResult::of((2 * n + 2) / 3, FormulaSource::known_prior);
        case Family::complete:
            return FormulaResult::of(n == 3 ? 2 : 1, FormulaSource::known_prior);
        case Family::ladder:
            return FormulaResult::of((n + 2) / 2 + 1, FormulaSource::theorem);
        case Family::ladder_complement:
            if (n == 2) return FormulaResult::of(2, FormulaSource::figure);
            if (n == 3) return FormulaResult::of(3, FormulaSource::figure);
            return FormulaResult::of(2, FormulaSource::theorem);
        case Family::circular_ladder:
            if (n == 5) return FormulaResult::of(4, FormulaSource::figure);
            return FormulaResult::of((n + 2) / 2 + (n % 4 == 1 ? 2 : 1), FormulaSource::theorem);
        case Family::circular_ladder_complement:
            if (n == 3 || n == 4) return FormulaResult::of(4, FormulaSource::figure);
            return FormulaResult::of(3, FormulaSource::theorem);
    }
    return FormulaResult::not_covered();
}

// Degree-based lower bound:
//   gamma_SR(G) >= ((-2D^2 + 2Dd + D + 2d + 3) / ((D+1)(2D+d+3))) * N
// with D = max degree, d = min degree, N = vertex count.
inline Rational lower_bound_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        throw InvalidParameterError("degree bound requires a non-empty graph");
    DegreeStats s = degree_stats(g);
    const std::int64_t D = s.max_degree;
    const std::int64_t d = s.min_degree;
    const std::int64_t num = -2 * D * D + 2 * D * d + D + 2 * d + 3;
    const std::int64_t den = (D + 1) * (2 * D + d + 3);
    return Rational(num, den) * Rational(g.vertex_count());
}

// Size-based lower bound (3N - 4M)/2; requires no isolated vertex, in which
// case nullopt ("inapplicable") is returned.
inline std::optional<Rational> lower_bound_size(const Graph& g) {
    if (g.vertex_count() == 0)
        throw InvalidParameterError("size bound requires a non-empty graph");
    if (has_isolated_vertex(g)) return std::nullopt;
    return Rational(3LL * g.vertex_count() - 4LL * g.edge_count(), 2);
}

} // namespace srd
