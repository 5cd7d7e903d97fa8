#pragma once

#include <optional>
#include <ostream>

#include "srd/graph.hpp"
#include "srd/labeling.hpp"

namespace srd {

// DOT export. With a labeling, nodes carry the label value as text plus a
// three-way style class (minus / one / two) with a fill color per class.
inline void write_dot(const Graph& g, const std::optional<Labeling>& labeling, std::ostream& os) {
    os << "graph srd {\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v;
        if (labeling) {
            const int l = (*labeling)[v];
            const char* cls = l == -1 ? "minus" : (l == 1 ? "one" : "two");
            const char* color = l == -1 ? "#f4cccc" : (l == 1 ? "#d9ead3" : "#c9daf8");
            os << " [label=\"" << l << "\", class=\"" << cls << "\", style=filled, fillcolor=\""
               << color << "\"]";
        } else {
            os << " [label=\"" << v << "\"]";
        }
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
}

} // namespace srd
