#pragma once

#include <string>

#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

/// DOT rendering with set-labels as node and edge captions.  Vertices appear
/// in graph order and edges in identifier order, so output is deterministic
/// and suitable for golden-file comparison.
inline std::string to_dot(const Graph& g, const Labeling* labeling = nullptr) {
    std::string out = "graph iasl {\n";
    for (const auto& id : g.vertices()) {
        out += "  \"" + id + "\" [label=\"";
        out += labeling ? labeling->label_of(id).to_string() : id;
        out += "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out += "  \"" + u + "\" -- \"" + v + "\"";
        if (labeling) out += " [label=\"" + induced_edge_label(*labeling, u, v).to_string() + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace iasl
