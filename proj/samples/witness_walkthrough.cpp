// Builds a tiassl witness for X = {0,1,2}, prints the classification table,
// the bounds audit and a DOT rendering.  Minimal end-to-end library usage.

#include <iostream>

#include "iasl/bounds.hpp"
#include "iasl/construct.hpp"
#include "iasl/dot.hpp"
#include "iasl/labeling.hpp"

int main() {
    iasl::GroundSet x = iasl::GroundSet::parse("0,1,2");
    iasl::ConstructedWitness w = iasl::construct_tiass_graph(x);

    std::cout << "witness for X = " << x.to_string() << " ("
              << w.graph.vertex_count() << " vertices, " << w.graph.edge_count() << " edges)\n\n";
    std::cout << iasl::classify(w.graph, w.labeling).to_table() << "\n";

    iasl::BoundsReport bounds = iasl::tiassl_bounds(x);
    std::cout << bounds.to_table() << "\n";
    std::cout << iasl::audit(w.graph, w.labeling, bounds).to_table() << "\n";
    std::cout << iasl::to_dot(w.graph, &w.labeling);
    return 0;
}
