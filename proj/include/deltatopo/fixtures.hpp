#pragma once

#include <optional>

#include "deltatopo/delta_set.hpp"

namespace delta::fixtures {

// One 0-simplex, one 1-simplex with both faces equal: the circle.
DeltaSet circle();
// One simplex in each dimension 0..2, all triangle faces the edge: the
// dunce hat (contractible, not collapsible).
DeltaSet dunce_hat();
// Boundary of a triangle as a simplicial complex.
DeltaSet triangle_circle();
// Three vertices and three edges in a cycle; carries a free Z/3 rotation.
DeltaSet three_cycle();
DeltaSet empty();

// Built-in lookup: circle, dunce-hat, triangle-circle, three-cycle, empty,
// delta-N.
std::optional<DeltaSet> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace delta::fixtures
