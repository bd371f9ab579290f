#pragma once

#include <vector>

#include "hocolim/coslice.hpp"

namespace fixtures {

/// Pointed diagram over g: A is a point, every basepoint and arrow is
/// constant at vertex 0 of its target and all pointedness words are empty.
hocolim::ADiagramCx pointed_constant(const hocolim::Graph& g, const std::vector<hocolim::TwoComplex>& xs);

}  // namespace fixtures
