#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hocolim/coslice.hpp"
#include "hocolim/setmodel.hpp"

namespace hocolim {

std::uint64_t splitmix64(std::uint64_t x);

/// The stream for case `index` of a sweep seeded with `seed`.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform in [lo, hi].
std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi);
bool coin(std::mt19937_64& rng, double p = 0.5);

struct GenBounds {
  std::size_t max_vertices = 4;  // shape vertices
  std::size_t max_edges = 4;     // shape edges
  std::size_t max_set = 3;       // set-level object size
  std::size_t max_cells = 4;     // complex cells per dimension
  std::size_t max_base = 2;      // |A| (set level) or vertices of A
};

/// Any multigraph with 1..max_vertices vertices and 0..max_edges edges
/// (loops and parallel edges allowed).
Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);
/// A tree on exactly n vertices with random edge directions.
Graph random_tree(std::mt19937_64& rng, std::size_t n);

FinFun random_function(std::mt19937_64& rng, std::size_t dom, std::size_t cod);
FinFun random_surjection(std::mt19937_64& rng, std::size_t dom, std::size_t cod);
FinFun random_injection(std::mt19937_64& rng, std::size_t dom, std::size_t cod);

SetDiagram random_set_diagram(std::mt19937_64& rng, const Graph& shape, std::size_t max_set);
/// Objects of size >= 1 so that A can be pointed into them; |A| in 0..max_base.
CosliceSetDiagram random_coslice_set_diagram(std::mt19937_64& rng, const Graph& shape, std::size_t max_base,
                                             std::size_t max_set);
UnderSet random_under_set(std::mt19937_64& rng, const FinSet& base, std::size_t max_set);

/// A quotient diagram: the components are random surjections closed under
/// the arrows, so the transformation is natural and pointed.
struct SurjectiveTransformation {
  CosliceSetDiagram target;
  SetTransformation delta;
};
SurjectiveTransformation random_quotient(std::mt19937_64& rng, const CosliceSetDiagram& source);

/// Random 2-complex with at most max_cells cells per dimension; faces are
/// closed words. connected forces a single component.
TwoComplex random_complex(std::mt19937_64& rng, std::size_t max_cells, bool connected, bool faces = true);

/// Random A-diagram over the shape. A is a point when b.max_base is at most 1,
/// otherwise a small complex. Arrows out of an object with faces factor
/// through a spanning tree of the target so that they respect the faces.
/// When A has edges, basepoint edges, arrows and pointedness words all run
/// in spanning forests, so every square over an A-edge commutes as words.
ADiagramCx random_adiagram(std::mt19937_64& rng, const Graph& shape, const GenBounds& b, bool connected);

/// A shortest path from u to v in the underlying undirected 1-skeleton,
/// optionally preceded by a random excursion. Throws ValidationError if no
/// path exists.
EdgeWord random_path(std::mt19937_64& rng, const TwoComplex& x, std::size_t u, std::size_t v, bool detour);

/// Calls visit(graph) for all shapes with at most max_vertices vertices and
/// max_edges edges; edges are ordered sequences of (src, dst) pairs.
void for_each_small_graph(std::size_t max_vertices, std::size_t max_edges, const std::function<void(const Graph&)>& visit);

/// All set diagrams over the shape with object sizes in 0..max_set.
void for_each_set_diagram(const Graph& shape, std::size_t max_set, const std::function<void(const SetDiagram&)>& visit);

/// All coslice structures on d with |A| in 0..max_base.
void for_each_coslice_structure(const SetDiagram& d, std::size_t max_base,
                                const std::function<void(const CosliceSetDiagram&)>& visit);

/// All sets under the base with carrier size in 0..max_set.
void for_each_under_set(const FinSet& base, std::size_t max_set, const std::function<void(const UnderSet&)>& visit);

}  // namespace hocolim
