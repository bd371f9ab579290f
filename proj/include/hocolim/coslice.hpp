#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hocolim/complex.hpp"
#include "hocolim/graph.hpp"
#include "hocolim/homology.hpp"
#include "hocolim/setmodel.hpp"

namespace hocolim {

/// A complex X under A, with the map A -> X.
struct CosliceComplex {
  ComplexPtr base;
  ComplexPtr total;
  CellMap basept;
};

/// Graph-indexed diagram of complexes, arrows F_src -> F_dst.
struct DiagramCx {
  Graph shape;
  std::vector<ComplexPtr> objects;
  std::vector<CellMap> arrows;

  void validate() const;
};

/**
 * Diagram of complexes under a shared base A. pointedness[e][a] is a word in
 * F_dst from arrow_e(b_src a) to b_dst a, one per vertex a of A.
 */
struct ADiagramCx {
  DiagramCx underlying;
  ComplexPtr base;
  std::vector<CellMap> basepoints;
  std::vector<std::vector<EdgeWord>> pointedness;

  const Graph& shape() const { return underlying.shape; }
  void validate() const;
};

/// Constant diagram at A with identity arrows.
DiagramCx constant_diagram(const Graph& shape, const ComplexPtr& a);

/**
 * Mapping telescope: the objects, a kappa edge per (e: i -> j, vertex x of
 * F_i) running from iota_j(F_e x) to iota_i(x), and a naturality square per
 * (e, edge of F_i).
 */
struct ColimCx {
  ComplexPtr complex;
  std::vector<CellMap> injections;
  std::vector<std::vector<std::size_t>> kappa;    // [edge][vertex of F_src]
  std::vector<std::vector<std::size_t>> squares;  // [edge][edge of F_src]
};
ColimCx colim_cx(const DiagramCx& d);

/// colim of the constant diagram at A -> A: (i, a) -> a, kappa -> empty.
CellMap fold_map(const ColimCx& constant, const ComplexPtr& a);

/// colim of the constant diagram at A -> colim F, induced by the basepoints.
CellMap build_psi(const ADiagramCx& d, const ColimCx& constant, const ColimCx& colim);

struct CoconeData {
  std::vector<CellMap> legs;
  /// [vertex][A-vertex]: from leg_i(b_i a) to the tip basepoint of a.
  std::vector<std::vector<EdgeWord>> leg_pointedness;
  /// [edge][vertex x of F_src]: from leg_dst(F_e x) to leg_src(x).
  std::vector<std::vector<EdgeWord>> commuting;
  /// [edge][A-vertex]: the 2-cells filling the pointedness squares.
  std::vector<std::vector<std::size_t>> squares;
};

struct ConstructionOne {
  CosliceComplex result;
  ColimCx constant;
  ColimCx colim;
  CellMap fold;
  CellMap psi;
  Pushout po;
  CoconeData cocone;
};
/// The pushout of A <- colim A -> colim F.
ConstructionOne construction_one(const ADiagramCx& d);

struct CosliceCoproduct {
  CosliceComplex result;
  DisjointUnion sum;  // of the X_k
  Pushout po;         // glue index of (k, a) is k * |A| + a
  std::vector<CellMap> injections;  // X_k -> result
};
/// Pushout of A <- (index x A) -> sum X_k. Throws ValidationError when the
/// objects do not share the base.
CosliceCoproduct coslice_coproduct(const ComplexPtr& base, const std::vector<CosliceComplex>& objects);

/// The diagram over shape + {bot} with F(bot) = A and an edge aug(i): bot -> i
/// carrying b_i for every vertex i.
DiagramCx augmented_diagram(const ADiagramCx& d);

struct ConstructionTwo {
  CosliceComplex result;
  CosliceCoproduct edge_wedge;    // over the edges, summand e is F_src(e)
  CosliceCoproduct vertex_wedge;  // over the vertices
  CosliceCoproduct double_wedge;  // two copies of the edge wedge
  CellMap fold;                   // double wedge -> edge wedge
  CellMap sigma;                  // double wedge -> vertex wedge
  Pushout po;
};
ConstructionTwo construction_two(const ADiagramCx& d);

/// The comparison map from construction one to construction two.
CellMap t_f_map(const ADiagramCx& d, const ConstructionOne& one, const ConstructionTwo& two);

/**
 * A morphism of A-diagrams F -> G over the same shape and base.
 * pointedness[i][a] is a word in G_i from delta_i(b^F_i a) to b^G_i a;
 * naturality[e][x] a word in G_dst from G_e(delta_src x) to delta_dst(F_e x).
 */
struct ADiagramMorphism {
  std::vector<CellMap> components;
  std::vector<std::vector<EdgeWord>> pointedness;
  std::vector<std::vector<EdgeWord>> naturality;
};

void validate_morphism(const ADiagramCx& f, const ADiagramCx& g, const ADiagramMorphism& delta);
ADiagramMorphism identity_morphism(const ADiagramCx& d);
/// delta2 after delta1.
ADiagramMorphism compose_morphisms(const ADiagramCx& f, const ADiagramCx& g, const ADiagramCx& h,
                                   const ADiagramMorphism& delta1, const ADiagramMorphism& delta2);

/// Construction one of F -> construction one of G.
CellMap colim_map(const ADiagramCx& f, const ADiagramCx& g, const ADiagramMorphism& delta,
                  const ConstructionOne& pf, const ConstructionOne& pg);

/// Invariants of one complex as reported everywhere.
struct ComplexInvariants {
  std::vector<std::size_t> cells;  // V, E, F, then dropped higher cells
  std::size_t pi0 = 0;
  long euler = 0;       // V - E + F
  long full_euler = 0;  // including dropped cells
  FgAbelianGroup h0;
  FgAbelianGroup h1;
  FgAbelianGroup cohomology1;
};
ComplexInvariants invariants(const TwoComplex& x);

struct MapCheck {
  std::size_t source_pi0 = 0;
  std::size_t target_pi0 = 0;
  bool pi0_bijective = false;
  InducedH1 h1;
  bool passed() const { return pi0_bijective && h1.isomorphism; }
};
/// pi0 bijectivity and the H1 isomorphism test for a map.
MapCheck check_map(const CellMap& f);

/// inr: colim F -> construction one. No shape requirement.
MapCheck creation_comparison(const ADiagramCx& d);
/// Same, but throws PreconditionError unless the shape is a tree.
MapCheck check_tree_creation(const ADiagramCx& d);

struct ConnectivityReport {
  bool hypothesis = false;  // A and every F_i connected
  std::size_t pi0 = 0;      // of construction one
  bool passed = false;      // hypothesis implies pi0 == 1
  FgAbelianGroup plain_loop_h1;  // plain colimit of the point over the loop graph
};
ConnectivityReport check_connectivity(const ADiagramCx& d);

struct ConstructionComparison {
  ComplexInvariants one;
  ComplexInvariants two;
  bool invariants_agree = false;  // pi0, full Euler characteristic, H1
  MapCheck comparison;            // of t_f_map
  bool passed() const { return invariants_agree && comparison.passed(); }
};
ConstructionComparison compare_constructions(const ADiagramCx& d);

/// The diagram of path components, with induced arrows and basepoints.
CosliceSetDiagram pi0_diagram(const ADiagramCx& d);

struct TruncationReport {
  std::size_t complex_pi0 = 0;
  std::size_t set_colimit = 0;
  FinFun comparison;  // set colimit -> pi0 of construction one
  bool bijective = false;
};
TruncationReport check_truncation(const ADiagramCx& d);

/// Exactness at H^1 for a pointed diagram (A must be a single vertex; throws
/// PreconditionError otherwise). Cohomology is taken as Hom(H1, Z).
struct WeakLimitReport {
  FgAbelianGroup colimit_cohomology;
  std::vector<FgAbelianGroup> object_cohomology;
  std::size_t image_rank = 0;
  std::size_t kernel_rank = 0;
  bool exact = false;
  /// rank Hom(H1, Z) agrees with the rank of the cellular H^1 everywhere.
  bool ranks_consistent = false;
};
WeakLimitReport weak_limit_check(const ADiagramCx& d);

}  // namespace hocolim
