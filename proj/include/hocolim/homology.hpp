#pragma once

#include <cstddef>
#include <vector>

#include "hocolim/complex.hpp"
#include "hocolim/intalg.hpp"

namespace hocolim {

/// Cellular boundary matrices. d1 is V x E (-1 at src, +1 at dst), d2 is
/// E x F (signed exponent sums of the boundary words).
struct ChainData {
  IntMatrix d1;
  IntMatrix d2;
};
ChainData chain_data(const TwoComplex& x);

struct HomologyGroups {
  FgAbelianGroup h0;
  FgAbelianGroup h1;
};
HomologyGroups homology_groups(const TwoComplex& x);

/// ker(d2^T) / im(d1^T).
FgAbelianGroup cohomology_h1(const TwoComplex& x);

/**
 * H1 = Z^k / im(relations), where Z^k are coordinates on a basis of the
 * cycle lattice ker d1. Generators are the nontrivial rows of the Smith form
 * of `relations`: torsion generators first, then free ones.
 */
struct H1Data {
  IntMatrix kernel;       // E x k, columns span ker d1
  IntMatrix coordinates;  // k x E, sends a cycle to its kernel coordinates
  IntMatrix relations;    // k x F, face boundaries in kernel coordinates
  SmithForm snf;          // of relations
  std::vector<std::size_t> generators;
  std::vector<Integer> orders;  // 0 for a free generator
  FgAbelianGroup group;
};
H1Data h1_data(const TwoComplex& x);

/// Exponent-sum matrix of f on 1-chains (E_target x E_source).
IntMatrix chain_map_1(const CellMap& f);

struct InducedH1 {
  FgAbelianGroup source;
  FgAbelianGroup target;
  /// On the Smith generators; torsion rows reduced into [0, order).
  IntMatrix matrix;
  /// On kernel coordinates, unreduced (k_target x k_source).
  IntMatrix cycle_matrix;
  bool surjective = false;
  bool isomorphism = false;
};

/// Throws ValidationError if some face boundary of the source is sent to a
/// cycle that does not bound in the target (no induced map on H1).
InducedH1 induced_h1(const CellMap& f);
InducedH1 induced_h1(const CellMap& f, const H1Data& source, const H1Data& target);

/// Hom(H1, Z) as the lattice ker(relations^T) inside Z^k, basis as columns.
/// A map f acts on it by cycle_matrix^T.
IntMatrix h1_dual_lattice(const H1Data& h);

}  // namespace hocolim
