#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hocolim/graph.hpp"

namespace hocolim {

/// Finite set with named elements; element order is the input order.
struct FinSet {
  std::vector<std::string> elements;

  std::size_t size() const { return elements.size(); }
  /// Throws ValidationError for an unknown element.
  std::size_t index(const std::string& id) const;

  /// Elements "0", "1", ..., "n-1".
  static FinSet range(std::size_t n);
};

/// Total function dom -> cod; dom is table.size().
struct FinFun {
  std::size_t cod = 0;
  std::vector<std::size_t> table;

  std::size_t dom() const { return table.size(); }
  std::size_t operator()(std::size_t x) const { return table[x]; }
  bool operator==(const FinFun&) const = default;

  /// Throws ValidationError if some value is out of range.
  void validate() const;
  bool is_injective() const;
  bool is_surjective() const;

  static FinFun identity(std::size_t n);
};

/// g after f.
FinFun compose(const FinFun& g, const FinFun& f);

/// Calls visit(table) for every function n -> m in lexicographic order of
/// tables. Throws SizeError when m^n exceeds cap.
template <class Visit>
void for_each_function(std::size_t n, std::size_t m, std::size_t cap, Visit&& visit);

/// m^n saturating at SIZE_MAX.
std::size_t power_count(std::size_t m, std::size_t n);

[[noreturn]] void throw_size_error(std::size_t n, std::size_t m, std::size_t cap);

struct SetDiagram {
  Graph shape;
  std::vector<FinSet> objects;  // per vertex
  std::vector<FinFun> arrows;   // per edge, F_src -> F_dst

  void validate() const;
};

/// A set under A: carrier plus the basepoint map A -> carrier.
struct UnderSet {
  FinSet carrier;
  FinFun basepoint;
};

/// Diagram of sets under a common base A; every arrow satisfies
/// arrow o b_src = b_dst exactly.
struct CosliceSetDiagram {
  SetDiagram diagram;
  FinSet base;
  std::vector<FinFun> basepoints;  // per vertex, A -> F_i

  void validate() const;
  UnderSet object(std::size_t i) const { return {diagram.objects[i], basepoints[i]}; }
};

struct SetColimit {
  FinSet carrier;
  std::vector<FinFun> injections;  // per vertex
};

/// Union-find quotient of the tagged sum by (j, F_e x) ~ (i, x). Each class
/// is named after its first element in tagged order, "vertex:element".
SetColimit colim_set(const SetDiagram& d);

struct SetLimit {
  FinSet carrier;
  std::vector<std::vector<std::size_t>> families;  // one entry per vertex
};

/// Matching families. Throws SizeError when the product of the object sizes
/// exceeds cap.
SetLimit lim_set(const SetDiagram& d, std::size_t cap = 1000000);

struct CosliceSetColimit {
  UnderSet tip;
  std::vector<FinFun> legs;  // per vertex, F_i -> tip
};

/// Quotient of A + sum F_i by (j, F_e x) ~ (i, x) and a ~ (i, b_i a).
CosliceSetColimit coslice_colim_set(const CosliceSetDiagram& d);

/// f o leg_i for every vertex.
std::vector<FinFun> postcompose(const std::vector<FinFun>& legs, const FinFun& f);

/// The unique map out of the colimit agreeing with a cocone. Throws
/// PreconditionError when the legs do not form a cocone.
FinFun cogap(const CosliceSetDiagram& d, const CosliceSetColimit& c, const UnderSet& tip,
             const std::vector<FinFun>& legs);
FinFun cogap(const SetDiagram& d, const SetColimit& c, const std::vector<FinFun>& legs);

/// True iff the legs commute with every arrow; the coslice version also
/// requires leg_i o b_i = b_tip.
bool is_cocone(const SetDiagram& d, const std::vector<FinFun>& legs);
bool is_coslice_cocone(const CosliceSetDiagram& d, const UnderSet& tip, const std::vector<FinFun>& legs);

struct UniversalPropertyReport {
  std::size_t amaps = 0;
  std::size_t cocones = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/// Enumerates the A-maps P -> T and, separately, all cocones over d with tip
/// T, then checks that postcomposition is a bijection between them.
UniversalPropertyReport verify_universal_property(const CosliceSetDiagram& d, const UnderSet& t,
                                                  std::size_t cap = 1000000);

struct PullbackUnder {
  UnderSet object;
  FinFun proj1;
  FinFun proj2;
};

/// {(x, y) | f x = g y} with basepoint a -> (b_X a, b_Y a). Throws
/// PreconditionError unless f o b_X = b_Z = g o b_Y.
PullbackUnder pullback_coslice(const UnderSet& x, const UnderSet& y, const UnderSet& z, const FinFun& f,
                               const FinFun& g);

struct UniversalityReport {
  std::size_t colim_of_pullbacks = 0;  // |colim_i (F_i x_V Y)|
  std::size_t pullback_of_colim = 0;   // |colim F x_V Y|
  FinFun comparison;
  bool bijective = false;
};

/// Plain version: f is a map colim F -> V (on the colim_set carrier) and h a
/// map Y -> V.
UniversalityReport check_universality(const SetDiagram& d, std::size_t v_size, const FinFun& f,
                                      const FinFun& h);
/// Coslice version: f: colim F -> V and h: Y -> V are maps under A, f given
/// on the coslice_colim_set carrier.
UniversalityReport check_universality(const CosliceSetDiagram& d, const UnderSet& v, const FinFun& f,
                                      const UnderSet& y, const FinFun& h);

struct Factorization {
  std::size_t image_size = 0;
  FinFun surjection;  // dom -> image
  FinFun injection;   // image -> cod
};

/// Image elements listed in codomain order.
Factorization factorize(const FinFun& f);

/// The diagonal d: B -> C with d o l = top and r o d = bottom. Throws
/// PreconditionError if l is not surjective, r not injective, or the square
/// does not commute.
FinFun unique_filler(const FinFun& l, const FinFun& r, const FinFun& top, const FinFun& bottom);

/// Number of diagonal fillers of a commuting square, computed per element of
/// B (saturating at SIZE_MAX).
std::size_t count_fillers(const FinFun& l, const FinFun& r, const FinFun& top, const FinFun& bottom);

/// l is left orthogonal to r: every commuting square has exactly one filler.
bool orthogonal(const FinFun& l, const FinFun& r, std::size_t cap = 1000000);

struct SetPushout {
  std::size_t size = 0;
  FinFun inl;
  FinFun inr;
};
/// Pushout of A <-f- C -g-> B.
SetPushout set_pushout(const FinFun& f, const FinFun& g);

/// A pointwise map of coslice diagrams over the same shape and base.
struct SetTransformation {
  std::vector<FinFun> components;
};

struct PreservationReport {
  FinFun induced;
  bool surjective = false;
};

/// Checks naturality and pointedness (PreconditionError otherwise) and that
/// every component is surjective, then returns the induced map on coslice
/// colimits and whether it is surjective.
PreservationReport preservation_surjectivity(const CosliceSetDiagram& source, const CosliceSetDiagram& target,
                                             const SetTransformation& delta);

// ---------------------------------------------------------------------------

template <class Visit>
void for_each_function(std::size_t n, std::size_t m, std::size_t cap, Visit&& visit)
{
  if (power_count(m, n) > cap)
    throw_size_error(n, m, cap);
  if (n > 0 && m == 0)
    return;
  std::vector<std::size_t> table(n, 0);
  for (;;) {
    visit(static_cast<const std::vector<std::size_t>&>(table));
    std::size_t k = n;
    for (;;) {
      if (k == 0)
        return;
      --k;
      if (++table[k] < m)
        break;
      table[k] = 0;
    }
  }
}

}  // namespace hocolim
