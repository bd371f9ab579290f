#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hocolim {

/// An edge traversed with or against its orientation (sign = +1 / -1).
struct SignedEdge {
  std::size_t edge;
  int sign;

  bool operator==(const SignedEdge&) const = default;
};

/// A path in a complex: start vertex plus signed edges whose endpoints chain.
struct EdgeWord {
  std::size_t start = 0;
  std::vector<SignedEdge> steps;

  bool empty() const { return steps.empty(); }
  bool operator==(const EdgeWord&) const = default;
};

/**
 * Finite cell complex of dimension <= 2. Faces carry a closed boundary word.
 *
 * Constructions that would create cells of dimension >= 3 (pushouts over an
 * apex with faces, colimits of complexes with faces) drop them; the number
 * dropped per dimension is kept in discarded_cells() so the full cell count
 * of the modelled space stays available.
 */
class TwoComplex {
 public:
  struct Edge {
    std::string id;
    std::size_t src;
    std::size_t dst;
  };
  struct Face {
    std::string id;
    std::vector<SignedEdge> boundary;
  };

  std::size_t add_vertex(std::string id);
  std::size_t add_edge(std::string id, std::size_t src, std::size_t dst);
  /// Boundary must be a non-empty closed word over existing edges.
  std::size_t add_face(std::string id, std::vector<SignedEdge> boundary);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const Face& face(std::size_t f) const { return faces_.at(f); }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  std::size_t face_index(const std::string& id) const;

  /// Counts of dropped cells of dimension 3, 4, ... (index 0 is dimension 3).
  const std::vector<std::size_t>& discarded_cells() const { return discarded_; }
  void add_discarded(std::size_t dim, std::size_t count);

  /// V, E, F followed by the discarded counts.
  std::vector<std::size_t> cell_counts() const;

  /// Source and target of a signed edge as traversed.
  std::size_t step_src(SignedEdge s) const;
  std::size_t step_dst(SignedEdge s) const;

  /// End of a word; throws ValidationError when the word does not chain.
  std::size_t word_end(const EdgeWord& w) const;

  static TwoComplex point();
  static TwoComplex circle();
  static TwoComplex disk();
  static TwoComplex torus();
  static TwoComplex projective_plane();
  static TwoComplex discrete(std::size_t n);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::size_t> discarded_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::unordered_map<std::string, std::size_t> face_lookup_;
};

using ComplexPtr = std::shared_ptr<const TwoComplex>;

inline ComplexPtr share(TwoComplex x) { return std::make_shared<const TwoComplex>(std::move(x)); }

EdgeWord inverse(const TwoComplex& x, const EdgeWord& w);
/// a . b; throws ValidationError if a does not end where b starts.
EdgeWord concat(const TwoComplex& x, const EdgeWord& a, const EdgeWord& b);
/// Cancels adjacent e e^-1 pairs.
EdgeWord free_reduce(const EdgeWord& w);
/// Single-step word.
EdgeWord step_word(const TwoComplex& x, std::size_t edge, int sign = 1);
EdgeWord empty_word(std::size_t at);

/**
 * Map of complexes: vertices to vertices and edges to edge words. Carries no
 * face data; images of face boundaries are only checked where an invariant
 * needs it (see induced_h1).
 */
struct CellMap {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<std::size_t> vertex_map;
  std::vector<EdgeWord> edge_map;

  /// Throws ValidationError unless every edge image runs from the image of
  /// its source to the image of its target.
  void validate() const;

  std::size_t operator()(std::size_t v) const { return vertex_map.at(v); }
  /// Image of a word of the source.
  EdgeWord apply(const EdgeWord& w) const;

  static CellMap identity(const ComplexPtr& x);
  /// Every vertex to `at`, every edge to the empty word (requires `at` to be
  /// the only image, so edges must exist only when that is consistent).
  static CellMap constant(const ComplexPtr& source, const ComplexPtr& target, std::size_t at);
};

/// g after f. Throws ValidationError when f's target is not g's source.
CellMap compose_cell_maps(const CellMap& g, const CellMap& f);

struct DisjointUnion {
  ComplexPtr complex;
  std::vector<CellMap> injections;
};
/// Cells of summand k are named "k:<id>".
DisjointUnion disjoint_union(const std::vector<ComplexPtr>& xs);

/**
 * Double mapping cylinder of f: C -> A, g: C -> B. Cells of A and B, a glue
 * edge inl(f v) -> inr(g v) per vertex v of C, and a square per edge e of C
 * with boundary glue(src e)^-1 . f(e) . glue(dst e) . g(e)^-1. Faces of C
 * would be 3-cells and are only counted.
 */
struct Pushout {
  ComplexPtr complex;
  CellMap inl;
  CellMap inr;
  std::vector<std::size_t> glue;     // edge index per vertex of C
  std::vector<std::size_t> squares;  // face index per edge of C
};
Pushout pushout(const CellMap& f, const CellMap& g);

/// Connected components: rep[v] is the class index, classes ordered by
/// their least vertex index, which is also each class's representative.
struct Partition {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;

  std::size_t size() const { return classes.size(); }
};
Partition pi0(const TwoComplex& x);

/// Class map induced on pi0 by a cell map.
std::vector<std::size_t> induced_pi0(const CellMap& f, const Partition& source, const Partition& target);

/// Group presentation; a relator letter is (generator index, +1/-1).
struct Presentation {
  std::vector<std::string> generators;  // non-tree edge ids
  std::vector<std::size_t> generator_edges;
  std::vector<std::vector<std::pair<std::size_t, int>>> relators;
};

/**
 * pi1 presentation of the component of `base`: breadth-first spanning tree
 * (neighbours scanned in edge order), generators are the non-tree edges,
 * relators are face boundaries with tree edges deleted. No simplification.
 */
Presentation pi1_presentation(const TwoComplex& x, std::size_t base);

/// V - E + F.
long euler_characteristic(const TwoComplex& x);
/// Alternating count including the dropped higher cells.
long full_euler_characteristic(const TwoComplex& x);

}  // namespace hocolim
