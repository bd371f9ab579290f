#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace hocolim {

class TwoComplex;
struct EdgeWord;

/**
 * Finite directed multigraph. Vertices and edges are addressed by their
 * position in the input order; string ids are kept for I/O and must be
 * unique. Loops and parallel edges are allowed.
 */
class Graph {
 public:
  struct Edge {
    std::string id;
    std::size_t src;
    std::size_t dst;
  };

  /// Edge given by endpoint ids, as read from files.
  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Throws ValidationError naming the id when absent.
  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const { return vertex_lookup_.count(id) != 0; }

  /// The edges i -> j, in input order.
  std::vector<std::size_t> edges_between(std::size_t i, std::size_t j) const;

  /// Convenience builders for the shapes used throughout the tests.
  static Graph discrete(std::size_t n);
  static Graph loop();
  static Graph span();  // l <- m -> r
  static Graph arrow(); // 0 -> 1

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

/// A walk: a start vertex and a chain of edges (dst of step k = src of k+1).
struct Walk {
  std::size_t start = 0;
  std::vector<std::size_t> steps;

  bool operator==(const Walk&) const = default;
};

/// End vertex of a walk; throws ValidationError if the steps do not chain.
std::size_t walk_end(const Graph& g, const Walk& w);

/// One vertex per graph vertex, one edge per graph edge, no faces.
TwoComplex realize(const Graph& g);

/// Connected and acyclic as an undirected multigraph (no self-loops).
bool is_tree(const Graph& g);

/// Connected components of the underlying undirected multigraph.
std::size_t component_count(const Graph& g);

/// All walks i -> j with at most max_len steps, sorted lexicographically by
/// their edge-index sequences.
std::vector<Walk> enumerate_walks(const Graph& g, std::size_t i, std::size_t j, std::size_t max_len);

/**
 * Checks a combinatorial-tree certificate: nu[i] must be a walk i -> root
 * for every vertex, and for every edge e: i -> j, nu[i] == cons(e, nu[j]).
 * Throws ValidationError if nu has the wrong shape.
 */
bool verify_combinatorial_tree(const Graph& g, std::size_t root, const std::vector<Walk>& nu);

/// The path in realize(g) traced by a walk: nil -> empty word, cons(e, z) -> e . path(z).
EdgeWord walk_to_path(const Graph& g, const Walk& w);

}  // namespace hocolim
