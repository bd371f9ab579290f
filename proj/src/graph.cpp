#include "hocolim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "hocolim/complex.hpp"
#include "hocolim/errors.hpp"

namespace hocolim {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices))
{
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!vertex_lookup_.emplace(vertices_[v], v).second)
            throw ValidationError("graph: duplicate vertex id '" + vertices_[v] + "'");
    }
    edges_.reserve(edges.size());
    for (const auto& spec : edges) {
        auto s = vertex_lookup_.find(spec.src);
        if (s == vertex_lookup_.end())
            throw ValidationError("graph: edge '" + spec.id + "' has unknown src '" + spec.src + "'");
        auto d = vertex_lookup_.find(spec.dst);
        if (d == vertex_lookup_.end())
            throw ValidationError("graph: edge '" + spec.id + "' has unknown dst '" + spec.dst + "'");
        if (!edge_lookup_.emplace(spec.id, edges_.size()).second)
            throw ValidationError("graph: duplicate edge id '" + spec.id + "'");
        edges_.push_back({spec.id, s->second, d->second});
    }
}

std::size_t Graph::vertex_index(const std::string& id) const
{
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end())
        throw ValidationError("graph: unknown vertex id '" + id + "'");
    return it->second;
}

std::size_t Graph::edge_index(const std::string& id) const
{
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end())
        throw ValidationError("graph: unknown edge id '" + id + "'");
    return it->second;
}

std::vector<std::size_t> Graph::edges_between(std::size_t i, std::size_t j) const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].src == i && edges_[e].dst == j)
            out.push_back(e);
    return out;
}

Graph Graph::discrete(std::size_t n)
{
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(std::to_string(i));
    return Graph(std::move(vs), {});
}

Graph Graph::loop() { return Graph({"v"}, {{"g", "v", "v"}}); }

Graph Graph::span() { return Graph({"l", "m", "r"}, {{"f", "m", "l"}, {"g", "m", "r"}}); }

Graph Graph::arrow() { return Graph({"0", "1"}, {{"g", "0", "1"}}); }

std::size_t walk_end(const Graph& g, const Walk& w)
{
    if (w.start >= g.vertex_count())
        throw ValidationError("walk: start vertex out of range");
    std::size_t at = w.start;
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
        if (w.steps[k] >= g.edge_count())
            throw ValidationError("walk: unknown edge at step " + std::to_string(k));
        const auto& e = g.edge(w.steps[k]);
        if (e.src != at)
            throw ValidationError("walk: step " + std::to_string(k) + " (edge '" + e.id +
                                  "') does not start where the previous step ended");
        at = e.dst;
    }
    return at;
}

TwoComplex realize(const Graph& g)
{
    TwoComplex x;
    for (const auto& v : g.vertex_ids())
        x.add_vertex(v);
    for (const auto& e : g.edges())
        x.add_edge(e.id, e.src, e.dst);
    return x;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a)
    {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::size_t component_count(const Graph& g)
{
    UnionFind uf(g.vertex_count());
    std::size_t n = g.vertex_count();
    for (const auto& e : g.edges())
        if (uf.unite(e.src, e.dst))
            --n;
    return n;
}

bool is_tree(const Graph& g)
{
    if (g.vertex_count() == 0 || g.edge_count() + 1 != g.vertex_count())
        return false;
    // With E = V - 1, connected is equivalent to acyclic; a self-loop or a
    // parallel pair closes a cycle and so leaves the graph disconnected.
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges())
        if (!uf.unite(e.src, e.dst))
            return false;
    return true;
}

std::vector<Walk> enumerate_walks(const Graph& g, std::size_t i, std::size_t j, std::size_t max_len)
{
    if (i >= g.vertex_count() || j >= g.vertex_count())
        throw ValidationError("enumerate_walks: unknown vertex");

    std::vector<std::vector<std::size_t>> out_edges(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        out_edges[g.edge(e).src].push_back(e);

    std::vector<Walk> result;
    Walk current{i, {}};
    // Depth-first in increasing edge index yields lexicographic order
    // directly (a prefix precedes its extensions).
    auto dfs = [&](auto&& self, std::size_t at) -> void {
        if (at == j)
            result.push_back(current);
        if (current.steps.size() == max_len)
            return;
        for (std::size_t e : out_edges[at]) {
            current.steps.push_back(e);
            self(self, g.edge(e).dst);
            current.steps.pop_back();
        }
    };
    dfs(dfs, i);
    return result;
}

bool verify_combinatorial_tree(const Graph& g, std::size_t root, const std::vector<Walk>& nu)
{
    if (root >= g.vertex_count())
        throw ValidationError("combinatorial tree: root out of range");
    if (nu.size() != g.vertex_count())
        throw ValidationError("combinatorial tree: nu must assign a walk to each of the " +
                              std::to_string(g.vertex_count()) + " vertices");
    for (std::size_t v = 0; v < nu.size(); ++v) {
        if (nu[v].start != v)
            throw ValidationError("combinatorial tree: nu(" + g.vertex_id(v) + ") does not start at " +
                                  g.vertex_id(v));
        if (walk_end(g, nu[v]) != root)
            throw ValidationError("combinatorial tree: nu(" + g.vertex_id(v) + ") does not end at the root");
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const auto& lhs = nu[edge.src].steps;
        const auto& rhs = nu[edge.dst].steps;
        if (lhs.size() != rhs.size() + 1 || lhs.front() != e || !std::equal(rhs.begin(), rhs.end(), lhs.begin() + 1))
            return false;
    }
    return true;
}

EdgeWord walk_to_path(const Graph& g, const Walk& w)
{
    walk_end(g, w);
    EdgeWord word{w.start, {}};
    word.steps.reserve(w.steps.size());
    for (std::size_t e : w.steps)
        word.steps.push_back({e, 1});
    return word;
}

}  // namespace hocolim
