#include "hocolim/random.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hocolim/errors.hpp"

namespace hocolim {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) { return std::mt19937_64(splitmix64(seed ^ index)); }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    if (hi <= lo)
        return lo;
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

std::string name(const char* prefix, std::size_t k) { return prefix + std::to_string(k); }

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
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

// signed steps leaving each vertex, in edge order
std::vector<std::vector<SignedEdge>> incidence(const TwoComplex& x)
{
    std::vector<std::vector<SignedEdge>> out(x.vertex_count());
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        out[x.edge(e).src].push_back({e, 1});
        out[x.edge(e).dst].push_back({e, -1});
    }
    return out;
}

EdgeWord random_walk(std::mt19937_64& rng, const TwoComplex& x, std::size_t start, std::size_t len)
{
    auto inc = incidence(x);
    EdgeWord w{start, {}};
    std::size_t at = start;
    for (std::size_t k = 0; k < len && !inc[at].empty(); ++k) {
        SignedEdge s = inc[at][uniform(rng, 0, inc[at].size() - 1)];
        w.steps.push_back(s);
        at = x.step_dst(s);
    }
    return w;
}

EdgeWord shortest_path(const TwoComplex& x, std::size_t u, std::size_t v)
{
    auto inc = incidence(x);
    std::vector<SignedEdge> via(x.vertex_count(), {SIZE_MAX, 0});
    std::vector<char> seen(x.vertex_count(), 0);
    std::deque<std::size_t> queue{u};
    seen[u] = 1;
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        if (at == v)
            break;
        for (const auto& s : inc[at]) {
            std::size_t next = x.step_dst(s);
            if (!seen[next]) {
                seen[next] = 1;
                via[next] = s;
                queue.push_back(next);
            }
        }
    }
    if (!seen[v])
        throw ValidationError("no path from '" + x.vertex_id(u) + "' to '" + x.vertex_id(v) + "'");
    std::vector<SignedEdge> steps;
    for (std::size_t at = v; at != u; at = x.step_src(via[at]))
        steps.push_back(via[at]);
    std::reverse(steps.begin(), steps.end());
    return EdgeWord{u, steps};
}

// path from u to v inside a BFS spanning forest; closed loops go to zero chains
struct Forest {
    std::vector<std::size_t> root;
    std::vector<EdgeWord> to_root;  // from the root down to the vertex
};

Forest spanning_forest(const TwoComplex& x)
{
    Partition p = pi0(x);
    Forest f;
    f.root.resize(x.vertex_count());
    f.to_root.resize(x.vertex_count());
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        f.root[v] = p.classes[p.class_of[v]].front();
        f.to_root[v] = shortest_path(x, f.root[v], v);
    }
    return f;
}

EdgeWord forest_path(const TwoComplex& x, const Forest& f, std::size_t u, std::size_t v)
{
    return free_reduce(concat(x, inverse(x, f.to_root[u]), f.to_root[v]));
}

std::size_t random_in(std::mt19937_64& rng, const std::vector<std::size_t>& xs) { return xs[uniform(rng, 0, xs.size() - 1)]; }

}  // namespace

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges)
{
    std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, max_vertices));
    std::size_t m = uniform(rng, 0, max_edges);
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(name("v", i));
    std::vector<Graph::EdgeSpec> es;
    for (std::size_t k = 0; k < m; ++k)
        es.push_back({name("e", k), vs[uniform(rng, 0, n - 1)], vs[uniform(rng, 0, n - 1)]});
    return Graph(vs, es);
}

Graph random_tree(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(name("v", i));
    std::vector<Graph::EdgeSpec> es;
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t parent = uniform(rng, 0, k - 1);
        if (coin(rng))
            es.push_back({name("e", k - 1), vs[parent], vs[k]});
        else
            es.push_back({name("e", k - 1), vs[k], vs[parent]});
    }
    return Graph(vs, es);
}

FinFun random_function(std::mt19937_64& rng, std::size_t dom, std::size_t cod)
{
    if (dom > 0 && cod == 0)
        throw ValidationError("random_function: empty codomain");
    FinFun f{cod, std::vector<std::size_t>(dom)};
    for (auto& y : f.table)
        y = uniform(rng, 0, cod - 1);
    return f;
}

FinFun random_surjection(std::mt19937_64& rng, std::size_t dom, std::size_t cod)
{
    if (cod > dom)
        throw ValidationError("random_surjection: codomain larger than domain");
    std::vector<std::size_t> order(dom);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    FinFun f{cod, std::vector<std::size_t>(dom)};
    for (std::size_t k = 0; k < dom; ++k)
        f.table[order[k]] = k < cod ? k : uniform(rng, 0, cod - 1);
    return f;
}

FinFun random_injection(std::mt19937_64& rng, std::size_t dom, std::size_t cod)
{
    if (dom > cod)
        throw ValidationError("random_injection: domain larger than codomain");
    std::vector<std::size_t> order(cod);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return FinFun{cod, std::vector<std::size_t>(order.begin(), order.begin() + dom)};
}

SetDiagram random_set_diagram(std::mt19937_64& rng, const Graph& shape, std::size_t max_set)
{
    std::vector<std::size_t> sizes(shape.vertex_count());
    for (auto& s : sizes)
        s = uniform(rng, 0, max_set);
    // an arrow into an empty set needs an empty source
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : shape.edges())
            if (sizes[e.dst] == 0 && sizes[e.src] > 0) {
                sizes[e.dst] = 1;
                changed = true;
            }
    }
    SetDiagram d;
    d.shape = shape;
    for (auto s : sizes)
        d.objects.push_back(FinSet::range(s));
    for (const auto& e : shape.edges())
        d.arrows.push_back(random_function(rng, sizes[e.src], sizes[e.dst]));
    return d;
}

CosliceSetDiagram random_coslice_set_diagram(std::mt19937_64& rng, const Graph& shape, std::size_t max_base,
                                             std::size_t max_set)
{
    CosliceSetDiagram d;
    std::size_t na = uniform(rng, 0, max_base);
    d.base = FinSet::range(na);
    // one kernel for every basepoint map keeps the pointedness equations solvable
    std::size_t classes = na == 0 ? 0 : uniform(rng, 1, na);
    FinFun quotient = random_surjection(rng, na, classes);

    d.diagram.shape = shape;
    std::vector<FinFun> on_classes;
    for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
        std::size_t lo = std::max<std::size_t>(1, classes);
        std::size_t n = uniform(rng, lo, std::max(lo, max_set));
        d.diagram.objects.push_back(FinSet::range(n));
        on_classes.push_back(random_injection(rng, classes, n));
        d.basepoints.push_back(compose(on_classes.back(), quotient));
    }
    for (const auto& e : shape.edges()) {
        std::size_t n = d.diagram.objects[e.src].size(), m = d.diagram.objects[e.dst].size();
        FinFun f = random_function(rng, n, m);
        for (std::size_t c = 0; c < classes; ++c)
            f.table[on_classes[e.src](c)] = on_classes[e.dst](c);
        d.diagram.arrows.push_back(f);
    }
    d.validate();
    return d;
}

UnderSet random_under_set(std::mt19937_64& rng, const FinSet& base, std::size_t max_set)
{
    std::size_t lo = base.size() > 0 ? 1 : 0;
    std::size_t n = uniform(rng, lo, std::max(lo, max_set));
    return UnderSet{FinSet::range(n), random_function(rng, base.size(), n)};
}

SurjectiveTransformation random_quotient(std::mt19937_64& rng, const CosliceSetDiagram& source)
{
    const auto& g = source.diagram.shape;
    std::vector<UnionFind> uf;
    for (const auto& o : source.diagram.objects) {
        uf.emplace_back(o.size());
        std::size_t merges = o.size() == 0 ? 0 : uniform(rng, 0, o.size());
        for (std::size_t k = 0; k < merges; ++k)
            uf.back().unite(uniform(rng, 0, o.size() - 1), uniform(rng, 0, o.size() - 1));
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& edge = g.edge(e);
            const auto& f = source.diagram.arrows[e];
            for (std::size_t x = 0; x < f.dom(); ++x) {
                std::size_t rx = uf[edge.src].find(x);
                if (rx != x && uf[edge.dst].unite(f(x), f(rx)))
                    changed = true;
            }
        }
    }

    SurjectiveTransformation out;
    auto& t = out.target;
    t.base = source.base;
    t.diagram.shape = g;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& o = source.diagram.objects[i];
        std::vector<std::size_t> number(o.size(), SIZE_MAX);
        FinSet q;
        for (std::size_t x = 0; x < o.size(); ++x)
            if (uf[i].find(x) == x) {
                number[x] = q.size();
                q.elements.push_back("[" + o.elements[x] + "]");
            }
        FinFun c{q.size(), std::vector<std::size_t>(o.size())};
        for (std::size_t x = 0; x < o.size(); ++x)
            c.table[x] = number[uf[i].find(x)];
        t.diagram.objects.push_back(q);
        t.basepoints.push_back(compose(c, source.basepoints[i]));
        out.delta.components.push_back(c);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const auto& cs = out.delta.components[edge.src];
        const auto& cd = out.delta.components[edge.dst];
        FinFun f{t.diagram.objects[edge.dst].size(), std::vector<std::size_t>(t.diagram.objects[edge.src].size())};
        for (std::size_t x = 0; x < cs.dom(); ++x)
            f.table[cs(x)] = cd(source.diagram.arrows[e](x));
        t.diagram.arrows.push_back(f);
    }
    t.validate();
    return out;
}

EdgeWord random_path(std::mt19937_64& rng, const TwoComplex& x, std::size_t u, std::size_t v, bool detour)
{
    EdgeWord head = detour ? random_walk(rng, x, u, uniform(rng, 0, 3)) : empty_word(u);
    return concat(x, head, shortest_path(x, x.word_end(head), v));
}

TwoComplex random_complex(std::mt19937_64& rng, std::size_t max_cells, bool connected, bool faces)
{
    max_cells = std::max<std::size_t>(1, max_cells);
    TwoComplex x;
    std::size_t nv = uniform(rng, 1, max_cells);
    for (std::size_t v = 0; v < nv; ++v)
        x.add_vertex(name("p", v));
    std::size_t ne = uniform(rng, connected ? nv - 1 : 0, max_cells);
    for (std::size_t e = 0; e < ne; ++e) {
        std::size_t s, t;
        if (connected && e + 1 < nv) {
            s = e + 1;
            t = uniform(rng, 0, e);
            if (coin(rng))
                std::swap(s, t);
        } else {
            s = uniform(rng, 0, nv - 1);
            t = uniform(rng, 0, nv - 1);
        }
        x.add_edge(name("a", e), s, t);
    }
    if (!faces || ne == 0)
        return x;
    std::size_t nf = uniform(rng, 0, max_cells);
    for (std::size_t k = 0; k < nf; ++k) {
        std::size_t v = uniform(rng, 0, nv - 1);
        EdgeWord w = random_walk(rng, x, v, uniform(rng, 1, 4));
        w = free_reduce(concat(x, w, shortest_path(x, x.word_end(w), v)));
        if (!w.empty())
            x.add_face(name("f", x.face_count()), w.steps);
    }
    return x;
}

ADiagramCx random_adiagram(std::mt19937_64& rng, const Graph& shape, const GenBounds& b, bool connected)
{
    for (int attempt = 0;; ++attempt) {
        ADiagramCx d;
        d.underlying.shape = shape;
        if (b.max_base <= 1)
            d.base = share(TwoComplex::point());
        else
            d.base = share(random_complex(rng, b.max_base, connected || coin(rng), false));
        const TwoComplex& a = *d.base;
        Partition pa = pi0(a);

        std::vector<Partition> parts;
        for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
            d.underlying.objects.push_back(share(random_complex(rng, b.max_cells, connected)));
            parts.push_back(pi0(*d.underlying.objects.back()));
        }
        // after repeated conflicts every A-vertex goes to vertex 0
        bool collapse = attempt >= 20;
        // squares over A-edges carry no witness, so make them commute on the nose
        bool coherent = a.edge_count() > 0;
        std::vector<Forest> forests;
        for (const auto& x : d.underlying.objects)
            forests.push_back(spanning_forest(*x));

        for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
            const auto& x = d.underlying.objects[i];
            CellMap bp{d.base, x, std::vector<std::size_t>(a.vertex_count()), {}};
            for (const auto& cls : pa.classes) {
                std::size_t comp = parts[i].class_of[uniform(rng, 0, x->vertex_count() - 1)];
                for (auto v : cls)
                    bp.vertex_map[v] = collapse ? 0 : random_in(rng, parts[i].classes[comp]);
            }
            for (const auto& e : a.edges())
                bp.edge_map.push_back(coherent ? forest_path(*x, forests[i], bp(e.src), bp(e.dst))
                                               : random_path(rng, *x, bp(e.src), bp(e.dst), coin(rng, 0.3)));
            d.basepoints.push_back(bp);
        }

        bool conflict = false;
        for (std::size_t e = 0; e < shape.edge_count() && !conflict; ++e) {
            const auto& edge = shape.edge(e);
            const auto& xs = d.underlying.objects[edge.src];
            const auto& xt = d.underlying.objects[edge.dst];
            const Partition& ps = parts[edge.src];
            const Partition& pt = parts[edge.dst];
            CellMap f{xs, xt, std::vector<std::size_t>(xs->vertex_count(), SIZE_MAX), {}};
            std::vector<std::size_t> target_comp(ps.size(), SIZE_MAX);
            for (std::size_t v = 0; v < a.vertex_count() && !conflict; ++v) {
                std::size_t from = d.basepoints[edge.src](v);
                std::size_t want = pt.class_of[d.basepoints[edge.dst](v)];
                std::size_t c = ps.class_of[from];
                if (target_comp[c] == SIZE_MAX)
                    target_comp[c] = want;
                else if (target_comp[c] != want)
                    conflict = true;
                if (f.vertex_map[from] == SIZE_MAX)
                    f.vertex_map[from] = random_in(rng, pt.classes[want]);
            }
            if (conflict)
                break;
            for (std::size_t c = 0; c < ps.size(); ++c)
                if (target_comp[c] == SIZE_MAX)
                    target_comp[c] = uniform(rng, 0, pt.size() - 1);
            for (std::size_t v = 0; v < xs->vertex_count(); ++v)
                if (f.vertex_map[v] == SIZE_MAX)
                    f.vertex_map[v] = random_in(rng, pt.classes[target_comp[ps.class_of[v]]]);
            bool through_tree = coherent || xs->face_count() > 0;
            const Forest& forest = forests[edge.dst];
            for (const auto& se : xs->edges()) {
                if (through_tree)
                    f.edge_map.push_back(forest_path(*xt, forest, f(se.src), f(se.dst)));
                else
                    f.edge_map.push_back(random_path(rng, *xt, f(se.src), f(se.dst), coin(rng, 0.4)));
            }
            d.underlying.arrows.push_back(f);

            std::vector<EdgeWord> words;
            for (std::size_t v = 0; v < a.vertex_count(); ++v) {
                std::size_t from = f(d.basepoints[edge.src](v)), to = d.basepoints[edge.dst](v);
                words.push_back(coherent ? forest_path(*xt, forest, from, to)
                                         : random_path(rng, *xt, from, to, coin(rng, 0.3)));
            }
            d.pointedness.push_back(words);
        }
        if (conflict)
            continue;
        d.validate();
        return d;
    }
}

void for_each_small_graph(std::size_t max_vertices, std::size_t max_edges, const std::function<void(const Graph&)>& visit)
{
    visit(Graph());
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<std::string> vs;
        for (std::size_t i = 0; i < n; ++i)
            vs.push_back(name("v", i));
        for (std::size_t m = 0; m <= max_edges; ++m)
            for_each_function(m, n * n, SIZE_MAX, [&](const std::vector<std::size_t>& pairs) {
                std::vector<Graph::EdgeSpec> es;
                for (std::size_t k = 0; k < m; ++k)
                    es.push_back({name("e", k), vs[pairs[k] / n], vs[pairs[k] % n]});
                visit(Graph(vs, es));
            });
    }
}

namespace {

void arrows_from(const Graph& g, const std::vector<std::size_t>& sizes, std::size_t e, std::vector<FinFun>& arrows,
                 const std::function<void(const std::vector<FinFun>&)>& visit)
{
    if (e == g.edge_count()) {
        visit(arrows);
        return;
    }
    std::size_t n = sizes[g.edge(e).src], m = sizes[g.edge(e).dst];
    for_each_function(n, m, SIZE_MAX, [&](const std::vector<std::size_t>& t) {
        arrows.push_back(FinFun{m, t});
        arrows_from(g, sizes, e + 1, arrows, visit);
        arrows.pop_back();
    });
}

}  // namespace

void for_each_set_diagram(const Graph& shape, std::size_t max_set, const std::function<void(const SetDiagram&)>& visit)
{
    for_each_function(shape.vertex_count(), max_set + 1, SIZE_MAX, [&](const std::vector<std::size_t>& sizes) {
        SetDiagram d;
        d.shape = shape;
        for (auto s : sizes)
            d.objects.push_back(FinSet::range(s));
        std::vector<FinFun> arrows;
        arrows_from(shape, sizes, 0, arrows, [&](const std::vector<FinFun>& fs) {
            d.arrows = fs;
            visit(d);
        });
    });
}

void for_each_coslice_structure(const SetDiagram& d, std::size_t max_base,
                                const std::function<void(const CosliceSetDiagram&)>& visit)
{
    const auto& g = d.shape;
    for (std::size_t na = 0; na <= max_base; ++na) {
        CosliceSetDiagram c;
        c.diagram = d;
        c.base = FinSet::range(na);
        c.basepoints.assign(g.vertex_count(), FinFun{});
        std::function<void(std::size_t)> pick = [&](std::size_t i) {
            if (i == g.vertex_count()) {
                for (std::size_t e = 0; e < g.edge_count(); ++e)
                    if (compose(d.arrows[e], c.basepoints[g.edge(e).src]) != c.basepoints[g.edge(e).dst])
                        return;
                visit(c);
                return;
            }
            std::size_t m = d.objects[i].size();
            for_each_function(na, m, SIZE_MAX, [&](const std::vector<std::size_t>& t) {
                c.basepoints[i] = FinFun{m, t};
                pick(i + 1);
            });
        };
        pick(0);
    }
}

void for_each_under_set(const FinSet& base, std::size_t max_set, const std::function<void(const UnderSet&)>& visit)
{
    for (std::size_t n = 0; n <= max_set; ++n)
        for_each_function(base.size(), n, SIZE_MAX, [&](const std::vector<std::size_t>& t) {
            visit(UnderSet{FinSet::range(n), FinFun{n, t}});
        });
}

}  // namespace hocolim
