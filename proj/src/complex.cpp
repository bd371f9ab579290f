#include "hocolim/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hocolim/errors.hpp"

namespace hocolim {

std::size_t TwoComplex::add_vertex(std::string id)
{
    if (!vertex_lookup_.emplace(id, vertices_.size()).second)
        throw ValidationError("complex: duplicate vertex id '" + id + "'");
    vertices_.push_back(std::move(id));
    return vertices_.size() - 1;
}

std::size_t TwoComplex::add_edge(std::string id, std::size_t src, std::size_t dst)
{
    if (src >= vertices_.size() || dst >= vertices_.size())
        throw ValidationError("complex: edge '" + id + "' references a missing vertex");
    if (!edge_lookup_.emplace(id, edges_.size()).second)
        throw ValidationError("complex: duplicate edge id '" + id + "'");
    edges_.push_back({std::move(id), src, dst});
    return edges_.size() - 1;
}

std::size_t TwoComplex::add_face(std::string id, std::vector<SignedEdge> boundary)
{
    if (boundary.empty())
        throw ValidationError("complex: face '" + id + "' has an empty boundary");
    for (const auto& s : boundary) {
        if (s.edge >= edges_.size())
            throw ValidationError("complex: face '" + id + "' uses a missing edge");
        if (s.sign != 1 && s.sign != -1)
            throw ValidationError("complex: face '" + id + "' has a sign other than +1/-1");
    }
    EdgeWord w{step_src(boundary.front()), boundary};
    std::size_t end = 0;
    try {
        end = word_end(w);
    } catch (const ValidationError&) {
        throw ValidationError("complex: boundary of face '" + id + "' does not chain");
    }
    if (end != w.start)
        throw ValidationError("complex: boundary of face '" + id + "' is not closed");
    if (!face_lookup_.emplace(id, faces_.size()).second)
        throw ValidationError("complex: duplicate face id '" + id + "'");
    faces_.push_back({std::move(id), std::move(boundary)});
    return faces_.size() - 1;
}

namespace {

std::size_t lookup(const std::unordered_map<std::string, std::size_t>& m, const std::string& id, const char* what)
{
    auto it = m.find(id);
    if (it == m.end())
        throw ValidationError(std::string("complex: unknown ") + what + " id '" + id + "'");
    return it->second;
}

}  // namespace

std::size_t TwoComplex::vertex_index(const std::string& id) const { return lookup(vertex_lookup_, id, "vertex"); }
std::size_t TwoComplex::edge_index(const std::string& id) const { return lookup(edge_lookup_, id, "edge"); }
std::size_t TwoComplex::face_index(const std::string& id) const { return lookup(face_lookup_, id, "face"); }

void TwoComplex::add_discarded(std::size_t dim, std::size_t count)
{
    if (dim < 3)
        throw std::logic_error("add_discarded: only cells of dimension >= 3 are dropped");
    if (count == 0)
        return;
    if (discarded_.size() < dim - 2)
        discarded_.resize(dim - 2, 0);
    discarded_[dim - 3] += count;
}

std::vector<std::size_t> TwoComplex::cell_counts() const
{
    std::vector<std::size_t> c{vertex_count(), edge_count(), face_count()};
    c.insert(c.end(), discarded_.begin(), discarded_.end());
    return c;
}

std::size_t TwoComplex::step_src(SignedEdge s) const
{
    const auto& e = edges_.at(s.edge);
    return s.sign > 0 ? e.src : e.dst;
}

std::size_t TwoComplex::step_dst(SignedEdge s) const
{
    const auto& e = edges_.at(s.edge);
    return s.sign > 0 ? e.dst : e.src;
}

std::size_t TwoComplex::word_end(const EdgeWord& w) const
{
    if (w.start >= vertices_.size())
        throw ValidationError("word: start vertex out of range");
    std::size_t at = w.start;
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
        const auto& s = w.steps[k];
        if (s.edge >= edges_.size())
            throw ValidationError("word: unknown edge at step " + std::to_string(k));
        if (step_src(s) != at)
            throw ValidationError("word: step " + std::to_string(k) + " (edge '" + edges_[s.edge].id +
                                  "') does not chain");
        at = step_dst(s);
    }
    return at;
}

TwoComplex TwoComplex::point()
{
    TwoComplex x;
    x.add_vertex("*");
    return x;
}

TwoComplex TwoComplex::circle()
{
    TwoComplex x;
    x.add_vertex("v");
    x.add_edge("a", 0, 0);
    return x;
}

TwoComplex TwoComplex::disk()
{
    TwoComplex x = circle();
    x.add_face("D", {{0, 1}});
    return x;
}

TwoComplex TwoComplex::torus()
{
    TwoComplex x;
    x.add_vertex("v");
    x.add_edge("a", 0, 0);
    x.add_edge("b", 0, 0);
    x.add_face("T", {{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    return x;
}

TwoComplex TwoComplex::projective_plane()
{
    TwoComplex x = circle();
    x.add_face("P", {{0, 1}, {0, 1}});
    return x;
}

TwoComplex TwoComplex::discrete(std::size_t n)
{
    TwoComplex x;
    for (std::size_t i = 0; i < n; ++i)
        x.add_vertex(std::to_string(i));
    return x;
}

EdgeWord inverse(const TwoComplex& x, const EdgeWord& w)
{
    EdgeWord out{x.word_end(w), {}};
    out.steps.reserve(w.steps.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
        out.steps.push_back({it->edge, -it->sign});
    return out;
}

EdgeWord concat(const TwoComplex& x, const EdgeWord& a, const EdgeWord& b)
{
    if (x.word_end(a) != b.start)
        throw ValidationError("concat: words do not chain");
    EdgeWord out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

EdgeWord free_reduce(const EdgeWord& w)
{
    EdgeWord out{w.start, {}};
    for (const auto& s : w.steps) {
        if (!out.steps.empty() && out.steps.back().edge == s.edge && out.steps.back().sign == -s.sign)
            out.steps.pop_back();
        else
            out.steps.push_back(s);
    }
    return out;
}

EdgeWord step_word(const TwoComplex& x, std::size_t edge, int sign)
{
    SignedEdge s{edge, sign};
    return EdgeWord{x.step_src(s), {s}};
}

EdgeWord empty_word(std::size_t at) { return EdgeWord{at, {}}; }

void CellMap::validate() const
{
    if (!source || !target)
        throw ValidationError("cell map: missing source or target");
    if (vertex_map.size() != source->vertex_count())
        throw ValidationError("cell map: vertex table has " + std::to_string(vertex_map.size()) +
                              " entries, source has " + std::to_string(source->vertex_count()) + " vertices");
    if (edge_map.size() != source->edge_count())
        throw ValidationError("cell map: edge table has " + std::to_string(edge_map.size()) +
                              " entries, source has " + std::to_string(source->edge_count()) + " edges");
    for (std::size_t v = 0; v < vertex_map.size(); ++v)
        if (vertex_map[v] >= target->vertex_count())
            throw ValidationError("cell map: vertex '" + source->vertex_id(v) + "' maps outside the target");
    for (std::size_t e = 0; e < edge_map.size(); ++e) {
        const auto& edge = source->edge(e);
        const auto& w = edge_map[e];
        if (w.start != vertex_map[edge.src])
            throw ValidationError("cell map: image of edge '" + edge.id + "' does not start at the image of its source");
        std::size_t end = 0;
        try {
            end = target->word_end(w);
        } catch (const ValidationError& err) {
            throw ValidationError("cell map: image of edge '" + edge.id + "': " + err.what());
        }
        if (end != vertex_map[edge.dst])
            throw ValidationError("cell map: image of edge '" + edge.id + "' does not end at the image of its target");
    }
}

EdgeWord CellMap::apply(const EdgeWord& w) const
{
    EdgeWord out{vertex_map.at(w.start), {}};
    for (const auto& s : w.steps) {
        const auto& img = edge_map.at(s.edge);
        if (s.sign > 0) {
            out.steps.insert(out.steps.end(), img.steps.begin(), img.steps.end());
        } else {
            for (auto it = img.steps.rbegin(); it != img.steps.rend(); ++it)
                out.steps.push_back({it->edge, -it->sign});
        }
    }
    return out;
}

CellMap CellMap::identity(const ComplexPtr& x)
{
    CellMap f{x, x, {}, {}};
    f.vertex_map.resize(x->vertex_count());
    std::iota(f.vertex_map.begin(), f.vertex_map.end(), 0);
    for (std::size_t e = 0; e < x->edge_count(); ++e)
        f.edge_map.push_back(step_word(*x, e));
    return f;
}

CellMap CellMap::constant(const ComplexPtr& source, const ComplexPtr& target, std::size_t at)
{
    CellMap f{source, target, std::vector<std::size_t>(source->vertex_count(), at),
              std::vector<EdgeWord>(source->edge_count(), empty_word(at))};
    return f;
}

CellMap compose_cell_maps(const CellMap& g, const CellMap& f)
{
    if (f.target != g.source && (f.target == nullptr || g.source == nullptr ||
                                 f.target->vertex_count() != g.source->vertex_count() ||
                                 f.target->edge_count() != g.source->edge_count() ||
                                 f.target->vertex_ids() != g.source->vertex_ids()))
        throw ValidationError("compose_cell_maps: codomain of f is not the domain of g");
    CellMap h{f.source, g.target, {}, {}};
    h.vertex_map.reserve(f.vertex_map.size());
    for (std::size_t v : f.vertex_map)
        h.vertex_map.push_back(g.vertex_map.at(v));
    h.edge_map.reserve(f.edge_map.size());
    for (const auto& w : f.edge_map)
        h.edge_map.push_back(g.apply(w));
    return h;
}

DisjointUnion disjoint_union(const std::vector<ComplexPtr>& xs)
{
    TwoComplex u;
    std::vector<std::size_t> v_off, e_off;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto& x = *xs[k];
        const std::string tag = std::to_string(k) + ":";
        v_off.push_back(u.vertex_count());
        e_off.push_back(u.edge_count());
        for (const auto& v : x.vertex_ids())
            u.add_vertex(tag + v);
        for (const auto& e : x.edges())
            u.add_edge(tag + e.id, v_off[k] + e.src, v_off[k] + e.dst);
        for (const auto& f : x.faces()) {
            auto b = f.boundary;
            for (auto& s : b)
                s.edge += e_off[k];
            u.add_face(tag + f.id, std::move(b));
        }
        const auto& d = x.discarded_cells();
        for (std::size_t i = 0; i < d.size(); ++i)
            u.add_discarded(i + 3, d[i]);
    }
    DisjointUnion result{share(std::move(u)), {}};
    for (std::size_t k = 0; k < xs.size(); ++k) {
        CellMap inj{xs[k], result.complex, {}, {}};
        for (std::size_t v = 0; v < xs[k]->vertex_count(); ++v)
            inj.vertex_map.push_back(v_off[k] + v);
        for (std::size_t e = 0; e < xs[k]->edge_count(); ++e)
            inj.edge_map.push_back(step_word(*result.complex, e_off[k] + e));
        result.injections.push_back(std::move(inj));
    }
    return result;
}

Pushout pushout(const CellMap& f, const CellMap& g)
{
    if (!f.source || !g.source || (f.source != g.source && f.source->vertex_ids() != g.source->vertex_ids()))
        throw ValidationError("pushout: the two maps have different sources");
    f.validate();
    g.validate();
    const TwoComplex& c = *f.source;
    const TwoComplex& a = *f.target;
    const TwoComplex& b = *g.target;

    TwoComplex p;
    for (const auto& v : a.vertex_ids())
        p.add_vertex("inl(" + v + ")");
    const std::size_t vb = a.vertex_count();
    for (const auto& v : b.vertex_ids())
        p.add_vertex("inr(" + v + ")");

    for (const auto& e : a.edges())
        p.add_edge("inl(" + e.id + ")", e.src, e.dst);
    const std::size_t eb = a.edge_count();
    for (const auto& e : b.edges())
        p.add_edge("inr(" + e.id + ")", vb + e.src, vb + e.dst);

    std::vector<std::size_t> glue;
    glue.reserve(c.vertex_count());
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
        glue.push_back(p.add_edge("glue(" + c.vertex_id(v) + ")", f.vertex_map[v], vb + g.vertex_map[v]));

    for (const auto& face : a.faces())
        p.add_face("inl(" + face.id + ")", face.boundary);
    for (const auto& face : b.faces()) {
        auto bd = face.boundary;
        for (auto& s : bd)
            s.edge += eb;
        p.add_face("inr(" + face.id + ")", std::move(bd));
    }

    std::vector<std::size_t> squares;
    squares.reserve(c.edge_count());
    for (std::size_t e = 0; e < c.edge_count(); ++e) {
        const auto& edge = c.edge(e);
        std::vector<SignedEdge> bd;
        bd.push_back({glue[edge.src], -1});
        for (const auto& s : f.edge_map[e].steps)
            bd.push_back(s);
        bd.push_back({glue[edge.dst], 1});
        const auto& gw = g.edge_map[e].steps;
        for (auto it = gw.rbegin(); it != gw.rend(); ++it)
            bd.push_back({eb + it->edge, -it->sign});
        squares.push_back(p.add_face("sq(" + edge.id + ")", std::move(bd)));
    }

    // Cells of dimension k >= 3: those of A and B plus C's cells of dimension k-1.
    auto ca = a.cell_counts(), cb = b.cell_counts(), cc = c.cell_counts();
    const std::size_t top = std::max({ca.size(), cb.size(), cc.size() + 1});
    for (std::size_t k = 3; k < top; ++k) {
        std::size_t n = 0;
        if (k < ca.size()) n += ca[k];
        if (k < cb.size()) n += cb[k];
        if (k - 1 < cc.size()) n += cc[k - 1];
        p.add_discarded(k, n);
    }

    Pushout result{share(std::move(p)), {}, {}, std::move(glue), std::move(squares)};
    const auto& px = *result.complex;

    result.inl = CellMap{f.target, result.complex, {}, {}};
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        result.inl.vertex_map.push_back(v);
    for (std::size_t e = 0; e < a.edge_count(); ++e)
        result.inl.edge_map.push_back(step_word(px, e));

    result.inr = CellMap{g.target, result.complex, {}, {}};
    for (std::size_t v = 0; v < b.vertex_count(); ++v)
        result.inr.vertex_map.push_back(vb + v);
    for (std::size_t e = 0; e < b.edge_count(); ++e)
        result.inr.edge_map.push_back(step_word(px, eb + e));
    return result;
}

Partition pi0(const TwoComplex& x)
{
    std::vector<std::size_t> parent(x.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (const auto& e : x.edges()) {
        std::size_t a = find(e.src), b = find(e.dst);
        if (a == b)
            continue;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
    }
    Partition p;
    p.class_of.assign(x.vertex_count(), 0);
    std::vector<std::size_t> class_of_root(x.vertex_count(), SIZE_MAX);
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        std::size_t r = find(v);
        if (class_of_root[r] == SIZE_MAX) {
            class_of_root[r] = p.classes.size();
            p.classes.emplace_back();
        }
        p.class_of[v] = class_of_root[r];
        p.classes[class_of_root[r]].push_back(v);
    }
    return p;
}

std::vector<std::size_t> induced_pi0(const CellMap& f, const Partition& source, const Partition& target)
{
    std::vector<std::size_t> out;
    out.reserve(source.size());
    for (const auto& cls : source.classes)
        out.push_back(target.class_of.at(f.vertex_map.at(cls.front())));
    return out;
}

Presentation pi1_presentation(const TwoComplex& x, std::size_t base)
{
    if (base >= x.vertex_count())
        throw ValidationError("pi1_presentation: unknown base vertex");

    std::vector<std::vector<std::size_t>> incident(x.vertex_count());
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        incident[x.edge(e).src].push_back(e);
        if (x.edge(e).dst != x.edge(e).src)
            incident[x.edge(e).dst].push_back(e);
    }
    for (auto& inc : incident)
        std::sort(inc.begin(), inc.end());

    std::vector<bool> seen(x.vertex_count(), false);
    std::vector<bool> tree(x.edge_count(), false);
    std::deque<std::size_t> queue{base};
    seen[base] = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t e : incident[v]) {
            const auto& edge = x.edge(e);
            std::size_t w = edge.src == v ? edge.dst : edge.src;
            if (!seen[w]) {
                seen[w] = true;
                tree[e] = true;
                queue.push_back(w);
            }
        }
    }

    Presentation p;
    std::vector<std::size_t> gen_of(x.edge_count(), SIZE_MAX);
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        if (seen[x.edge(e).src] && !tree[e]) {
            gen_of[e] = p.generators.size();
            p.generators.push_back(x.edge(e).id);
            p.generator_edges.push_back(e);
        }
    }
    for (const auto& face : x.faces()) {
        if (!seen[x.step_src(face.boundary.front())])
            continue;
        std::vector<std::pair<std::size_t, int>> rel;
        for (const auto& s : face.boundary)
            if (!tree[s.edge])
                rel.emplace_back(gen_of[s.edge], s.sign);
        p.relators.push_back(std::move(rel));
    }
    return p;
}

long euler_characteristic(const TwoComplex& x)
{
    return static_cast<long>(x.vertex_count()) - static_cast<long>(x.edge_count()) +
           static_cast<long>(x.face_count());
}

long full_euler_characteristic(const TwoComplex& x)
{
    long chi = euler_characteristic(x);
    const auto& d = x.discarded_cells();
    for (std::size_t i = 0; i < d.size(); ++i)
        chi += ((i + 3) % 2 == 0 ? 1 : -1) * static_cast<long>(d[i]);
    return chi;
}

}  // namespace hocolim
