#include "hocolim/coslice.hpp"

#include <algorithm>

#include "hocolim/errors.hpp"

namespace hocolim {

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    if (a->vertex_ids() != b->vertex_ids() || a->edge_count() != b->edge_count())
        return false;
    for (std::size_t e = 0; e < a->edge_count(); ++e)
        if (a->edge(e).id != b->edge(e).id || a->edge(e).src != b->edge(e).src || a->edge(e).dst != b->edge(e).dst)
            return false;
    return true;
}

EdgeWord single(const TwoComplex& x, std::size_t edge, int sign = 1) { return step_word(x, edge, sign); }

/// Map out of a disjoint union given one map per summand.
CellMap union_map(const DisjointUnion& du, const std::vector<CellMap>& parts, const ComplexPtr& target)
{
    CellMap m{du.complex, target, {}, {}};
    for (const auto& p : parts) {
        m.vertex_map.insert(m.vertex_map.end(), p.vertex_map.begin(), p.vertex_map.end());
        m.edge_map.insert(m.edge_map.end(), p.edge_map.begin(), p.edge_map.end());
    }
    m.validate();
    return m;
}

/// Map out of a pushout given its restrictions to both sides and an image
/// word for every glue edge.
CellMap pushout_map(const Pushout& po, const CellMap& left, const CellMap& right, std::vector<EdgeWord> glue)
{
    CellMap m{po.complex, left.target, {}, {}};
    m.vertex_map = left.vertex_map;
    m.vertex_map.insert(m.vertex_map.end(), right.vertex_map.begin(), right.vertex_map.end());
    m.edge_map = left.edge_map;
    m.edge_map.insert(m.edge_map.end(), right.edge_map.begin(), right.edge_map.end());
    for (auto& w : glue)
        m.edge_map.push_back(std::move(w));
    m.validate();
    return m;
}

std::size_t edge_of(const CellMap& inclusion, std::size_t e) { return inclusion.edge_map[e].steps.front().edge; }

}  // namespace

void DiagramCx::validate() const
{
    if (objects.size() != shape.vertex_count())
        throw ValidationError("diagram: expected one object per vertex");
    if (arrows.size() != shape.edge_count())
        throw ValidationError("diagram: expected one arrow per edge");
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (!objects[i])
            throw ValidationError("diagram: missing object at '" + shape.vertex_id(i) + "'");
    for (std::size_t e = 0; e < arrows.size(); ++e) {
        const auto& edge = shape.edge(e);
        if (!same_complex(arrows[e].source, objects[edge.src]) || !same_complex(arrows[e].target, objects[edge.dst]))
            throw ValidationError("diagram: arrow '" + edge.id + "' does not run between its endpoint objects");
        try {
            arrows[e].validate();
        } catch (const ValidationError& err) {
            throw ValidationError("diagram: arrow '" + edge.id + "': " + err.what());
        }
    }
}

void ADiagramCx::validate() const
{
    underlying.validate();
    if (!base)
        throw ValidationError("A-diagram: missing base");
    const auto& g = shape();
    if (basepoints.size() != g.vertex_count())
        throw ValidationError("A-diagram: expected one basepoint map per vertex");
    for (std::size_t i = 0; i < basepoints.size(); ++i) {
        if (!same_complex(basepoints[i].source, base) || !same_complex(basepoints[i].target, underlying.objects[i]))
            throw ValidationError("A-diagram: basepoint map of '" + g.vertex_id(i) + "' has the wrong ends");
        try {
            basepoints[i].validate();
        } catch (const ValidationError& err) {
            throw ValidationError("A-diagram: basepoint map of '" + g.vertex_id(i) + "': " + err.what());
        }
    }
    if (pointedness.size() != g.edge_count())
        throw ValidationError("A-diagram: expected pointedness words for every edge");
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (pointedness[e].size() != base->vertex_count())
            throw ValidationError("A-diagram: edge '" + edge.id + "' needs one pointedness word per base vertex");
        const auto& fj = *underlying.objects[edge.dst];
        for (std::size_t a = 0; a < base->vertex_count(); ++a) {
            const auto& w = pointedness[e][a];
            const std::string where = "A-diagram: pointedness word of '" + edge.id + "' at '" + base->vertex_id(a) + "'";
            if (w.start != underlying.arrows[e](basepoints[edge.src](a)))
                throw ValidationError(where + " does not start at the image of the basepoint");
            std::size_t end = 0;
            try {
                end = fj.word_end(w);
            } catch (const ValidationError& err) {
                throw ValidationError(where + ": " + err.what());
            }
            if (end != basepoints[edge.dst](a))
                throw ValidationError(where + " does not end at the target basepoint");
        }
    }
}

DiagramCx constant_diagram(const Graph& shape, const ComplexPtr& a)
{
    DiagramCx d{shape, std::vector<ComplexPtr>(shape.vertex_count(), a), {}};
    for (std::size_t e = 0; e < shape.edge_count(); ++e)
        d.arrows.push_back(CellMap::identity(a));
    return d;
}

ColimCx colim_cx(const DiagramCx& d)
{
    d.validate();
    const auto& g = d.shape;
    TwoComplex x;
    std::vector<std::size_t> voff, eoff;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        voff.push_back(x.vertex_count());
        for (const auto& v : d.objects[i]->vertex_ids())
            x.add_vertex(g.vertex_id(i) + ":" + v);
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        eoff.push_back(x.edge_count());
        for (const auto& e : d.objects[i]->edges())
            x.add_edge(g.vertex_id(i) + ":" + e.id, voff[i] + e.src, voff[i] + e.dst);
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (const auto& f : d.objects[i]->faces()) {
            auto bd = f.boundary;
            for (auto& s : bd)
                s.edge += eoff[i];
            x.add_face(g.vertex_id(i) + ":" + f.id, std::move(bd));
        }

    ColimCx c;
    c.kappa.resize(g.edge_count());
    c.squares.resize(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const auto& fi = *d.objects[edge.src];
        for (std::size_t v = 0; v < fi.vertex_count(); ++v)
            c.kappa[e].push_back(x.add_edge("k(" + edge.id + "," + fi.vertex_id(v) + ")",
                                             voff[edge.dst] + d.arrows[e](v), voff[edge.src] + v));
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const auto& fi = *d.objects[edge.src];
        for (std::size_t k = 0; k < fi.edge_count(); ++k) {
            const auto& dk = fi.edge(k);
            std::vector<SignedEdge> bd;
            for (const auto& s : d.arrows[e].edge_map[k].steps)
                bd.push_back({eoff[edge.dst] + s.edge, s.sign});
            bd.push_back({c.kappa[e][dk.dst], 1});
            bd.push_back({eoff[edge.src] + k, -1});
            bd.push_back({c.kappa[e][dk.src], -1});
            c.squares[e].push_back(x.add_face("n(" + edge.id + "," + dk.id + ")", std::move(bd)));
        }
    }

    // Dimension k >= 3: cells of the objects plus (k-1)-cells of each edge source.
    std::size_t top = 0;
    for (const auto& o : d.objects)
        top = std::max(top, o->cell_counts().size() + 1);
    for (std::size_t k = 3; k < top; ++k) {
        std::size_t n = 0;
        for (const auto& o : d.objects) {
            auto cc = o->cell_counts();
            if (k < cc.size())
                n += cc[k];
        }
        for (const auto& edge : g.edges()) {
            auto cc = d.objects[edge.src]->cell_counts();
            if (k - 1 < cc.size())
                n += cc[k - 1];
        }
        x.add_discarded(k, n);
    }

    c.complex = share(std::move(x));
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        CellMap inj{d.objects[i], c.complex, {}, {}};
        for (std::size_t v = 0; v < d.objects[i]->vertex_count(); ++v)
            inj.vertex_map.push_back(voff[i] + v);
        for (std::size_t e = 0; e < d.objects[i]->edge_count(); ++e)
            inj.edge_map.push_back(single(*c.complex, eoff[i] + e));
        c.injections.push_back(std::move(inj));
    }
    return c;
}

CellMap fold_map(const ColimCx& constant, const ComplexPtr& a)
{
    CellMap f{constant.complex, a, std::vector<std::size_t>(constant.complex->vertex_count()),
              std::vector<EdgeWord>(constant.complex->edge_count())};
    for (const auto& inj : constant.injections) {
        for (std::size_t v = 0; v < a->vertex_count(); ++v)
            f.vertex_map[inj(v)] = v;
        for (std::size_t e = 0; e < a->edge_count(); ++e)
            f.edge_map[edge_of(inj, e)] = single(*a, e);
    }
    for (const auto& row : constant.kappa)
        for (std::size_t v = 0; v < row.size(); ++v)
            f.edge_map[row[v]] = empty_word(v);
    f.validate();
    return f;
}

CellMap build_psi(const ADiagramCx& d, const ColimCx& constant, const ColimCx& colim)
{
    const auto& a = *d.base;
    const auto& cx = *colim.complex;
    CellMap psi{constant.complex, colim.complex, std::vector<std::size_t>(constant.complex->vertex_count()),
                std::vector<EdgeWord>(constant.complex->edge_count())};
    for (std::size_t i = 0; i < d.shape().vertex_count(); ++i) {
        const auto& cin = constant.injections[i];
        const auto& inj = colim.injections[i];
        const auto& b = d.basepoints[i];
        for (std::size_t v = 0; v < a.vertex_count(); ++v)
            psi.vertex_map[cin(v)] = inj(b(v));
        for (std::size_t e = 0; e < a.edge_count(); ++e)
            psi.edge_map[edge_of(cin, e)] = inj.apply(b.edge_map[e]);
    }
    for (std::size_t e = 0; e < d.shape().edge_count(); ++e) {
        const auto& edge = d.shape().edge(e);
        const auto& bi = d.basepoints[edge.src];
        const auto& inj_j = colim.injections[edge.dst];
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            EdgeWord back = inverse(cx, inj_j.apply(d.pointedness[e][v]));
            psi.edge_map[constant.kappa[e][v]] = concat(cx, back, single(cx, colim.kappa[e][bi(v)]));
        }
    }
    psi.validate();
    return psi;
}

ConstructionOne construction_one(const ADiagramCx& d)
{
    d.validate();
    ConstructionOne c;
    c.constant = colim_cx(constant_diagram(d.shape(), d.base));
    c.colim = colim_cx(d.underlying);
    c.fold = fold_map(c.constant, d.base);
    c.psi = build_psi(d, c.constant, c.colim);
    c.po = pushout(c.fold, c.psi);
    c.result = CosliceComplex{d.base, c.po.complex, c.po.inl};

    const auto& p = *c.po.complex;
    const auto& a = *d.base;
    const auto& g = d.shape();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        c.cocone.legs.push_back(compose_cell_maps(c.po.inr, c.colim.injections[i]));
        std::vector<EdgeWord> tau;
        for (std::size_t v = 0; v < a.vertex_count(); ++v)
            tau.push_back(single(p, c.po.glue[c.constant.injections[i](v)], -1));
        c.cocone.leg_pointedness.push_back(std::move(tau));
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::vector<EdgeWord> delta;
        for (std::size_t k : c.colim.kappa[e])
            delta.push_back(c.po.inr.apply(single(*c.colim.complex, k)));
        c.cocone.commuting.push_back(std::move(delta));
        std::vector<std::size_t> eps;
        for (std::size_t k : c.constant.kappa[e])
            eps.push_back(c.po.squares[k]);
        c.cocone.squares.push_back(std::move(eps));
    }
    return c;
}

CosliceCoproduct coslice_coproduct(const ComplexPtr& base, const std::vector<CosliceComplex>& objects)
{
    for (std::size_t k = 0; k < objects.size(); ++k)
        if (!same_complex(objects[k].base, base) || !same_complex(objects[k].basept.source, base) ||
            !same_complex(objects[k].basept.target, objects[k].total))
            throw ValidationError("coslice_coproduct: summand " + std::to_string(k) + " is not under the base");

    DisjointUnion apex = disjoint_union(std::vector<ComplexPtr>(objects.size(), base));
    std::vector<ComplexPtr> totals;
    for (const auto& o : objects)
        totals.push_back(o.total);
    CosliceCoproduct cp;
    cp.sum = disjoint_union(totals);

    std::vector<CellMap> folds, points;
    for (std::size_t k = 0; k < objects.size(); ++k) {
        folds.push_back(CellMap::identity(base));
        points.push_back(compose_cell_maps(cp.sum.injections[k], objects[k].basept));
    }
    CellMap f = union_map(apex, folds, base);
    CellMap g = union_map(apex, points, cp.sum.complex);
    cp.po = pushout(f, g);
    cp.result = CosliceComplex{base, cp.po.complex, cp.po.inl};
    for (std::size_t k = 0; k < objects.size(); ++k)
        cp.injections.push_back(compose_cell_maps(cp.po.inr, cp.sum.injections[k]));
    return cp;
}

DiagramCx augmented_diagram(const ADiagramCx& d)
{
    d.validate();
    const auto& g = d.shape();
    std::vector<std::string> vs = g.vertex_ids();
    vs.push_back("bot");
    std::vector<Graph::EdgeSpec> es;
    for (const auto& e : g.edges())
        es.push_back({e.id, g.vertex_id(e.src), g.vertex_id(e.dst)});
    for (const auto& v : g.vertex_ids())
        es.push_back({"aug(" + v + ")", "bot", v});
    DiagramCx z{Graph(std::move(vs), es), d.underlying.objects, d.underlying.arrows};
    z.objects.push_back(d.base);
    for (const auto& b : d.basepoints)
        z.arrows.push_back(b);
    z.validate();
    return z;
}

ConstructionTwo construction_two(const ADiagramCx& d)
{
    d.validate();
    const auto& g = d.shape();
    const auto& a = *d.base;
    const std::size_t na = a.vertex_count();

    ConstructionTwo c;
    std::vector<CosliceComplex> vobjs, eobjs;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        vobjs.push_back({d.base, d.underlying.objects[i], d.basepoints[i]});
    for (const auto& edge : g.edges())
        eobjs.push_back({d.base, d.underlying.objects[edge.src], d.basepoints[edge.src]});
    c.vertex_wedge = coslice_coproduct(d.base, vobjs);
    c.edge_wedge = coslice_coproduct(d.base, eobjs);
    c.double_wedge = coslice_coproduct(d.base, {c.edge_wedge.result, c.edge_wedge.result});

    const auto& wv = c.vertex_wedge;
    const auto& we = c.edge_wedge;
    const auto& dw = c.double_wedge;
    const auto& wvx = *wv.po.complex;
    auto wv_glue = [&](std::size_t i, std::size_t v) { return wv.po.glue[i * na + v]; };

    // Both legs of sigma agree on the base; they differ on the summand F_src(e).
    std::vector<CellMap> to_src, to_dst;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        to_src.push_back(wv.injections[edge.src]);
        to_dst.push_back(compose_cell_maps(wv.injections[edge.dst], d.underlying.arrows[e]));
    }
    std::vector<EdgeWord> glue1, glue2;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        for (std::size_t v = 0; v < na; ++v) {
            glue1.push_back(single(wvx, wv_glue(edge.src, v)));
            EdgeWord back = inverse(wvx, wv.injections[edge.dst].apply(d.pointedness[e][v]));
            glue2.push_back(concat(wvx, single(wvx, wv_glue(edge.dst, v)), back));
        }
    }
    CellMap alpha1 = pushout_map(we.po, wv.po.inl, union_map(we.sum, to_src, wv.po.complex), glue1);
    CellMap alpha2 = pushout_map(we.po, wv.po.inl, union_map(we.sum, to_dst, wv.po.complex), glue2);

    std::vector<EdgeWord> fold_glue, sigma_glue;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t v = 0; v < na; ++v) {
            fold_glue.push_back(empty_word(we.po.inl(v)));
            sigma_glue.push_back(empty_word(wv.po.inl(v)));
        }
    CellMap id_we = CellMap::identity(we.po.complex);
    c.fold = pushout_map(dw.po, we.po.inl, union_map(dw.sum, {id_we, id_we}, we.po.complex), fold_glue);
    c.sigma = pushout_map(dw.po, wv.po.inl, union_map(dw.sum, {alpha1, alpha2}, wv.po.complex), sigma_glue);

    c.po = pushout(c.fold, c.sigma);
    c.result = CosliceComplex{d.base, c.po.complex, compose_cell_maps(c.po.inl, we.po.inl)};
    return c;
}

CellMap t_f_map(const ADiagramCx& d, const ConstructionOne& one, const ConstructionTwo& two)
{
    const auto& g = d.shape();
    const std::size_t na = d.base->vertex_count();
    const auto& pw = two.po;
    const auto& pwx = *pw.complex;
    const auto& we = two.edge_wedge;
    const auto& wv = two.vertex_wedge;
    const auto& dw = two.double_wedge;

    // Glue edge of PW at the double-wedge vertex of copy k over the edge-wedge vertex (e, x).
    auto pw_glue = [&](std::size_t copy, std::size_t e, std::size_t x) {
        std::size_t we_vertex = we.po.inr(we.sum.injections[e](x));
        std::size_t dw_vertex = dw.po.inr(dw.sum.injections[copy](we_vertex));
        return pw.glue[dw_vertex];
    };

    const auto& colim = one.colim;
    CellMap right{colim.complex, pw.complex, std::vector<std::size_t>(colim.complex->vertex_count()),
                  std::vector<EdgeWord>(colim.complex->edge_count())};
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        CellMap to_pw = compose_cell_maps(pw.inr, wv.injections[i]);
        const auto& inj = colim.injections[i];
        const auto& fi = *d.underlying.objects[i];
        for (std::size_t v = 0; v < fi.vertex_count(); ++v)
            right.vertex_map[inj(v)] = to_pw(v);
        for (std::size_t e = 0; e < fi.edge_count(); ++e)
            right.edge_map[edge_of(inj, e)] = to_pw.edge_map[e];
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        for (std::size_t x = 0; x < colim.kappa[e].size(); ++x) {
            EdgeWord w = single(pwx, pw_glue(1, e, x), -1);
            w.steps.push_back({pw_glue(0, e, x), 1});
            right.edge_map[colim.kappa[e][x]] = w;
        }

    std::vector<EdgeWord> glue;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t v = 0; v < na; ++v) {
            EdgeWord w = single(pwx, pw.glue[dw.po.inl(v)]);
            EdgeWord tail = pw.inr.apply(single(*wv.po.complex, wv.po.glue[i * na + v]));
            glue.push_back(concat(pwx, w, tail));
        }
    // The constant colimit lists its vertices block by block, i.e. (i, a) in order.
    return pushout_map(one.po, two.result.basept, right, std::move(glue));
}

void validate_morphism(const ADiagramCx& f, const ADiagramCx& g, const ADiagramMorphism& delta)
{
    const auto& shape = f.shape();
    if (shape.vertex_count() != g.shape().vertex_count() || shape.edge_count() != g.shape().edge_count() ||
        !same_complex(f.base, g.base))
        throw ValidationError("morphism: diagrams differ in shape or base");
    if (delta.components.size() != shape.vertex_count() || delta.pointedness.size() != shape.vertex_count() ||
        delta.naturality.size() != shape.edge_count())
        throw ValidationError("morphism: component tables have the wrong length");
    const std::size_t na = f.base->vertex_count();
    for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
        const auto& c = delta.components[i];
        if (!same_complex(c.source, f.underlying.objects[i]) || !same_complex(c.target, g.underlying.objects[i]))
            throw ValidationError("morphism: component at '" + shape.vertex_id(i) + "' has the wrong ends");
        c.validate();
        if (delta.pointedness[i].size() != na)
            throw ValidationError("morphism: pointedness table at '" + shape.vertex_id(i) + "' has the wrong length");
        for (std::size_t a = 0; a < na; ++a) {
            const auto& w = delta.pointedness[i][a];
            if (w.start != c(f.basepoints[i](a)) || c.target->word_end(w) != g.basepoints[i](a))
                throw ValidationError("morphism: pointedness word at '" + shape.vertex_id(i) + "' has wrong ends");
        }
    }
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
        const auto& edge = shape.edge(e);
        const auto& fi = *f.underlying.objects[edge.src];
        if (delta.naturality[e].size() != fi.vertex_count())
            throw ValidationError("morphism: naturality table at '" + edge.id + "' has the wrong length");
        for (std::size_t x = 0; x < fi.vertex_count(); ++x) {
            const auto& w = delta.naturality[e][x];
            std::size_t start = g.underlying.arrows[e](delta.components[edge.src](x));
            std::size_t end = delta.components[edge.dst](f.underlying.arrows[e](x));
            if (w.start != start || g.underlying.objects[edge.dst]->word_end(w) != end)
                throw ValidationError("morphism: naturality word at '" + edge.id + "' has wrong ends");
        }
    }
}

ADiagramMorphism identity_morphism(const ADiagramCx& d)
{
    ADiagramMorphism m;
    const auto& shape = d.shape();
    for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
        m.components.push_back(CellMap::identity(d.underlying.objects[i]));
        std::vector<EdgeWord> pw;
        for (std::size_t a = 0; a < d.base->vertex_count(); ++a)
            pw.push_back(empty_word(d.basepoints[i](a)));
        m.pointedness.push_back(std::move(pw));
    }
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
        std::vector<EdgeWord> nat;
        const auto& arrow = d.underlying.arrows[e];
        for (std::size_t x = 0; x < arrow.vertex_map.size(); ++x)
            nat.push_back(empty_word(arrow(x)));
        m.naturality.push_back(std::move(nat));
    }
    return m;
}

ADiagramMorphism compose_morphisms(const ADiagramCx& f, const ADiagramCx& g, const ADiagramCx& h,
                                   const ADiagramMorphism& delta1, const ADiagramMorphism& delta2)
{
    validate_morphism(f, g, delta1);
    validate_morphism(g, h, delta2);
    ADiagramMorphism m;
    const auto& shape = f.shape();
    for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
        const auto& d1 = delta1.components[i];
        const auto& d2 = delta2.components[i];
        m.components.push_back(compose_cell_maps(d2, d1));
        const auto& hi = *h.underlying.objects[i];
        std::vector<EdgeWord> pw;
        for (std::size_t a = 0; a < f.base->vertex_count(); ++a)
            pw.push_back(concat(hi, d2.apply(delta1.pointedness[i][a]), delta2.pointedness[i][a]));
        m.pointedness.push_back(std::move(pw));
    }
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
        const auto& edge = shape.edge(e);
        const auto& hj = *h.underlying.objects[edge.dst];
        const auto& d2j = delta2.components[edge.dst];
        std::vector<EdgeWord> nat;
        for (std::size_t x = 0; x < delta1.naturality[e].size(); ++x) {
            std::size_t y = delta1.components[edge.src](x);
            nat.push_back(concat(hj, delta2.naturality[e][y], d2j.apply(delta1.naturality[e][x])));
        }
        m.naturality.push_back(std::move(nat));
    }
    return m;
}

CellMap colim_map(const ADiagramCx& f, const ADiagramCx& g, const ADiagramMorphism& delta,
                  const ConstructionOne& pf, const ConstructionOne& pg)
{
    validate_morphism(f, g, delta);
    const auto& shape = f.shape();
    const std::size_t na = f.base->vertex_count();
    const auto& cf = pf.colim;
    const auto& cg = pg.colim;
    const auto& cgx = *cg.complex;
    const auto& px = *pg.po.complex;

    CellMap onto_colim{cf.complex, cg.complex, std::vector<std::size_t>(cf.complex->vertex_count()),
                       std::vector<EdgeWord>(cf.complex->edge_count())};
    for (std::size_t i = 0; i < shape.vertex_count(); ++i) {
        CellMap m = compose_cell_maps(cg.injections[i], delta.components[i]);
        const auto& inj = cf.injections[i];
        for (std::size_t v = 0; v < m.vertex_map.size(); ++v)
            onto_colim.vertex_map[inj(v)] = m(v);
        for (std::size_t e = 0; e < m.edge_map.size(); ++e)
            onto_colim.edge_map[edge_of(inj, e)] = m.edge_map[e];
    }
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
        const auto& edge = shape.edge(e);
        for (std::size_t x = 0; x < cf.kappa[e].size(); ++x) {
            EdgeWord back = inverse(cgx, cg.injections[edge.dst].apply(delta.naturality[e][x]));
            std::size_t y = delta.components[edge.src](x);
            onto_colim.edge_map[cf.kappa[e][x]] = concat(cgx, back, single(cgx, cg.kappa[e][y]));
        }
    }
    onto_colim.validate();

    std::vector<EdgeWord> glue;
    for (std::size_t i = 0; i < shape.vertex_count(); ++i)
        for (std::size_t v = 0; v < na; ++v) {
            EdgeWord w = single(px, pg.po.glue[pg.constant.injections[i](v)]);
            EdgeWord corr = pg.po.inr.apply(cg.injections[i].apply(delta.pointedness[i][v]));
            glue.push_back(concat(px, w, inverse(px, corr)));
        }
    return pushout_map(pf.po, pg.po.inl, compose_cell_maps(pg.po.inr, onto_colim), std::move(glue));
}

ComplexInvariants invariants(const TwoComplex& x)
{
    ComplexInvariants inv;
    inv.cells = x.cell_counts();
    inv.pi0 = pi0(x).size();
    inv.euler = euler_characteristic(x);
    inv.full_euler = full_euler_characteristic(x);
    auto h = homology_groups(x);
    inv.h0 = h.h0;
    inv.h1 = h.h1;
    inv.cohomology1 = cohomology_h1(x);
    return inv;
}

MapCheck check_map(const CellMap& f)
{
    MapCheck m;
    Partition ps = pi0(*f.source), pt = pi0(*f.target);
    m.source_pi0 = ps.size();
    m.target_pi0 = pt.size();
    auto induced = induced_pi0(f, ps, pt);
    std::vector<bool> hit(pt.size(), false);
    bool injective = true;
    for (std::size_t c : induced) {
        if (hit[c])
            injective = false;
        hit[c] = true;
    }
    m.pi0_bijective = injective && ps.size() == pt.size();
    m.h1 = induced_h1(f);
    return m;
}

MapCheck creation_comparison(const ADiagramCx& d)
{
    ConstructionOne one = construction_one(d);
    return check_map(one.po.inr);
}

MapCheck check_tree_creation(const ADiagramCx& d)
{
    if (!is_tree(d.shape()))
        throw PreconditionError("check_tree_creation: the shape is not a tree");
    return creation_comparison(d);
}

ConnectivityReport check_connectivity(const ADiagramCx& d)
{
    ConnectivityReport r;
    r.hypothesis = pi0(*d.base).size() == 1;
    for (const auto& o : d.underlying.objects)
        r.hypothesis = r.hypothesis && pi0(*o).size() == 1;
    ConstructionOne one = construction_one(d);
    r.pi0 = pi0(*one.po.complex).size();
    r.passed = !r.hypothesis || r.pi0 == 1;
    ColimCx loop = colim_cx(constant_diagram(Graph::loop(), share(TwoComplex::point())));
    r.plain_loop_h1 = homology_groups(*loop.complex).h1;
    return r;
}

ConstructionComparison compare_constructions(const ADiagramCx& d)
{
    ConstructionOne one = construction_one(d);
    ConstructionTwo two = construction_two(d);
    ConstructionComparison c;
    c.one = invariants(*one.po.complex);
    c.two = invariants(*two.po.complex);
    c.invariants_agree = c.one.pi0 == c.two.pi0 && c.one.full_euler == c.two.full_euler && c.one.h1 == c.two.h1;
    c.comparison = check_map(t_f_map(d, one, two));
    return c;
}

namespace {

FinSet class_names(const TwoComplex& x, const Partition& p)
{
    FinSet s;
    for (const auto& cls : p.classes)
        s.elements.push_back(x.vertex_id(cls.front()));
    return s;
}

FinFun as_finfun(const std::vector<std::size_t>& table, std::size_t cod) { return FinFun{cod, table}; }

}  // namespace

CosliceSetDiagram pi0_diagram(const ADiagramCx& d)
{
    d.validate();
    const auto& g = d.shape();
    Partition pa = pi0(*d.base);
    std::vector<Partition> parts;
    for (const auto& o : d.underlying.objects)
        parts.push_back(pi0(*o));

    CosliceSetDiagram s;
    s.diagram.shape = g;
    s.base = class_names(*d.base, pa);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        s.diagram.objects.push_back(class_names(*d.underlying.objects[i], parts[i]));
        s.basepoints.push_back(as_finfun(induced_pi0(d.basepoints[i], pa, parts[i]), parts[i].size()));
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        s.diagram.arrows.push_back(
            as_finfun(induced_pi0(d.underlying.arrows[e], parts[edge.src], parts[edge.dst]), parts[edge.dst].size()));
    }
    return s;
}

TruncationReport check_truncation(const ADiagramCx& d)
{
    ConstructionOne one = construction_one(d);
    const auto& px = *one.po.complex;
    Partition pp = pi0(px);
    CosliceSetDiagram sd = pi0_diagram(d);
    CosliceSetColimit sc = coslice_colim_set(sd);

    UnderSet tip{class_names(px, pp), {}};
    Partition pa = pi0(*d.base);
    tip.basepoint = as_finfun(induced_pi0(one.result.basept, pa, pp), pp.size());
    std::vector<FinFun> legs;
    for (std::size_t i = 0; i < d.shape().vertex_count(); ++i)
        legs.push_back(as_finfun(induced_pi0(one.cocone.legs[i], pi0(*d.underlying.objects[i]), pp), pp.size()));

    TruncationReport r;
    r.complex_pi0 = pp.size();
    r.set_colimit = sc.tip.carrier.size();
    r.comparison = cogap(sd, sc, tip, legs);
    r.bijective = r.comparison.is_injective() && r.comparison.is_surjective();
    return r;
}

WeakLimitReport weak_limit_check(const ADiagramCx& d)
{
    d.validate();
    if (d.base->vertex_count() != 1 || d.base->edge_count() != 0)
        throw PreconditionError("weak_limit_check: the base must be a point");
    const auto& g = d.shape();
    ConstructionOne one = construction_one(d);
    H1Data hp = h1_data(*one.po.complex);
    std::vector<H1Data> hf;
    for (const auto& o : d.underlying.objects)
        hf.push_back(h1_data(*o));

    IntMatrix lp = h1_dual_lattice(hp);
    std::vector<IntMatrix> lf, leg_t, arrow_t;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        lf.push_back(h1_dual_lattice(hf[i]));
        leg_t.push_back(induced_h1(one.cocone.legs[i], hf[i], hp).cycle_matrix.transpose());
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        arrow_t.push_back(induced_h1(d.underlying.arrows[e], hf[edge.src], hf[edge.dst]).cycle_matrix.transpose());
    }

    // Domain coordinates: one block per edge (copy of F_src), then one per vertex.
    std::vector<std::size_t> dom_off, dom_lat;
    std::size_t dom_dim = 0, lat_dim = 0;
    auto k_of = [&](std::size_t i) { return hf[i].kernel.cols(); };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t i = g.edge(e).src;
        dom_off.push_back(dom_dim);
        dom_lat.push_back(lat_dim);
        dom_dim += k_of(i);
        lat_dim += lf[i].cols();
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        dom_off.push_back(dom_dim);
        dom_lat.push_back(lat_dim);
        dom_dim += k_of(i);
        lat_dim += lf[i].cols();
    }
    const std::size_t ne = g.edge_count();
    auto block_vertex = [&](std::size_t b) { return b < ne ? g.edge(b).src : b - ne; };

    IntMatrix lattice(dom_dim, lat_dim);
    for (std::size_t b = 0; b < dom_off.size(); ++b) {
        const auto& l = lf[block_vertex(b)];
        for (std::size_t r = 0; r < l.rows(); ++r)
            for (std::size_t c = 0; c < l.cols(); ++c)
                lattice(dom_off[b] + r, dom_lat[b] + c) = l(r, c);
    }

    // Codomain: two blocks per edge, each a copy of the F_src coordinates.
    std::size_t cod_dim = 0;
    std::vector<std::size_t> cod_off;
    for (std::size_t e = 0; e < ne; ++e) {
        cod_off.push_back(cod_dim);
        cod_dim += 2 * k_of(g.edge(e).src);
    }
    IntMatrix mu_nu(cod_dim, dom_dim);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& edge = g.edge(e);
        const std::size_t k = k_of(edge.src);
        const std::size_t first = cod_off[e], second = cod_off[e] + k;
        for (std::size_t r = 0; r < k; ++r) {
            mu_nu(first + r, dom_off[e] + r) += 1;
            mu_nu(second + r, dom_off[e] + r) += 1;
            mu_nu(first + r, dom_off[ne + edge.src] + r) -= 1;
        }
        const auto& at = arrow_t[e];
        for (std::size_t r = 0; r < at.rows(); ++r)
            for (std::size_t c = 0; c < at.cols(); ++c)
                mu_nu(second + r, dom_off[ne + edge.dst] + c) -= at(r, c);
    }

    IntMatrix kernel = lattice * integer_kernel(mu_nu * lattice);

    IntMatrix image(dom_dim, lp.cols());
    for (std::size_t b = 0; b < dom_off.size(); ++b) {
        IntMatrix part = leg_t[block_vertex(b)] * lp;
        for (std::size_t r = 0; r < part.rows(); ++r)
            for (std::size_t c = 0; c < part.cols(); ++c)
                image(dom_off[b] + r, c) = part(r, c);
    }

    WeakLimitReport rep;
    rep.colimit_cohomology.rank = lp.cols();
    for (const auto& l : lf)
        rep.object_cohomology.push_back(FgAbelianGroup{l.cols(), {}});
    rep.image_rank = column_hermite_form(image).cols();
    rep.kernel_rank = column_hermite_form(kernel).cols();
    rep.exact = subgroup_equal(image, kernel);

    auto consistent = [](const TwoComplex& x, const IntMatrix& l) {
        FgAbelianGroup c = cohomology_h1(x);
        return c.torsion.empty() && c.rank == l.cols();
    };
    rep.ranks_consistent = consistent(*one.po.complex, lp);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        rep.ranks_consistent = rep.ranks_consistent && consistent(*d.underlying.objects[i], lf[i]);
    return rep;
}

}  // namespace hocolim
