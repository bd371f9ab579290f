#include "hocolim/setmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hocolim/errors.hpp"

namespace hocolim {

std::size_t FinSet::index(const std::string& id) const
{
    auto it = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end())
        throw ValidationError("set: unknown element '" + id + "'");
    return static_cast<std::size_t>(it - elements.begin());
}

FinSet FinSet::range(std::size_t n)
{
    FinSet s;
    for (std::size_t i = 0; i < n; ++i)
        s.elements.push_back(std::to_string(i));
    return s;
}

void FinFun::validate() const
{
    for (std::size_t x = 0; x < table.size(); ++x)
        if (table[x] >= cod)
            throw ValidationError("function: value at " + std::to_string(x) + " lies outside the codomain");
}

bool FinFun::is_injective() const
{
    std::vector<bool> hit(cod, false);
    for (std::size_t y : table) {
        if (hit[y])
            return false;
        hit[y] = true;
    }
    return true;
}

bool FinFun::is_surjective() const
{
    std::vector<bool> hit(cod, false);
    std::size_t n = 0;
    for (std::size_t y : table)
        if (!hit[y]) {
            hit[y] = true;
            ++n;
        }
    return n == cod;
}

FinFun FinFun::identity(std::size_t n)
{
    FinFun f{n, std::vector<std::size_t>(n)};
    std::iota(f.table.begin(), f.table.end(), 0);
    return f;
}

FinFun compose(const FinFun& g, const FinFun& f)
{
    if (f.cod != g.dom())
        throw ValidationError("compose: codomain of f is not the domain of g");
    FinFun h{g.cod, {}};
    h.table.reserve(f.dom());
    for (std::size_t x : f.table)
        h.table.push_back(g(x));
    return h;
}

std::size_t power_count(std::size_t m, std::size_t n)
{
    std::size_t r = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m != 0 && r > SIZE_MAX / m)
            return SIZE_MAX;
        r *= m;
    }
    return r;
}

void throw_size_error(std::size_t n, std::size_t m, std::size_t cap)
{
    throw SizeError("enumeration of " + std::to_string(m) + "^" + std::to_string(n) +
                    " functions exceeds the cap of " + std::to_string(cap));
}

void SetDiagram::validate() const
{
    if (objects.size() != shape.vertex_count())
        throw ValidationError("set diagram: expected one object per vertex");
    if (arrows.size() != shape.edge_count())
        throw ValidationError("set diagram: expected one arrow per edge");
    for (std::size_t e = 0; e < arrows.size(); ++e) {
        const auto& edge = shape.edge(e);
        if (arrows[e].dom() != objects[edge.src].size() || arrows[e].cod != objects[edge.dst].size())
            throw ValidationError("set diagram: arrow '" + edge.id + "' does not match its endpoint objects");
        arrows[e].validate();
    }
}

void CosliceSetDiagram::validate() const
{
    diagram.validate();
    if (basepoints.size() != diagram.objects.size())
        throw ValidationError("coslice diagram: expected one basepoint map per vertex");
    for (std::size_t i = 0; i < basepoints.size(); ++i) {
        if (basepoints[i].dom() != base.size() || basepoints[i].cod != diagram.objects[i].size())
            throw ValidationError("coslice diagram: basepoint map of '" + diagram.shape.vertex_id(i) +
                                  "' has the wrong shape");
        basepoints[i].validate();
    }
    for (std::size_t e = 0; e < diagram.arrows.size(); ++e) {
        const auto& edge = diagram.shape.edge(e);
        if (compose(diagram.arrows[e], basepoints[edge.src]) != basepoints[edge.dst])
            throw PreconditionError("coslice diagram: arrow '" + edge.id + "' is not pointed");
    }
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
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
    }
    // Class index per element, classes numbered by least member.
    std::vector<std::size_t> classes(std::size_t& count)
    {
        std::vector<std::size_t> cls(parent.size()), of_root(parent.size(), SIZE_MAX);
        count = 0;
        for (std::size_t x = 0; x < parent.size(); ++x) {
            std::size_t r = find(x);
            if (of_root[r] == SIZE_MAX)
                of_root[r] = count++;
            cls[x] = of_root[r];
        }
        return cls;
    }
};

std::vector<std::size_t> offsets(const std::vector<FinSet>& objects, std::size_t start)
{
    std::vector<std::size_t> off;
    std::size_t at = start;
    for (const auto& o : objects) {
        off.push_back(at);
        at += o.size();
    }
    off.push_back(at);
    return off;
}

}  // namespace

SetColimit colim_set(const SetDiagram& d)
{
    d.validate();
    auto off = offsets(d.objects, 0);
    UnionFind uf(off.back());
    for (std::size_t e = 0; e < d.arrows.size(); ++e) {
        const auto& edge = d.shape.edge(e);
        for (std::size_t x = 0; x < d.arrows[e].dom(); ++x)
            uf.unite(off[edge.dst] + d.arrows[e](x), off[edge.src] + x);
    }
    std::size_t count = 0;
    auto cls = uf.classes(count);

    SetColimit c;
    c.carrier.elements.resize(count);
    std::vector<bool> named(count, false);
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
        FinFun inj{count, {}};
        for (std::size_t x = 0; x < d.objects[i].size(); ++x) {
            std::size_t k = cls[off[i] + x];
            inj.table.push_back(k);
            if (!named[k]) {
                named[k] = true;
                c.carrier.elements[k] = d.shape.vertex_id(i) + ":" + d.objects[i].elements[x];
            }
        }
        c.injections.push_back(std::move(inj));
    }
    return c;
}

SetLimit lim_set(const SetDiagram& d, std::size_t cap)
{
    d.validate();
    std::size_t product = 1;
    for (const auto& o : d.objects)
        product = o.size() != 0 && product > SIZE_MAX / o.size() ? SIZE_MAX : product * o.size();
    if (product > cap)
        throw SizeError("lim_set: product of object sizes exceeds the cap of " + std::to_string(cap));

    const std::size_t n = d.objects.size();
    // Edges checked once both endpoints are fixed, i.e. at max(src, dst).
    std::vector<std::vector<std::size_t>> check_at(n);
    for (std::size_t e = 0; e < d.arrows.size(); ++e) {
        const auto& edge = d.shape.edge(e);
        check_at[std::max(edge.src, edge.dst)].push_back(e);
    }

    SetLimit lim;
    std::vector<std::size_t> family(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            std::string name = "(";
            for (std::size_t k = 0; k < n; ++k)
                name += (k ? "," : "") + d.objects[k].elements[family[k]];
            lim.carrier.elements.push_back(name + ")");
            lim.families.push_back(family);
            return;
        }
        for (std::size_t x = 0; x < d.objects[i].size(); ++x) {
            family[i] = x;
            bool ok = true;
            for (std::size_t e : check_at[i]) {
                const auto& edge = d.shape.edge(e);
                if (d.arrows[e](family[edge.src]) != family[edge.dst]) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                self(self, i + 1);
        }
    };
    rec(rec, 0);
    return lim;
}

CosliceSetColimit coslice_colim_set(const CosliceSetDiagram& d)
{
    d.validate();
    const std::size_t na = d.base.size();
    auto off = offsets(d.diagram.objects, na);
    UnionFind uf(off.back());
    for (std::size_t e = 0; e < d.diagram.arrows.size(); ++e) {
        const auto& edge = d.diagram.shape.edge(e);
        for (std::size_t x = 0; x < d.diagram.arrows[e].dom(); ++x)
            uf.unite(off[edge.dst] + d.diagram.arrows[e](x), off[edge.src] + x);
    }
    for (std::size_t i = 0; i < d.basepoints.size(); ++i)
        for (std::size_t a = 0; a < na; ++a)
            uf.unite(a, off[i] + d.basepoints[i](a));
    std::size_t count = 0;
    auto cls = uf.classes(count);

    CosliceSetColimit c;
    c.tip.carrier.elements.resize(count);
    std::vector<bool> named(count, false);
    c.tip.basepoint = FinFun{count, {}};
    for (std::size_t a = 0; a < na; ++a) {
        std::size_t k = cls[a];
        c.tip.basepoint.table.push_back(k);
        if (!named[k]) {
            named[k] = true;
            c.tip.carrier.elements[k] = "A:" + d.base.elements[a];
        }
    }
    for (std::size_t i = 0; i < d.diagram.objects.size(); ++i) {
        FinFun leg{count, {}};
        const auto& obj = d.diagram.objects[i];
        for (std::size_t x = 0; x < obj.size(); ++x) {
            std::size_t k = cls[off[i] + x];
            leg.table.push_back(k);
            if (!named[k]) {
                named[k] = true;
                c.tip.carrier.elements[k] = d.diagram.shape.vertex_id(i) + ":" + obj.elements[x];
            }
        }
        c.legs.push_back(std::move(leg));
    }
    return c;
}

std::vector<FinFun> postcompose(const std::vector<FinFun>& legs, const FinFun& f)
{
    std::vector<FinFun> out;
    out.reserve(legs.size());
    for (const auto& leg : legs)
        out.push_back(compose(f, leg));
    return out;
}

bool is_cocone(const SetDiagram& d, const std::vector<FinFun>& legs)
{
    if (legs.size() != d.objects.size())
        return false;
    for (std::size_t i = 0; i < legs.size(); ++i)
        if (legs[i].dom() != d.objects[i].size())
            return false;
    for (std::size_t e = 0; e < d.arrows.size(); ++e) {
        const auto& edge = d.shape.edge(e);
        for (std::size_t x = 0; x < d.arrows[e].dom(); ++x)
            if (legs[edge.dst](d.arrows[e](x)) != legs[edge.src](x))
                return false;
    }
    return true;
}

bool is_coslice_cocone(const CosliceSetDiagram& d, const UnderSet& tip, const std::vector<FinFun>& legs)
{
    if (!is_cocone(d.diagram, legs))
        return false;
    for (std::size_t i = 0; i < legs.size(); ++i)
        if (compose(legs[i], d.basepoints[i]) != tip.basepoint)
            return false;
    return true;
}

namespace {

FinFun cogap_from_classes(std::size_t count, std::size_t tip_size, const std::vector<FinFun>& injections,
                          const std::vector<FinFun>& legs, const FinFun* base_in, const FinFun* base_tip)
{
    FinFun out{tip_size, std::vector<std::size_t>(count, SIZE_MAX)};
    if (base_in)
        for (std::size_t a = 0; a < base_in->dom(); ++a)
            out.table[(*base_in)(a)] = (*base_tip)(a);
    for (std::size_t i = 0; i < injections.size(); ++i)
        for (std::size_t x = 0; x < injections[i].dom(); ++x)
            out.table[injections[i](x)] = legs[i](x);
    return out;
}

}  // namespace

FinFun cogap(const SetDiagram& d, const SetColimit& c, const std::vector<FinFun>& legs)
{
    if (!is_cocone(d, legs))
        throw PreconditionError("cogap: the legs do not form a cocone");
    std::size_t tip = legs.empty() ? 0 : legs.front().cod;
    return cogap_from_classes(c.carrier.size(), tip, c.injections, legs, nullptr, nullptr);
}

FinFun cogap(const CosliceSetDiagram& d, const CosliceSetColimit& c, const UnderSet& tip,
             const std::vector<FinFun>& legs)
{
    if (!is_coslice_cocone(d, tip, legs))
        throw PreconditionError("cogap: the legs do not form a cocone under A");
    return cogap_from_classes(c.tip.carrier.size(), tip.carrier.size(), c.legs, legs, &c.tip.basepoint,
                              &tip.basepoint);
}

UniversalPropertyReport verify_universal_property(const CosliceSetDiagram& d, const UnderSet& t, std::size_t cap)
{
    d.validate();
    if (t.basepoint.dom() != d.base.size() || t.basepoint.cod != t.carrier.size())
        throw ValidationError("verify_universal_property: the test object is not under the base");
    CosliceSetColimit c = coslice_colim_set(d);
    const std::size_t tsize = t.carrier.size();

    UniversalPropertyReport rep;
    std::set<std::vector<std::size_t>> images;
    bool injective = true;
    for_each_function(c.tip.carrier.size(), tsize, cap, [&](const std::vector<std::size_t>& table) {
        FinFun f{tsize, table};
        if (compose(f, c.tip.basepoint) != t.basepoint)
            return;
        ++rep.amaps;
        std::vector<std::size_t> flat;
        for (const auto& leg : postcompose(c.legs, f))
            flat.insert(flat.end(), leg.table.begin(), leg.table.end());
        if (!images.insert(std::move(flat)).second)
            injective = false;
    });

    std::size_t total = 0;
    for (const auto& o : d.diagram.objects)
        total += o.size();
    bool surjective = true;
    for_each_function(total, tsize, cap, [&](const std::vector<std::size_t>& flat) {
        std::vector<FinFun> legs;
        std::size_t at = 0;
        for (const auto& o : d.diagram.objects) {
            legs.push_back(FinFun{tsize, std::vector<std::size_t>(flat.begin() + at, flat.begin() + at + o.size())});
            at += o.size();
        }
        if (!is_coslice_cocone(d, t, legs))
            return;
        ++rep.cocones;
        if (!images.count(flat))
            surjective = false;
    });
    rep.injective = injective;
    rep.surjective = surjective;
    return rep;
}

namespace {

void require_under(const UnderSet& x, std::size_t base, const char* what)
{
    if (x.basepoint.dom() != base || x.basepoint.cod != x.carrier.size())
        throw ValidationError(std::string(what) + ": basepoint map has the wrong shape");
    x.basepoint.validate();
}

}  // namespace

PullbackUnder pullback_coslice(const UnderSet& x, const UnderSet& y, const UnderSet& z, const FinFun& f,
                               const FinFun& g)
{
    const std::size_t na = z.basepoint.dom();
    require_under(x, na, "pullback");
    require_under(y, na, "pullback");
    require_under(z, na, "pullback");
    if (f.dom() != x.carrier.size() || f.cod != z.carrier.size() || g.dom() != y.carrier.size() ||
        g.cod != z.carrier.size())
        throw ValidationError("pullback: maps do not form a cospan");
    f.validate();
    g.validate();
    if (compose(f, x.basepoint) != z.basepoint || compose(g, y.basepoint) != z.basepoint)
        throw PreconditionError("pullback: the cospan maps are not maps under A");

    PullbackUnder p;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    p.proj1.cod = x.carrier.size();
    p.proj2.cod = y.carrier.size();
    for (std::size_t a = 0; a < x.carrier.size(); ++a)
        for (std::size_t b = 0; b < y.carrier.size(); ++b)
            if (f(a) == g(b)) {
                index[{a, b}] = p.object.carrier.size();
                p.object.carrier.elements.push_back("(" + x.carrier.elements[a] + "," + y.carrier.elements[b] + ")");
                p.proj1.table.push_back(a);
                p.proj2.table.push_back(b);
            }
    p.object.basepoint = FinFun{p.object.carrier.size(), {}};
    for (std::size_t a = 0; a < na; ++a)
        p.object.basepoint.table.push_back(index.at({x.basepoint(a), y.basepoint(a)}));
    return p;
}

namespace {

// Objects F_i x_V Y and arrows (x, y) -> (F_e x, y).
struct PulledBack {
    SetDiagram diagram;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
};

PulledBack pull_back_diagram(const SetDiagram& d, const std::vector<FinFun>& injections, const FinFun& f,
                             const FinFun& h, std::size_t y_size)
{
    PulledBack pb;
    pb.diagram.shape = d.shape;
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index(d.objects.size());
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
        FinSet obj;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t x = 0; x < d.objects[i].size(); ++x)
            for (std::size_t y = 0; y < y_size; ++y)
                if (f(injections[i](x)) == h(y)) {
                    index[i][{x, y}] = pairs.size();
                    pairs.emplace_back(x, y);
                    obj.elements.push_back("(" + d.objects[i].elements[x] + "," + std::to_string(y) + ")");
                }
        pb.diagram.objects.push_back(std::move(obj));
        pb.pairs.push_back(std::move(pairs));
    }
    for (std::size_t e = 0; e < d.arrows.size(); ++e) {
        const auto& edge = d.shape.edge(e);
        FinFun arrow{pb.pairs[edge.dst].size(), {}};
        for (auto [x, y] : pb.pairs[edge.src])
            arrow.table.push_back(index[edge.dst].at({d.arrows[e](x), y}));
        pb.diagram.arrows.push_back(std::move(arrow));
    }
    return pb;
}

std::vector<FinFun> comparison_legs(const PulledBack& pb, const std::vector<FinFun>& injections,
                                    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& target,
                                    std::size_t target_size)
{
    std::vector<FinFun> legs;
    for (std::size_t i = 0; i < pb.pairs.size(); ++i) {
        FinFun leg{target_size, {}};
        for (auto [x, y] : pb.pairs[i])
            leg.table.push_back(target.at({injections[i](x), y}));
        legs.push_back(std::move(leg));
    }
    return legs;
}

}  // namespace

UniversalityReport check_universality(const SetDiagram& d, std::size_t v_size, const FinFun& f, const FinFun& h)
{
    SetColimit c = colim_set(d);
    if (f.dom() != c.carrier.size() || f.cod != v_size || h.cod != v_size)
        throw ValidationError("check_universality: maps do not form a cospan over V");
    f.validate();
    h.validate();
    const std::size_t y_size = h.dom();

    PulledBack pb = pull_back_diagram(d, c.injections, f, h, y_size);
    SetColimit q = colim_set(pb.diagram);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> r;
    for (std::size_t p = 0; p < c.carrier.size(); ++p)
        for (std::size_t y = 0; y < y_size; ++y)
            if (f(p) == h(y))
                r.emplace(std::make_pair(p, y), r.size());

    UniversalityReport rep;
    rep.colim_of_pullbacks = q.carrier.size();
    rep.pullback_of_colim = r.size();
    rep.comparison = cogap(pb.diagram, q, comparison_legs(pb, c.injections, r, r.size()));
    rep.comparison.cod = r.size();
    rep.bijective = rep.comparison.is_injective() && rep.comparison.is_surjective();
    return rep;
}

UniversalityReport check_universality(const CosliceSetDiagram& d, const UnderSet& v, const FinFun& f,
                                      const UnderSet& y, const FinFun& h)
{
    CosliceSetColimit c = coslice_colim_set(d);
    const std::size_t na = d.base.size();
    require_under(v, na, "check_universality");
    require_under(y, na, "check_universality");
    if (f.dom() != c.tip.carrier.size() || f.cod != v.carrier.size() || h.dom() != y.carrier.size() ||
        h.cod != v.carrier.size())
        throw ValidationError("check_universality: maps do not form a cospan over V");
    f.validate();
    h.validate();
    if (compose(f, c.tip.basepoint) != v.basepoint || compose(h, y.basepoint) != v.basepoint)
        throw PreconditionError("check_universality: the cospan maps are not maps under A");

    PulledBack pb = pull_back_diagram(d.diagram, c.legs, f, h, y.carrier.size());
    CosliceSetDiagram pulled{pb.diagram, d.base, {}};
    for (std::size_t i = 0; i < pb.pairs.size(); ++i) {
        FinFun bp{pb.pairs[i].size(), {}};
        for (std::size_t a = 0; a < na; ++a) {
            auto key = std::make_pair(d.basepoints[i](a), y.basepoint(a));
            auto it = std::find(pb.pairs[i].begin(), pb.pairs[i].end(), key);
            bp.table.push_back(static_cast<std::size_t>(it - pb.pairs[i].begin()));
        }
        pulled.basepoints.push_back(std::move(bp));
    }
    CosliceSetColimit q = coslice_colim_set(pulled);

    PullbackUnder r = pullback_coslice(c.tip, y, v, f, h);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> r_index;
    for (std::size_t k = 0; k < r.object.carrier.size(); ++k)
        r_index[{r.proj1(k), r.proj2(k)}] = k;

    UniversalityReport rep;
    rep.colim_of_pullbacks = q.tip.carrier.size();
    rep.pullback_of_colim = r.object.carrier.size();
    rep.comparison = cogap(pulled, q, r.object, comparison_legs(pb, c.legs, r_index, r.object.carrier.size()));
    rep.bijective = rep.comparison.is_injective() && rep.comparison.is_surjective();
    return rep;
}

Factorization factorize(const FinFun& f)
{
    f.validate();
    std::vector<std::size_t> slot(f.cod, SIZE_MAX);
    std::vector<bool> hit(f.cod, false);
    for (std::size_t y : f.table)
        hit[y] = true;
    Factorization fac;
    for (std::size_t y = 0; y < f.cod; ++y)
        if (hit[y]) {
            slot[y] = fac.image_size++;
            fac.injection.table.push_back(y);
        }
    fac.injection.cod = f.cod;
    fac.surjection.cod = fac.image_size;
    for (std::size_t y : f.table)
        fac.surjection.table.push_back(slot[y]);
    return fac;
}

namespace {

void check_square(const FinFun& l, const FinFun& r, const FinFun& top, const FinFun& bottom)
{
    if (top.dom() != l.dom() || top.cod != r.dom() || bottom.dom() != l.cod || bottom.cod != r.cod)
        throw ValidationError("filler: the four maps do not form a square");
    if (compose(r, top) != compose(bottom, l))
        throw PreconditionError("filler: the square does not commute");
}

}  // namespace

FinFun unique_filler(const FinFun& l, const FinFun& r, const FinFun& top, const FinFun& bottom)
{
    check_square(l, r, top, bottom);
    if (!l.is_surjective())
        throw PreconditionError("filler: the left map is not surjective");
    if (!r.is_injective())
        throw PreconditionError("filler: the right map is not injective");
    FinFun d{r.dom(), std::vector<std::size_t>(l.cod, SIZE_MAX)};
    for (std::size_t a = 0; a < l.dom(); ++a)
        d.table[l(a)] = top(a);
    if (compose(d, l) != top || compose(r, d) != bottom)
        throw PreconditionError("filler: no consistent diagonal");
    return d;
}

std::size_t count_fillers(const FinFun& l, const FinFun& r, const FinFun& top, const FinFun& bottom)
{
    check_square(l, r, top, bottom);
    std::vector<std::vector<std::size_t>> fibre(l.cod);
    for (std::size_t a = 0; a < l.dom(); ++a)
        fibre[l(a)].push_back(a);
    std::size_t total = 1;
    for (std::size_t b = 0; b < l.cod; ++b) {
        std::size_t options = 0;
        for (std::size_t c = 0; c < r.dom(); ++c) {
            if (r(c) != bottom(b))
                continue;
            bool ok = std::all_of(fibre[b].begin(), fibre[b].end(), [&](std::size_t a) { return top(a) == c; });
            options += ok;
        }
        if (options == 0)
            return 0;
        total = total > SIZE_MAX / options ? SIZE_MAX : total * options;
    }
    return total;
}

bool orthogonal(const FinFun& l, const FinFun& r, std::size_t cap)
{
    bool all_unique = true;
    for_each_function(l.dom(), r.dom(), cap, [&](const std::vector<std::size_t>& top_table) {
        if (!all_unique)
            return;
        FinFun top{r.dom(), top_table};
        for_each_function(l.cod, r.cod, cap, [&](const std::vector<std::size_t>& bottom_table) {
            if (!all_unique)
                return;
            FinFun bottom{r.cod, bottom_table};
            if (compose(r, top) != compose(bottom, l))
                return;
            if (count_fillers(l, r, top, bottom) != 1)
                all_unique = false;
        });
    });
    return all_unique;
}

SetPushout set_pushout(const FinFun& f, const FinFun& g)
{
    if (f.dom() != g.dom())
        throw ValidationError("set_pushout: the maps have different domains");
    f.validate();
    g.validate();
    UnionFind uf(f.cod + g.cod);
    for (std::size_t c = 0; c < f.dom(); ++c)
        uf.unite(f(c), f.cod + g(c));
    std::size_t count = 0;
    auto cls = uf.classes(count);
    SetPushout p{count, {count, {}}, {count, {}}};
    for (std::size_t a = 0; a < f.cod; ++a)
        p.inl.table.push_back(cls[a]);
    for (std::size_t b = 0; b < g.cod; ++b)
        p.inr.table.push_back(cls[f.cod + b]);
    return p;
}

PreservationReport preservation_surjectivity(const CosliceSetDiagram& source, const CosliceSetDiagram& target,
                                             const SetTransformation& delta)
{
    source.validate();
    target.validate();
    const auto& sd = source.diagram;
    const auto& td = target.diagram;
    if (sd.shape.vertex_count() != td.shape.vertex_count() || sd.shape.edge_count() != td.shape.edge_count() ||
        source.base.size() != target.base.size())
        throw ValidationError("transformation: source and target diagrams differ in shape or base");
    if (delta.components.size() != sd.objects.size())
        throw ValidationError("transformation: expected one component per vertex");
    for (std::size_t i = 0; i < delta.components.size(); ++i) {
        const auto& c = delta.components[i];
        if (c.dom() != sd.objects[i].size() || c.cod != td.objects[i].size())
            throw ValidationError("transformation: component at '" + sd.shape.vertex_id(i) + "' has the wrong shape");
        c.validate();
        if (compose(c, source.basepoints[i]) != target.basepoints[i])
            throw PreconditionError("transformation: component at '" + sd.shape.vertex_id(i) + "' is not pointed");
        if (!c.is_surjective())
            throw PreconditionError("transformation: component at '" + sd.shape.vertex_id(i) +
                                    "' is not surjective");
    }
    for (std::size_t e = 0; e < sd.arrows.size(); ++e) {
        const auto& edge = sd.shape.edge(e);
        if (compose(td.arrows[e], delta.components[edge.src]) != compose(delta.components[edge.dst], sd.arrows[e]))
            throw PreconditionError("transformation: naturality fails at edge '" + edge.id + "'");
    }

    CosliceSetColimit cf = coslice_colim_set(source);
    CosliceSetColimit cg = coslice_colim_set(target);
    std::vector<FinFun> legs;
    for (std::size_t i = 0; i < delta.components.size(); ++i)
        legs.push_back(compose(cg.legs[i], delta.components[i]));
    PreservationReport rep;
    rep.induced = cogap(source, cf, cg.tip, legs);
    rep.surjective = rep.induced.is_surjective();
    return rep;
}

}  // namespace hocolim
