#include "hocolim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hocolim/errors.hpp"

namespace hocolim {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ValidationError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string as_string(const Json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected an array");
    return j;
}

const Json& as_object(const Json& j, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    return j;
}

std::vector<std::string> string_list(const Json& j, const std::string& where)
{
    std::vector<std::string> out;
    std::size_t k = 0;
    for (const auto& v : as_array(j, where))
        out.push_back(as_string(v, where + "[" + std::to_string(k++) + "]"));
    return out;
}

FinSet finset(const Json& j, const std::string& where)
{
    FinSet s{string_list(j, where)};
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (s.elements[a] == s.elements[b])
                fail(where, "duplicate element '" + s.elements[a] + "'");
    return s;
}

FinFun finfun_at(const Json& j, const FinSet& dom, const FinSet& cod, const std::string& where)
{
    as_object(j, where);
    FinFun f{cod.size(), std::vector<std::size_t>(dom.size(), SIZE_MAX)};
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t x = 0, y = 0;
        try {
            x = dom.index(it.key());
            y = cod.index(as_string(it.value(), where + "." + it.key()));
        } catch (const ValidationError& err) {
            fail(where, err.what());
        }
        f.table[x] = y;
    }
    for (std::size_t x = 0; x < dom.size(); ++x)
        if (f.table[x] == SIZE_MAX)
            fail(where, "no value for '" + dom.elements[x] + "'");
    return f;
}

Json finfun_json(const FinFun& f, const FinSet& dom, const FinSet& cod)
{
    Json j = Json::object();
    for (std::size_t x = 0; x < f.dom(); ++x)
        j[dom.elements[x]] = cod.elements[f(x)];
    return j;
}

std::vector<SignedEdge> steps_at(const Json& j, const TwoComplex& x, const std::string& where)
{
    std::vector<SignedEdge> steps;
    std::size_t k = 0;
    for (const auto& s : as_array(j, where)) {
        std::string at = where + "[" + std::to_string(k++) + "]";
        std::size_t e = 0;
        try {
            e = x.edge_index(as_string(field(s, "edge", at), at + ".edge"));
        } catch (const ValidationError& err) {
            fail(at, err.what());
        }
        const Json& sign = field(s, "sign", at);
        if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1))
            fail(at + ".sign", "expected 1 or -1");
        steps.push_back({e, sign.get<int>()});
    }
    return steps;
}

}  // namespace

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& err) {
        throw ValidationError(path + ": " + err.what());
    }
}

Graph graph_from_json(const Json& j)
{
    auto vertices = string_list(field(j, "vertices", "graph"), "graph.vertices");
    std::vector<Graph::EdgeSpec> edges;
    if (j.contains("edges")) {
        std::size_t k = 0;
        for (const auto& e : as_array(j["edges"], "graph.edges")) {
            std::string at = "graph.edges[" + std::to_string(k++) + "]";
            edges.push_back({as_string(field(e, "id", at), at + ".id"), as_string(field(e, "src", at), at + ".src"),
                             as_string(field(e, "dst", at), at + ".dst")});
        }
    }
    return Graph(std::move(vertices), edges);
}

Json graph_to_json(const Graph& g)
{
    Json j;
    j["vertices"] = g.vertex_ids();
    j["edges"] = Json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({{"id", e.id}, {"src", g.vertex_id(e.src)}, {"dst", g.vertex_id(e.dst)}});
    return j;
}

TwoComplex complex_from_json(const Json& j)
{
    TwoComplex x;
    for (const auto& v : string_list(field(j, "vertices", "complex"), "complex.vertices"))
        x.add_vertex(v);
    if (j.contains("edges")) {
        std::size_t k = 0;
        for (const auto& e : as_array(j["edges"], "complex.edges")) {
            std::string at = "complex.edges[" + std::to_string(k++) + "]";
            std::size_t s = 0, d = 0;
            try {
                s = x.vertex_index(as_string(field(e, "src", at), at + ".src"));
                d = x.vertex_index(as_string(field(e, "dst", at), at + ".dst"));
            } catch (const ValidationError& err) {
                fail(at, err.what());
            }
            x.add_edge(as_string(field(e, "id", at), at + ".id"), s, d);
        }
    }
    if (j.contains("faces")) {
        std::size_t k = 0;
        for (const auto& f : as_array(j["faces"], "complex.faces")) {
            std::string at = "complex.faces[" + std::to_string(k++) + "]";
            x.add_face(as_string(field(f, "id", at), at + ".id"), steps_at(field(f, "boundary", at), x, at + ".boundary"));
        }
    }
    return x;
}

Json complex_to_json(const TwoComplex& x)
{
    Json j;
    j["vertices"] = x.vertex_ids();
    j["edges"] = Json::array();
    for (const auto& e : x.edges())
        j["edges"].push_back({{"id", e.id}, {"src", x.vertex_id(e.src)}, {"dst", x.vertex_id(e.dst)}});
    j["faces"] = Json::array();
    for (const auto& f : x.faces()) {
        Json bd = Json::array();
        for (const auto& s : f.boundary)
            bd.push_back({{"edge", x.edge(s.edge).id}, {"sign", s.sign}});
        j["faces"].push_back({{"id", f.id}, {"boundary", bd}});
    }
    if (!x.discarded_cells().empty())
        j["dropped_cells"] = x.discarded_cells();
    return j;
}

EdgeWord word_from_json(const Json& j, const TwoComplex& x, std::size_t start)
{
    EdgeWord w{start, steps_at(j, x, "word")};
    x.word_end(w);
    return w;
}

Json word_to_json(const TwoComplex& x, const EdgeWord& w)
{
    Json j = Json::array();
    for (const auto& s : w.steps)
        j.push_back({{"edge", x.edge(s.edge).id}, {"sign", s.sign}});
    return j;
}

CellMap cellmap_from_json(const Json& j, const ComplexPtr& source, const ComplexPtr& target)
{
    CellMap f{source, target, std::vector<std::size_t>(source->vertex_count(), SIZE_MAX), {}};
    const Json& vs = as_object(field(j, "vertices", "map"), "map.vertices");
    for (auto it = vs.begin(); it != vs.end(); ++it) {
        try {
            f.vertex_map[source->vertex_index(it.key())] =
                target->vertex_index(as_string(it.value(), "map.vertices." + it.key()));
        } catch (const ValidationError& err) {
            fail("map.vertices", err.what());
        }
    }
    for (std::size_t v = 0; v < source->vertex_count(); ++v)
        if (f.vertex_map[v] == SIZE_MAX)
            fail("map.vertices", "no image for vertex '" + source->vertex_id(v) + "'");
    Json es = j.contains("edges") ? j["edges"] : Json::object();
    as_object(es, "map.edges");
    for (std::size_t e = 0; e < source->edge_count(); ++e) {
        const auto& id = source->edge(e).id;
        std::size_t start = f.vertex_map[source->edge(e).src];
        if (!es.contains(id)) {
            if (source->edge(e).src == source->edge(e).dst || f.vertex_map[source->edge(e).src] == f.vertex_map[source->edge(e).dst])
                f.edge_map.push_back(empty_word(start));
            else
                fail("map.edges", "no image for edge '" + id + "'");
            continue;
        }
        f.edge_map.push_back(EdgeWord{start, steps_at(es[id], *target, "map.edges." + id)});
    }
    f.validate();
    return f;
}

Json cellmap_to_json(const CellMap& f)
{
    Json j;
    j["vertices"] = Json::object();
    for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
        j["vertices"][f.source->vertex_id(v)] = f.target->vertex_id(f.vertex_map[v]);
    j["edges"] = Json::object();
    for (std::size_t e = 0; e < f.edge_map.size(); ++e)
        j["edges"][f.source->edge(e).id] = word_to_json(*f.target, f.edge_map[e]);
    return j;
}

SetDiagram set_diagram_from_json(const Json& j)
{
    SetDiagram d;
    d.shape = graph_from_json(field(j, "shape", "diagram"));
    const Json& objs = as_object(field(j, "objects", "diagram"), "diagram.objects");
    for (const auto& v : d.shape.vertex_ids()) {
        if (!objs.contains(v))
            fail("diagram.objects", "no object for vertex '" + v + "'");
        d.objects.push_back(finset(objs[v], "diagram.objects." + v));
    }
    Json arrows = j.contains("arrows") ? j["arrows"] : Json::object();
    as_object(arrows, "diagram.arrows");
    for (const auto& e : d.shape.edges()) {
        if (!arrows.contains(e.id))
            fail("diagram.arrows", "no arrow for edge '" + e.id + "'");
        d.arrows.push_back(finfun_at(arrows[e.id], d.objects[e.src], d.objects[e.dst], "diagram.arrows." + e.id));
    }
    d.validate();
    return d;
}

CosliceSetDiagram coslice_set_diagram_from_json(const Json& j)
{
    CosliceSetDiagram d;
    d.diagram = set_diagram_from_json(j);
    d.base = finset(field(j, "base", "diagram"), "diagram.base");
    Json bps = j.contains("basepoints") ? j["basepoints"] : Json::object();
    as_object(bps, "diagram.basepoints");
    for (std::size_t i = 0; i < d.diagram.objects.size(); ++i) {
        const auto& v = d.diagram.shape.vertex_id(i);
        Json table = bps.contains(v) ? bps[v] : Json::object();
        d.basepoints.push_back(finfun_at(table, d.base, d.diagram.objects[i], "diagram.basepoints." + v));
    }
    d.validate();
    return d;
}

Json set_diagram_to_json(const SetDiagram& d)
{
    Json j;
    j["shape"] = graph_to_json(d.shape);
    j["objects"] = Json::object();
    for (std::size_t i = 0; i < d.objects.size(); ++i)
        j["objects"][d.shape.vertex_id(i)] = d.objects[i].elements;
    j["arrows"] = Json::object();
    for (std::size_t e = 0; e < d.arrows.size(); ++e) {
        const auto& edge = d.shape.edge(e);
        j["arrows"][edge.id] = finfun_json(d.arrows[e], d.objects[edge.src], d.objects[edge.dst]);
    }
    return j;
}

Json coslice_set_diagram_to_json(const CosliceSetDiagram& d)
{
    Json j = set_diagram_to_json(d.diagram);
    j["base"] = d.base.elements;
    j["basepoints"] = Json::object();
    for (std::size_t i = 0; i < d.basepoints.size(); ++i)
        j["basepoints"][d.diagram.shape.vertex_id(i)] = finfun_json(d.basepoints[i], d.base, d.diagram.objects[i]);
    return j;
}

UnderSet under_set_from_json(const Json& j, const FinSet& base)
{
    UnderSet u;
    u.carrier = finset(field(j, "elements", "object"), "object.elements");
    Json bp = j.contains("basepoint") ? j["basepoint"] : Json::object();
    u.basepoint = finfun_at(bp, base, u.carrier, "object.basepoint");
    return u;
}

FinFun finfun_from_json(const Json& j, const FinSet& dom, const FinSet& cod) { return finfun_at(j, dom, cod, "map"); }

DiagramCx diagram_cx_from_json(const Json& j)
{
    DiagramCx d;
    d.shape = graph_from_json(field(j, "shape", "diagram"));
    const Json& objs = as_object(field(j, "objects", "diagram"), "diagram.objects");
    for (const auto& v : d.shape.vertex_ids()) {
        if (!objs.contains(v))
            fail("diagram.objects", "no object for vertex '" + v + "'");
        try {
            d.objects.push_back(share(complex_from_json(field(objs[v], "complex", "diagram.objects." + v))));
        } catch (const ValidationError& err) {
            fail("diagram.objects." + v, err.what());
        }
    }
    Json arrows = j.contains("arrows") ? j["arrows"] : Json::object();
    as_object(arrows, "diagram.arrows");
    for (const auto& e : d.shape.edges()) {
        if (!arrows.contains(e.id))
            fail("diagram.arrows", "no arrow for edge '" + e.id + "'");
        try {
            d.arrows.push_back(cellmap_from_json(arrows[e.id], d.objects[e.src], d.objects[e.dst]));
        } catch (const ValidationError& err) {
            fail("diagram.arrows." + e.id, err.what());
        }
    }
    d.validate();
    return d;
}

ADiagramCx adiagram_from_json(const Json& j)
{
    ADiagramCx d;
    d.underlying.shape = graph_from_json(field(j, "shape", "diagram"));
    const auto& g = d.underlying.shape;
    try {
        d.base = share(complex_from_json(field(j, "base", "diagram")));
    } catch (const ValidationError& err) {
        fail("diagram.base", err.what());
    }
    const Json& objs = as_object(field(j, "objects", "diagram"), "diagram.objects");
    for (const auto& v : g.vertex_ids()) {
        if (!objs.contains(v))
            fail("diagram.objects", "no object for vertex '" + v + "'");
        const std::string at = "diagram.objects." + v;
        ComplexPtr x;
        try {
            x = share(complex_from_json(field(objs[v], "complex", at)));
            d.underlying.objects.push_back(x);
            d.basepoints.push_back(cellmap_from_json(field(objs[v], "basepoint", at), d.base, x));
        } catch (const ValidationError& err) {
            fail(at, err.what());
        }
    }
    Json arrows = j.contains("arrows") ? j["arrows"] : Json::object();
    as_object(arrows, "diagram.arrows");
    for (const auto& e : g.edges()) {
        if (!arrows.contains(e.id))
            fail("diagram.arrows", "no arrow for edge '" + e.id + "'");
        try {
            d.underlying.arrows.push_back(
                cellmap_from_json(arrows[e.id], d.underlying.objects[e.src], d.underlying.objects[e.dst]));
        } catch (const ValidationError& err) {
            fail("diagram.arrows." + e.id, err.what());
        }
    }
    Json pointed = j.contains("pointedness") ? j["pointedness"] : Json::object();
    as_object(pointed, "diagram.pointedness");
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        Json table = pointed.contains(edge.id) ? pointed[edge.id] : Json::object();
        std::vector<EdgeWord> words;
        for (std::size_t a = 0; a < d.base->vertex_count(); ++a) {
            const auto& aid = d.base->vertex_id(a);
            std::size_t start = d.underlying.arrows[e](d.basepoints[edge.src](a));
            Json steps = table.contains(aid) ? table[aid] : Json::array();
            try {
                words.push_back(word_from_json(steps, *d.underlying.objects[edge.dst], start));
            } catch (const ValidationError& err) {
                fail("diagram.pointedness." + edge.id + "." + aid, err.what());
            }
        }
        d.pointedness.push_back(std::move(words));
    }
    d.validate();
    return d;
}

Json adiagram_to_json(const ADiagramCx& d)
{
    const auto& g = d.shape();
    Json j;
    j["shape"] = graph_to_json(g);
    j["base"] = complex_to_json(*d.base);
    j["objects"] = Json::object();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        j["objects"][g.vertex_id(i)] = {{"complex", complex_to_json(*d.underlying.objects[i])},
                                        {"basepoint", cellmap_to_json(d.basepoints[i])}};
    j["arrows"] = Json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        j["arrows"][g.edge(e).id] = cellmap_to_json(d.underlying.arrows[e]);
    j["pointedness"] = Json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        Json table = Json::object();
        const auto& fj = *d.underlying.objects[g.edge(e).dst];
        for (std::size_t a = 0; a < d.base->vertex_count(); ++a)
            table[d.base->vertex_id(a)] = word_to_json(fj, d.pointedness[e][a]);
        j["pointedness"][g.edge(e).id] = table;
    }
    return j;
}

Json group_to_json(const FgAbelianGroup& g)
{
    Json t = Json::array();
    for (const auto& d : g.torsion)
        t.push_back(d.get_str());
    return {{"rank", g.rank}, {"torsion", t}, {"text", g.to_string()}};
}

Json matrix_to_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Integer& v = m(r, c);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(row);
    }
    return rows;
}

Json invariants_to_json(const ComplexInvariants& inv)
{
    return {{"cells", inv.cells},
            {"pi0", inv.pi0},
            {"euler", inv.euler},
            {"full_euler", inv.full_euler},
            {"H0", group_to_json(inv.h0)},
            {"H1", group_to_json(inv.h1)},
            {"cohomology_H1", group_to_json(inv.cohomology1)}};
}

Json map_check_to_json(const MapCheck& m)
{
    return {{"source_pi0", m.source_pi0},
            {"target_pi0", m.target_pi0},
            {"pi0_bijective", m.pi0_bijective},
            {"source_H1", group_to_json(m.h1.source)},
            {"target_H1", group_to_json(m.h1.target)},
            {"matrix", matrix_to_json(m.h1.matrix)},
            {"H1_surjective", m.h1.surjective},
            {"H1_isomorphism", m.h1.isomorphism}};
}

std::string digest(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hocolim
