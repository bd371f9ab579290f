#include <catch_amalgamated.hpp>

#include "hocolim/coslice.hpp"
#include "hocolim/errors.hpp"
#include "hocolim/homology.hpp"
#include "hocolim/random.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hocolim;
using fixtures::pointed_constant;

namespace {

Graph triangle()
{
    return Graph({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}});
}

// every component constant at vertex 0, all witnesses empty
ADiagramMorphism collapse(const ADiagramCx& f, const ADiagramCx& g)
{
    ADiagramMorphism m;
    for (std::size_t i = 0; i < f.shape().vertex_count(); ++i) {
        m.components.push_back(CellMap::constant(f.underlying.objects[i], g.underlying.objects[i], 0));
        m.pointedness.push_back(std::vector<EdgeWord>(f.base->vertex_count(), empty_word(0)));
    }
    for (std::size_t e = 0; e < f.shape().edge_count(); ++e)
        m.naturality.push_back(
            std::vector<EdgeWord>(f.underlying.objects[f.shape().edge(e).src]->vertex_count(), empty_word(0)));
    return m;
}

}  // namespace

TEST_CASE("mapping telescope", "[coslice]")
{
    auto loop = colim_cx(constant_diagram(Graph::loop(), share(TwoComplex::point())));
    CHECK(loop.complex->cell_counts() == std::vector<std::size_t>{1, 1, 0});
    CHECK(loop.complex->vertex_id(0) == "v:*");
    CHECK(loop.complex->edge(loop.kappa[0][0]).id == "k(g,*)");
    CHECK(homology_groups(*loop.complex).h1.to_string() == "Z");

    auto circles = colim_cx(constant_diagram(Graph::arrow(), share(TwoComplex::circle())));
    CHECK(circles.complex->cell_counts() == std::vector<std::size_t>{2, 3, 1});
    CHECK(circles.complex->face(circles.squares[0][0]).id == "n(g,a)");
    CHECK(homology_groups(*circles.complex).h1.to_string() == "Z");

    // faces of an edge source become 3-cells
    auto disks = colim_cx(constant_diagram(Graph::arrow(), share(TwoComplex::disk())));
    CHECK(disks.complex->discarded_cells() == std::vector<std::size_t>{1});
    CHECK(full_euler_characteristic(*disks.complex) == 1);

    DiagramCx bad = constant_diagram(Graph::arrow(), share(TwoComplex::circle()));
    bad.arrows.pop_back();
    CHECK_THROWS_AS(colim_cx(bad), ValidationError);
}

TEST_CASE("fold and psi", "[coslice]")
{
    auto a = share(TwoComplex::circle());
    auto c = colim_cx(constant_diagram(Graph::span(), a));
    auto fold = fold_map(c, a);
    CHECK_NOTHROW(fold.validate());
    auto h = induced_h1(fold);
    CHECK(h.isomorphism);

    auto d = pointed_constant(Graph::span(), {TwoComplex::circle(), TwoComplex::point(), TwoComplex::torus()});
    auto one = construction_one(d);
    CHECK_NOTHROW(one.psi.validate());
    CHECK(one.psi.source == one.constant.complex);
    CHECK(one.psi.target == one.colim.complex);
}

TEST_CASE("pointed colimits of named diagrams", "[coslice]")
{
    SECTION("loop of the point: plain circle, pointed contractible")
    {
        auto d = pointed_constant(Graph::loop(), {TwoComplex::point()});
        auto one = invariants(*construction_one(d).result.total);
        auto two = invariants(*construction_two(d).result.total);
        CHECK(one.h1.is_trivial());
        CHECK(two.h1.is_trivial());
        CHECK(one.pi0 == 1);
        CHECK(one.full_euler == 1);
        CHECK(two.full_euler == 1);
    }

    SECTION("triangle of points")
    {
        auto d = pointed_constant(triangle(), {TwoComplex::point(), TwoComplex::point(), TwoComplex::point()});
        CHECK(homology_groups(*colim_cx(d.underlying).complex).h1.to_string() == "Z");
        CHECK(invariants(*construction_one(d).result.total).h1.is_trivial());
        CHECK(compare_constructions(d).passed());
    }

    SECTION("span of circles over the point is the figure eight")
    {
        auto d = pointed_constant(Graph::span(), {TwoComplex::circle(), TwoComplex::point(), TwoComplex::circle()});
        auto one = invariants(*construction_one(d).result.total);
        CHECK(one.h1.to_string() == "Z^2");
        CHECK(one.full_euler == -1);
        CHECK(invariants(*construction_two(d).result.total).h1.to_string() == "Z^2");
    }

    SECTION("torsion survives")
    {
        auto d = pointed_constant(Graph::arrow(), {TwoComplex::point(), TwoComplex::projective_plane()});
        CHECK(invariants(*construction_one(d).result.total).h1.to_string() == "Z/2");
    }
}

TEST_CASE("coslice coproduct", "[coslice]")
{
    auto base = share(TwoComplex::point());
    auto c = share(TwoComplex::circle());
    CosliceComplex x{base, c, CellMap::constant(base, c, 0)};
    auto wedge = coslice_coproduct(base, {x, x});
    CHECK(homology_groups(*wedge.result.total).h1.to_string() == "Z^2");
    CHECK(pi0(*wedge.result.total).size() == 1);
    REQUIRE(wedge.injections.size() == 2);
    for (const auto& inj : wedge.injections)
        CHECK(induced_h1(inj).source.rank == 1);

    // empty coproduct is A
    auto none = coslice_coproduct(base, {});
    CHECK(pi0(*none.result.total).size() == 1);
    CHECK(homology_groups(*none.result.total).h1.is_trivial());

    auto other = share(TwoComplex::discrete(2));
    CosliceComplex y{other, c, CellMap::constant(other, c, 0)};
    CHECK_THROWS_AS(coslice_coproduct(base, {x, y}), ValidationError);
}

TEST_CASE("augmented diagram", "[coslice]")
{
    auto d = pointed_constant(Graph::loop(), {TwoComplex::point()});
    auto aug = augmented_diagram(d);
    CHECK(aug.shape.vertex_count() == 2);
    CHECK(aug.shape.vertex_id(1) == "bot");
    CHECK(aug.shape.edge(1).id == "aug(v)");
    // the augmented shape keeps the loop, so the plain colimit is still a circle
    CHECK(homology_groups(*colim_cx(d.underlying).complex).h1.to_string() == "Z");
    CHECK(homology_groups(*colim_cx(aug).complex).h1.to_string() == "Z");
    CHECK(invariants(*construction_one(d).result.total).h1.is_trivial());
}

TEST_CASE("constructions agree on random diagrams", "[coslice][random]")
{
    for (std::size_t k = 0; k < 60; ++k) {
        auto rng = case_rng(61, k);
        GenBounds b;
        b.max_base = k % 2 ? 2 : 1;
        auto d = random_adiagram(rng, random_graph(rng, 3, 3), b, coin(rng));
        REQUIRE_NOTHROW(d.validate());
        auto c = compare_constructions(d);
        INFO("one " << c.one.h1.to_string() << ", two " << c.two.h1.to_string());
        REQUIRE(c.invariants_agree);
        REQUIRE(c.comparison.passed());
    }
}

TEST_CASE("functoriality of the pointed colimit", "[coslice]")
{
    // the constant arrow of a circle over the loop would kill its H1
    Graph two = Graph::discrete(2);
    auto f = pointed_constant(two, {TwoComplex::circle(), TwoComplex::torus()});
    auto g = pointed_constant(two, {TwoComplex::point(), TwoComplex::point()});
    auto pf = construction_one(f), pg = construction_one(g);

    auto id = colim_map(f, f, identity_morphism(f), pf, pf);
    CHECK_NOTHROW(id.validate());
    CHECK(check_map(id).passed());

    auto delta = collapse(f, g);
    REQUIRE_NOTHROW(validate_morphism(f, g, delta));
    auto m = colim_map(f, g, delta, pf, pg);
    auto h = induced_h1(m);
    CHECK(h.source.to_string() == "Z^3");
    CHECK(h.target.is_trivial());
    CHECK(h.matrix.is_zero());

    // through g and back to the circle diagram is zero on H1
    auto back = collapse(g, f);
    auto round = compose_morphisms(f, g, f, delta, back);
    auto composite = colim_map(f, f, round, pf, pf);
    CHECK(induced_h1(composite).matrix.is_zero());
    auto stepwise = compose_cell_maps(colim_map(g, f, back, pg, pf), m);
    CHECK(induced_h1(stepwise).cycle_matrix == induced_h1(composite).cycle_matrix);

    // degree two on the circle, identity on the torus
    ADiagramMorphism twice = identity_morphism(f);
    const auto& circle = *f.underlying.objects[0];
    twice.components[0].edge_map[0] = concat(circle, step_word(circle, 0), step_word(circle, 0));
    auto t = induced_h1(colim_map(f, f, twice, pf, pf));
    CHECK(abs(determinant(t.matrix)) == 2);
    CHECK_FALSE(t.surjective);

    ADiagramMorphism broken = delta;
    broken.pointedness[0].clear();
    CHECK_THROWS_AS(validate_morphism(f, g, broken), ValidationError);
}

TEST_CASE("comparison map t_f", "[coslice]")
{
    auto d = pointed_constant(Graph::span(), {TwoComplex::torus(), TwoComplex::circle(), TwoComplex::circle()});
    auto one = construction_one(d);
    auto two = construction_two(d);
    auto t = t_f_map(d, one, two);
    CHECK_NOTHROW(t.validate());
    CHECK(check_map(t).passed());
}

TEST_CASE("tree creation", "[coslice]")
{
    auto span = pointed_constant(Graph::span(), {TwoComplex::torus(), TwoComplex::circle(), TwoComplex::point()});
    auto m = check_tree_creation(span);
    CHECK(m.passed());

    auto loop = pointed_constant(Graph::loop(), {TwoComplex::point()});
    CHECK_THROWS_AS(check_tree_creation(loop), PreconditionError);
    auto neg = creation_comparison(loop);
    CHECK(neg.h1.source.to_string() == "Z");
    CHECK(neg.h1.target.is_trivial());
    CHECK_FALSE(neg.passed());
}

TEST_CASE("connectivity", "[coslice]")
{
    auto d = pointed_constant(triangle(), {TwoComplex::circle(), TwoComplex::point(), TwoComplex::torus()});
    auto r = check_connectivity(d);
    CHECK(r.hypothesis);
    CHECK(r.pi0 == 1);
    CHECK(r.passed);
    CHECK(r.plain_loop_h1.to_string() == "Z");

    auto split = pointed_constant(Graph::discrete(1), {TwoComplex::discrete(2)});
    auto s = check_connectivity(split);
    CHECK_FALSE(s.hypothesis);
    CHECK(s.pi0 == 2);
    CHECK(s.passed);
}

TEST_CASE("pi0 of the pointed colimit", "[coslice]")
{
    auto d = pointed_constant(Graph::arrow(), {TwoComplex::discrete(3), TwoComplex::discrete(2)});
    auto s = pi0_diagram(d);
    CHECK(s.diagram.objects[0].size() == 3);
    CHECK(s.diagram.arrows[0] == FinFun{2, {0, 0, 0}});
    auto t = check_truncation(d);
    CHECK(t.bijective);
    // F_0 collapses onto the basepoint; the second point of F_1 stays apart
    CHECK(t.complex_pi0 == 2);
    CHECK(t.set_colimit == 2);

    for (std::size_t k = 0; k < 60; ++k) {
        auto rng = case_rng(62, k);
        GenBounds b;
        b.max_base = 2;
        auto e = random_adiagram(rng, random_graph(rng, 3, 3), b, false);
        auto r = check_truncation(e);
        REQUIRE(r.bijective);
        auto cls = oracle::coslice_colim_classes(pi0_diagram(e));
        std::size_t n = 0;
        for (auto c : cls)
            n = std::max(n, c + 1);
        REQUIRE(r.complex_pi0 == n);
    }
}

TEST_CASE("A-diagram validation", "[coslice]")
{
    auto d = pointed_constant(Graph::arrow(), {TwoComplex::circle(), TwoComplex::circle()});
    d.pointedness[0][0] = step_word(*d.underlying.objects[1], 0);
    CHECK_NOTHROW(d.validate());
    d.pointedness[0].clear();
    CHECK_THROWS_WITH(d.validate(), Catch::Matchers::ContainsSubstring("pointedness"));

    auto e = pointed_constant(Graph::arrow(), {TwoComplex::circle(), TwoComplex::circle()});
    e.basepoints.pop_back();
    CHECK_THROWS_AS(e.validate(), ValidationError);
}
