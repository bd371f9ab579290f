#include <catch_amalgamated.hpp>

#include "hocolim/complex.hpp"
#include "hocolim/errors.hpp"
#include "hocolim/homology.hpp"
#include "hocolim/random.hpp"
#include "support/oracles.hpp"

using namespace hocolim;

namespace {

CellMap random_map(std::mt19937_64& rng, const ComplexPtr& src, const ComplexPtr& dst)
{
    // vertices anywhere inside one component of the target, edges by paths
    CellMap f{src, dst, {}, {}};
    Partition p = pi0(*dst);
    Partition ps = pi0(*src);
    std::vector<std::size_t> comp_for(ps.size());
    for (auto& c : comp_for)
        c = uniform(rng, 0, p.size() - 1);
    for (std::size_t v = 0; v < src->vertex_count(); ++v) {
        const auto& cls = p.classes[comp_for[ps.class_of[v]]];
        f.vertex_map.push_back(cls[uniform(rng, 0, cls.size() - 1)]);
    }
    for (const auto& e : src->edges())
        f.edge_map.push_back(random_path(rng, *dst, f.vertex_map[e.src], f.vertex_map[e.dst], coin(rng)));
    return f;
}

}  // namespace

TEST_CASE("standard complexes", "[complex]")
{
    CHECK(TwoComplex::point().cell_counts() == std::vector<std::size_t>{1, 0, 0});
    CHECK(TwoComplex::circle().cell_counts() == std::vector<std::size_t>{1, 1, 0});
    CHECK(TwoComplex::torus().cell_counts() == std::vector<std::size_t>{1, 2, 1});
    CHECK(euler_characteristic(TwoComplex::torus()) == 0);
    CHECK(euler_characteristic(TwoComplex::projective_plane()) == 1);
    CHECK(euler_characteristic(TwoComplex::disk()) == 1);
    CHECK(euler_characteristic(TwoComplex::discrete(4)) == 4);
}

TEST_CASE("malformed complexes are rejected", "[complex]")
{
    TwoComplex x;
    x.add_vertex("p");
    x.add_vertex("q");
    x.add_edge("a", 0, 1);
    CHECK_THROWS_AS(x.add_vertex("p"), ValidationError);
    CHECK_THROWS_AS(x.add_edge("b", 0, 5), ValidationError);
    CHECK_THROWS_AS(x.add_face("f", {}), ValidationError);
    CHECK_THROWS_WITH(x.add_face("f", {{0, 1}}), Catch::Matchers::ContainsSubstring("not closed"));
    CHECK_THROWS_AS(x.add_face("f", {{0, 1}, {0, 1}}), ValidationError);
    CHECK_THROWS_AS(x.add_face("f", {{0, 2}, {0, -1}}), ValidationError);
    CHECK_NOTHROW(x.add_face("f", {{0, 1}, {0, -1}}));
    CHECK_THROWS_AS(x.vertex_index("zz"), ValidationError);
}

TEST_CASE("words", "[complex]")
{
    TwoComplex t = TwoComplex::torus();
    EdgeWord a = step_word(t, 0), b = step_word(t, 1, -1);
    EdgeWord ab = concat(t, a, b);
    CHECK(ab.steps.size() == 2);
    CHECK(inverse(t, inverse(t, ab)) == ab);
    CHECK(free_reduce(concat(t, ab, inverse(t, ab))).empty());
    CHECK(t.word_end(ab) == 0);

    TwoComplex s = TwoComplex::discrete(2);
    s.add_edge("e", 0, 1);
    EdgeWord e = step_word(s, 0);
    CHECK_THROWS_AS(concat(s, e, e), ValidationError);
    CHECK(s.word_end(inverse(s, e)) == 0);
    CHECK_THROWS_AS(s.word_end(EdgeWord{1, {{0, 1}}}), ValidationError);
}

TEST_CASE("disjoint union", "[complex]")
{
    auto u = disjoint_union({share(TwoComplex::circle()), share(TwoComplex::point()), share(TwoComplex::torus())});
    const auto& x = *u.complex;
    CHECK(x.cell_counts() == std::vector<std::size_t>{3, 3, 1});
    CHECK(x.vertex_id(1) == "1:*");
    CHECK(x.edge(0).id == "0:a");
    REQUIRE(u.injections.size() == 3);
    for (const auto& inj : u.injections)
        CHECK_NOTHROW(inj.validate());
    CHECK(pi0(x).size() == 3);
    auto h = homology_groups(x);
    CHECK(h.h0.rank == 3);
    CHECK(h.h1.rank == 3);

    auto empty = disjoint_union({});
    CHECK(empty.complex->vertex_count() == 0);
}

TEST_CASE("pushouts", "[complex]")
{
    auto pt = share(TwoComplex::point());
    auto s0 = share(TwoComplex::discrete(2));

    SECTION("suspension of two points is a circle")
    {
        auto po = pushout(CellMap::constant(s0, pt, 0), CellMap::constant(s0, pt, 0));
        CHECK(po.complex->cell_counts() == std::vector<std::size_t>{2, 2, 0});
        CHECK(po.complex->edge(0).id == "glue(0)");
        CHECK(homology_groups(*po.complex).h1 == FgAbelianGroup{1, {}});
        CHECK(euler_characteristic(*po.complex) == 0);
    }

    SECTION("two disks along their boundary give a sphere")
    {
        auto c = share(TwoComplex::circle());
        auto d = share(TwoComplex::disk());
        CellMap inc{c, d, {0}, {step_word(*d, 0)}};
        auto po = pushout(inc, inc);
        CHECK(po.complex->cell_counts() == std::vector<std::size_t>{2, 3, 3});
        CHECK(euler_characteristic(*po.complex) == 2);
        CHECK(homology_groups(*po.complex).h1.is_trivial());
        CHECK(po.complex->face(po.squares[0]).id == "sq(a)");
    }

    SECTION("faces of the apex are counted as 3-cells")
    {
        auto d = share(TwoComplex::disk());
        auto po = pushout(CellMap::constant(d, pt, 0), CellMap::constant(d, pt, 0));
        CHECK(po.complex->cell_counts() == std::vector<std::size_t>{2, 1, 1, 1});
        CHECK(full_euler_characteristic(*po.complex) == 1);
        CHECK(euler_characteristic(*po.complex) == 2);
    }

    SECTION("mismatched sources")
    {
        CHECK_THROWS_AS(pushout(CellMap::constant(s0, pt, 0), CellMap::identity(pt)), ValidationError);
    }
}

TEST_CASE("pushout is symmetric up to relabelling", "[complex][random]")
{
    for (std::size_t k = 0; k < 100; ++k) {
        auto rng = case_rng(21, k);
        auto c = share(random_complex(rng, 3, false, false));
        auto a = share(random_complex(rng, 3, true));
        auto b = share(random_complex(rng, 3, true));
        CellMap f = random_map(rng, c, a), g = random_map(rng, c, b);
        auto p = pushout(f, g), q = pushout(g, f);
        REQUIRE(p.complex->cell_counts() == q.complex->cell_counts());
        auto hp = homology_groups(*p.complex), hq = homology_groups(*q.complex);
        REQUIRE(hp.h0 == hq.h0);
        REQUIRE(hp.h1 == hq.h1);
        REQUIRE_NOTHROW(p.inl.validate());
        REQUIRE_NOTHROW(p.inr.validate());
    }
}

TEST_CASE("cell maps", "[complex]")
{
    auto c = share(TwoComplex::circle());
    auto t = share(TwoComplex::torus());
    CellMap bad{c, t, {0}, {EdgeWord{0, {{7, 1}}}}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    CellMap wrong_size{c, t, {0, 0}, {}};
    CHECK_THROWS_WITH(wrong_size.validate(), Catch::Matchers::ContainsSubstring("vertex table"));

    CellMap f{c, t, {0}, {concat(*t, step_word(*t, 0), step_word(*t, 1))}};
    CHECK_NOTHROW(f.validate());
    auto id = CellMap::identity(t);
    auto h = compose_cell_maps(id, f);
    CHECK(h.vertex_map == f.vertex_map);
    CHECK(h.edge_map == f.edge_map);
    CHECK_THROWS_AS(compose_cell_maps(f, f), ValidationError);
    CHECK(f.apply(step_word(*c, 0, -1)).steps.size() == 2);
}

TEST_CASE("composition is associative", "[complex][random]")
{
    for (std::size_t k = 0; k < 100; ++k) {
        auto rng = case_rng(22, k);
        auto x = share(random_complex(rng, 3, false));
        auto y = share(random_complex(rng, 3, false));
        auto z = share(random_complex(rng, 3, true));
        auto w = share(random_complex(rng, 3, true));
        CellMap f = random_map(rng, x, y), g = random_map(rng, y, z), h = random_map(rng, z, w);
        auto l = compose_cell_maps(h, compose_cell_maps(g, f));
        auto r = compose_cell_maps(compose_cell_maps(h, g), f);
        REQUIRE(l.vertex_map == r.vertex_map);
        REQUIRE(l.edge_map == r.edge_map);
        REQUIRE_NOTHROW(l.validate());
    }
}

TEST_CASE("pi0", "[complex]")
{
    TwoComplex x = TwoComplex::discrete(4);
    x.add_edge("a", 3, 1);
    auto p = pi0(x);
    REQUIRE(p.size() == 3);
    CHECK(p.class_of == std::vector<std::size_t>{0, 1, 2, 1});
    CHECK(p.classes[1] == std::vector<std::size_t>{1, 3});

    for (std::size_t k = 0; k < 100; ++k) {
        auto rng = case_rng(23, k);
        auto y = random_complex(rng, 5, false);
        REQUIRE(pi0(y).size() == homology_groups(y).h0.rank);
    }
}

TEST_CASE("pi1 presentations", "[complex]")
{
    auto t = pi1_presentation(TwoComplex::torus(), 0);
    CHECK(t.generators == std::vector<std::string>{"a", "b"});
    REQUIRE(t.relators.size() == 1);
    CHECK(t.relators[0] == std::vector<std::pair<std::size_t, int>>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});

    auto rp = pi1_presentation(TwoComplex::projective_plane(), 0);
    REQUIRE(rp.relators.size() == 1);
    CHECK(rp.relators[0].size() == 2);

    // tree edges are deleted from relators
    TwoComplex x = TwoComplex::discrete(2);
    x.add_edge("t", 0, 1);
    x.add_edge("u", 1, 0);
    x.add_face("f", {{0, 1}, {1, 1}});
    auto p = pi1_presentation(x, 0);
    CHECK(p.generators == std::vector<std::string>{"u"});
    CHECK(p.relators[0] == std::vector<std::pair<std::size_t, int>>{{0, 1}});

    CHECK_THROWS_AS(pi1_presentation(x, 9), ValidationError);

    for (std::size_t k = 0; k < 150; ++k) {
        auto rng = case_rng(24, k);
        auto y = random_complex(rng, 4, coin(rng));
        REQUIRE(oracle::abelianized_pi1(y) == homology_groups(y).h1);
    }
}
