#include <catch_amalgamated.hpp>

#include <stdexcept>

#include "hocolim/coslice.hpp"
#include "hocolim/parallel.hpp"
#include "hocolim/random.hpp"
#include "support/suites.hpp"

using namespace hocolim;

TEST_CASE("serial and parallel runners give the same verdicts", "[parallel]")
{
    auto fn = [](std::size_t k) -> CaseOutcome {
        auto rng = case_rng(81, k);
        GenBounds b;
        auto d = random_adiagram(rng, random_graph(rng, 3, 3), b, coin(rng));
        auto c = compare_constructions(d);
        // a verdict that differs across cases, so ordering mistakes show up
        bool odd = c.one.h1.rank % 2 == 1;
        return {odd, c.one.h1.to_string()};
    };
    auto s = run_cases_serial(80, fn);
    auto p = run_cases_parallel(80, fn);
    REQUIRE(s.size() == p.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(s[k].passed == p[k].passed);
        CHECK(s[k].message == p[k].message);
    }
}

TEST_CASE("exceptions become failures", "[parallel]")
{
    auto fn = [](std::size_t k) -> CaseOutcome {
        if (k == 3)
            throw std::runtime_error("boom");
        return {true, {}};
    };
    for (bool par : {false, true}) {
        auto r = run_cases(5, fn, par);
        REQUIRE(r.size() == 5);
        CHECK_FALSE(r[3].passed);
        CHECK_THAT(r[3].message, Catch::Matchers::ContainsSubstring("boom"));
        CHECK(r[4].passed);
    }
}

TEST_CASE("suites are deterministic in the seed", "[parallel]")
{
    suites::SuiteConfig serial;
    serial.parallel = false;
    suites::SuiteConfig parallel;
    auto a = suites::truncation(serial), b = suites::truncation(parallel);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.passed);
    auto c = suites::preservation(serial), d = suites::preservation(parallel);
    CHECK(c.cases == d.cases);
    CHECK(c.passed == d.passed);
}
