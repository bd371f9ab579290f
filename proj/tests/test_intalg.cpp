#include <catch_amalgamated.hpp>

#include "hocolim/errors.hpp"
#include "hocolim/intalg.hpp"
#include "hocolim/random.hpp"
#include "support/oracles.hpp"

using namespace hocolim;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread)
{
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<long>(uniform(rng, 0, 2 * spread)) - spread;
    return m;
}

bool is_diagonal(const IntMatrix& d)
{
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (r != c && d(r, c) != 0)
                return false;
    return true;
}

}  // namespace

TEST_CASE("determinant", "[intalg]")
{
    CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS(determinant(IntMatrix(2, 3)));
}

TEST_CASE("smith normal form examples", "[intalg]")
{
    auto s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});

    auto z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.rank == 0);
    CHECK(z.U == IntMatrix::identity(2));

    auto one = smith_normal_form(IntMatrix{{2, 3}});
    CHECK(one.diagonal() == std::vector<Integer>{1});

    auto neg = smith_normal_form(IntMatrix{{-4}});
    CHECK(neg.diagonal() == std::vector<Integer>{4});
}

TEST_CASE("smith normal form invariants on random matrices", "[intalg][random]")
{
    for (std::size_t k = 0; k < 400; ++k) {
        auto rng = case_rng(31, k);
        std::size_t rows = uniform(rng, 0, 4), cols = uniform(rng, 0, 4);
        IntMatrix m = random_matrix(rng, rows, cols, k % 2 ? 3 : 9);
        auto s = smith_normal_form(m);
        REQUIRE(s.U * m * s.V == s.D);
        REQUIRE(is_diagonal(s.D));
        REQUIRE(abs(determinant(s.U)) == 1);
        REQUIRE(abs(determinant(s.V)) == 1);
        REQUIRE(s.U * s.U_inv == IntMatrix::identity(rows));
        REQUIRE(s.V * s.V_inv == IntMatrix::identity(cols));
        auto d = s.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            REQUIRE(d[i] > 0);
            if (i + 1 < d.size())
                REQUIRE(d[i + 1] % d[i] == 0);
        }
        for (std::size_t i = d.size(); i < std::min(rows, cols); ++i)
            REQUIRE(s.D(i, i) == 0);
        REQUIRE(d == oracle::invariant_factors(m));
    }
}

TEST_CASE("cokernel groups", "[intalg]")
{
    CHECK(cokernel_group(IntMatrix{{2, 0}, {0, 3}}).to_string() == "Z/6");
    CHECK(cokernel_group(IntMatrix{{2, 0}}).to_string() == "Z + Z/2");
    CHECK(cokernel_group(IntMatrix(0, 3)).to_string() == "Z^3");
    CHECK(cokernel_group(IntMatrix{{1, 1}}).to_string() == "Z");
    CHECK(cokernel_group(IntMatrix{{2, 2}, {0, 4}}) == FgAbelianGroup{0, {2, 4}});
    CHECK(cokernel_group(IntMatrix(0, 0)).is_trivial());
}

TEST_CASE("integer kernel", "[intalg][random]")
{
    auto k = integer_kernel(IntMatrix{{1, -1, 0}, {0, 1, -1}});
    REQUIRE(k.cols() == 1);
    CHECK(abs(k(0, 0)) == 1);
    CHECK(k(0, 0) == k(2, 0));

    for (std::size_t i = 0; i < 200; ++i) {
        auto rng = case_rng(32, i);
        IntMatrix m = random_matrix(rng, uniform(rng, 1, 4), uniform(rng, 1, 5), 3);
        IntMatrix ker = integer_kernel(m);
        REQUIRE(ker.rows() == m.cols());
        REQUIRE((m * ker).is_zero());
        REQUIRE(ker.cols() == m.cols() - smith_normal_form(m).rank);
        // saturated: the kernel basis spans a direct summand
        if (ker.cols() > 0)
            REQUIRE(cokernel_group(ker.transpose()).torsion.empty());
    }
}

TEST_CASE("hermite form and lattice equality", "[intalg][random]")
{
    IntMatrix a{{2, 0}, {0, 2}};
    IntMatrix b{{2, 2}, {0, 2}};
    IntMatrix c{{1, 0}, {0, 2}};
    CHECK(subgroup_equal(a, b));
    CHECK_FALSE(subgroup_equal(a, c));
    CHECK(lattice_contains(c, a));
    CHECK_FALSE(lattice_contains(a, c));
    CHECK_THROWS_AS(subgroup_equal(a, IntMatrix(3, 1)), ValidationError);
    CHECK(subgroup_equal(IntMatrix(2, 0), IntMatrix(2, 1)));

    for (std::size_t k = 0; k < 200; ++k) {
        auto rng = case_rng(33, k);
        std::size_t rows = uniform(rng, 1, 2);
        IntMatrix x = random_matrix(rng, rows, uniform(rng, 0, 2), 2);
        IntMatrix y = k % 3 == 0 ? x * random_matrix(rng, x.cols(), uniform(rng, 0, 2), 1) : random_matrix(rng, rows, uniform(rng, 0, 2), 2);
        bool fast = subgroup_equal(x, y);
        REQUIRE(fast == subgroup_equal(y, x));
        REQUIRE(fast == (column_hermite_form(x) == column_hermite_form(y)));
        // the search oracle can only confirm equality with small coefficients
        if (oracle::lattice_equal_search(x, y, 4))
            REQUIRE(fast);
        if (!fast)
            REQUIRE_FALSE(oracle::lattice_equal_search(x, y, 4));
        REQUIRE(subgroup_equal(x, column_hermite_form(x)));
        REQUIRE(column_hermite_form(column_hermite_form(x)) == column_hermite_form(x));
    }
}

TEST_CASE("lattice equality is an equivalence relation", "[intalg][random]")
{
    for (std::size_t k = 0; k < 200; ++k) {
        auto rng = case_rng(34, k);
        IntMatrix x = random_matrix(rng, 2, 2, 2);
        // unimodular changes of basis give equal lattices
        IntMatrix u{{1, static_cast<long>(uniform(rng, 0, 4)) - 2}, {0, 1}};
        IntMatrix v{{1, 0}, {static_cast<long>(uniform(rng, 0, 4)) - 2, 1}};
        IntMatrix y = x * u, z = y * v;
        REQUIRE(subgroup_equal(x, x));
        REQUIRE(subgroup_equal(x, y));
        REQUIRE(subgroup_equal(y, x));
        REQUIRE(subgroup_equal(y, z));
        REQUIRE(subgroup_equal(x, z));
    }
}
