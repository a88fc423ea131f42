#include <random>

#include "doctest.h"
#include "pminor/hlclan.hpp"
#include "pminor/minors.hpp"
#include "test_util.hpp"

using namespace pminor;
using testutil::random_rational_diagonal;
using testutil::random_skew;
using testutil::scaled_conjugate;
using testutil::sk;

namespace {

std::pair<SkewMatrix, SkewMatrix> coupled_fixture() {
    SkewMatrix block = testutil::sk(2, {1});
    std::vector<Int> ones{Int(1), Int(1)};
    return rank_one_coupled_pair(block, block, ones, ones);
}

}  // namespace

TEST_CASE("trivial subsets are always HL-clans") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + it % 6;
        SkewMatrix a = random_skew(rng, n, -5, 5);
        CHECK(is_hl_clan(a, VertexSubset()));
        CHECK(is_hl_clan(a, VertexSubset::full(n)));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(is_hl_clan(a, VertexSubset::single(i)));
            CHECK(is_hl_clan(a, VertexSubset::single(i).complement(n)));
        }
    }
}

TEST_CASE("rank-one coupled blocks form an HL-clan, generic blocks do not") {
    auto [a, b] = coupled_fixture();
    VertexSubset top = VertexSubset::of({0, 1});
    CHECK(is_hl_clan(a, top));
    CHECK(is_hl_clan(b, top));

    // apex over a cyclic triangle: block rows {0,1} x cols {2,3} has rank 2
    SkewMatrix c = sk(4, {1, 1, 1, 1, -1, 1});
    CHECK_FALSE(is_hl_clan(c, VertexSubset::of({0, 1})));
}

TEST_CASE("enumeration lists every subset for degenerate inputs") {
    SkewMatrix z = sk(4, {0, 0, 0, 0, 0, 0});
    CHECK(enumerate_hl_clans(z).clans.size() == 16);

    std::mt19937_64 rng(53);
    SkewMatrix any3 = random_skew(rng, 3, -9, 9);
    CHECK(enumerate_hl_clans(any3).clans.size() == 8);

    auto [a, b] = coupled_fixture();
    HlClanList list = enumerate_hl_clans(a);
    VertexSubset top = VertexSubset::of({0, 1});
    CHECK(list.contains(top));
    CHECK_FALSE(HlClanList::trivial(top, 4));

    SkewMatrix big = SkewMatrix::from_upper(
        17, std::vector<Int>(17 * 16 / 2, Int(0)));
    CHECK_THROWS_AS(enumerate_hl_clans(big), ResourceLimitError);
}

TEST_CASE("reversal transform basics") {
    std::mt19937_64 rng(59);
    SkewMatrix a = random_skew(rng, 5, -4, 4);
    CHECK(invert(a, VertexSubset()) == a);
    CHECK(invert(a, VertexSubset::full(5)) == a.negated());

    for (int it = 0; it < 40; ++it) {
        std::uint64_t mask = rng() & 0x1f;
        VertexSubset x(mask);
        CHECK(invert(invert(a, x), x) == a);
    }

    SkewMatrix c = sk(4, {1, 1, 1, 1, -1, 1});
    CHECK_THROWS_AS(invert_checked(c, VertexSubset::of({0, 1})),
                    std::domain_error);
    CHECK(invert_checked(c, VertexSubset::full(4)) == c.negated());
}

TEST_CASE("clan sets are invariant under rational diagonal conjugation") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 2 + it % 5;
        SkewMatrix a = random_skew(rng, n, -3, 3);
        GeneralMatrix conj = scaled_conjugate(a, random_rational_diagonal(rng, n));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSubset x(mask);
            CHECK(is_hl_clan(a, x) == is_hl_clan(conj, x));
        }
    }
}

TEST_CASE("clans survive their own reversal") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 2 + it % 6;
        SkewMatrix a = random_skew(rng, n, -2, 2);
        for (VertexSubset c : enumerate_hl_clans(a).clans)
            CHECK(is_hl_clan(invert(a, c), c));
    }
}

TEST_CASE("clans restrict to induced principal submatrices") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 3 + it % 5;
        SkewMatrix a = random_skew(rng, n, -2, 2);
        auto clans = enumerate_hl_clans(a).clans;
        VertexSubset c = clans[rng() % clans.size()];
        VertexSubset x(rng() & VertexSubset::full(n).mask());
        if (x.empty()) continue;
        VertexSubset restricted = reindex_into(c & x, x);
        CHECK(is_hl_clan(a.principal(x), restricted));
        CHECK(invert(a, c).principal(x) ==
              invert(a.principal(x), restricted));
    }
}

TEST_CASE("reversal at an HL-clan preserves the characteristic polynomial") {
    std::mt19937_64 rng(73);
    const long long lambdas[] = {-2, -1, 1, 2, 3};
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 2 + it % 5;
        SkewMatrix a = random_skew(rng, n, -3, 3);
        for (VertexSubset x : enumerate_hl_clans(a).clans) {
            SkewMatrix r = invert(a, x);
            CHECK(determinant(r) == determinant(a));
            for (long long l : lambdas)
                CHECK(determinant(a.plus_scalar_identity(Int(l))) ==
                      determinant(r.plus_scalar_identity(Int(l))));
        }
    }
}

TEST_CASE("coupled pair construction") {
    SkewMatrix a11 = sk(2, {1});
    SkewMatrix a22 = sk(2, {1});

    SUBCASE("zero coupling decouples the blocks") {
        std::vector<Int> zero{Int(0), Int(0)};
        std::vector<Int> ones{Int(1), Int(1)};
        auto [a, b] = rank_one_coupled_pair(a11, a22, zero, ones);
        CHECK(a(0, 2) == 0);
        CHECK(a(1, 3) == 0);
        CHECK(b == invert(a, VertexSubset::of({0, 1})));
    }

    SUBCASE("coupled pair has equal fingerprints") {
        auto [a, b] = coupled_fixture();
        CHECK(a(0, 2) == -1);  // -beta alpha^T block
        CHECK(a(2, 0) == 1);   // alpha beta^T block
        CHECK(b == invert(a, VertexSubset::of({0, 1})));
        CHECK(fingerprints_equal(a, b).equal);
    }

    SUBCASE("dimension mismatch is rejected") {
        std::vector<Int> three{Int(1), Int(1), Int(1)};
        std::vector<Int> ones{Int(1), Int(1)};
        CHECK_THROWS_AS(rank_one_coupled_pair(a11, a22, three, ones),
                        std::invalid_argument);
    }
}
