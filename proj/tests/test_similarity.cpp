#include <random>

#include "doctest.h"
#include "pminor/hlclan.hpp"
#include "pminor/similarity.hpp"
#include "pminor/equivalence.hpp"
#include "test_util.hpp"

using namespace pminor;
using testutil::pm1_similar_up_to_transpose;
using testutil::random_sign_diagonal;
using testutil::random_skew;
using testutil::sk;

namespace {

std::pair<SkewMatrix, SkewMatrix> coupled_fixture() {
    SkewMatrix block = testutil::sk(2, {1});
    std::vector<Int> ones{Int(1), Int(1)};
    return rank_one_coupled_pair(block, block, ones, ones);
}

// Connectivity and the bipartition rank condition decided with independent
// machinery: depth-first reachability plus the 2x2-minor rank test through
// the HL-clan predicate.
bool loewy_oracle(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j] && a(i, j) != 0) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    if (reached != n) return false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
        VertexSubset x(mask);
        if (x.size() < 2 || x.size() > n - 2) continue;
        if (is_hl_clan(a, x)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("sign conjugation") {
    SkewMatrix a = sk(3, {1, 2, 3});
    SignDiagonal d = SignDiagonal::of({Rational(1), Rational(-1), Rational(1)});
    SkewMatrix c = conjugate_signs(a, d);
    CHECK(c(0, 1) == -1);
    CHECK(c(0, 2) == 2);
    CHECK(c(1, 2) == -3);
    CHECK(conjugate_signs(c, d) == a);

    CHECK_THROWS_AS(
        conjugate_signs(a, SignDiagonal::of({Rational(2), Rational(1),
                                             Rational(1)})),
        std::domain_error);
    CHECK_THROWS_AS(SignDiagonal::of({Rational(0)}), std::invalid_argument);
}

TEST_CASE("diagonal similarity search on constructed instances") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 2 + it % 6;
        SkewMatrix a = random_skew(rng, n, -3, 3);

        SimilarityDecision self = find_diagonal_similarity(a, a);
        REQUIRE(self.witness.has_value());
        CHECK(witness_verifies(a, a, *self.witness));
        CHECK_FALSE(self.witness->transposed);

        SignDiagonal d0 = random_sign_diagonal(rng, n);
        SkewMatrix b = conjugate_signs(a, d0);
        SimilarityDecision found = find_diagonal_similarity(a, b);
        REQUIRE(found.witness.has_value());
        CHECK(witness_verifies(a, b, *found.witness));
    }
}

TEST_CASE("similarity up to transposition") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 2 + it % 5;
        SkewMatrix a = random_skew(rng, n, -3, 3);

        SimilarityDecision t = find_similarity_up_to_transpose(a, a.negated());
        REQUIRE(t.witness.has_value());
        CHECK(witness_verifies(a, a.negated(), *t.witness));

        SkewMatrix b = conjugate_signs(a, random_sign_diagonal(rng, n));
        SimilarityDecision p = find_similarity_up_to_transpose(a, b);
        REQUIRE(p.witness.has_value());
        CHECK_FALSE(p.witness->transposed);
        CHECK(witness_verifies(a, b, *p.witness));
    }
}

TEST_CASE("zero-pattern mismatch reports the first offending entry") {
    SkewMatrix a = sk(3, {1, 0, 1});
    SkewMatrix b = sk(3, {1, 1, 1});
    SimilarityDecision d = find_diagonal_similarity(a, b);
    CHECK_FALSE(d.witness.has_value());
    REQUIRE(d.pattern_mismatch.has_value());
    CHECK(d.pattern_mismatch->first == 0);
    CHECK(d.pattern_mismatch->second == 2);
}

TEST_CASE("coupled pair defeats diagonal similarity up to transposition") {
    auto [a, b] = coupled_fixture();
    CHECK_FALSE(find_similarity_up_to_transpose(a, b).witness.has_value());
    CHECK_FALSE(pm1_similar_up_to_transpose(a, b));
}

TEST_CASE("diagonal similarities convert to reversal sequences") {
    SkewMatrix a = sk(3, {1, 2, 3});
    CHECK(similarity_to_reversal_sequence(a, SignDiagonal::identity(3))
              .steps.empty());

    SignDiagonal single = SignDiagonal::of(
        {Rational(1), Rational(-1), Rational(1)});
    ReversalCertificate cert = similarity_to_reversal_sequence(a, single);
    REQUIRE(cert.steps.size() == 2);
    CHECK(cert.steps[0] == VertexSubset::full(3));
    CHECK(cert.steps[1] == VertexSubset::full(3).without(1));

    CHECK_THROWS_AS(
        similarity_to_reversal_sequence(
            a, SignDiagonal::of({Rational(1), Rational(1), Rational(2)})),
        std::domain_error);

    std::mt19937_64 rng(107);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 2 + it % 7;
        SkewMatrix m = random_skew(rng, n, -4, 4);
        SignDiagonal d = random_sign_diagonal(rng, n);
        ReversalCertificate c = similarity_to_reversal_sequence(m, d);
        std::size_t flips = 0;
        for (const Rational& v : d.entries) flips += v == -1;
        CHECK(c.steps.size() == 2 * flips);
        CHECK(verify_certificate(m, c, conjugate_signs(m, d)).ok);
    }
}

TEST_CASE("rank condition detection") {
    CHECK_THROWS_AS(loewy_condition(sk(3, {1, 1, 1})), std::out_of_range);
    CHECK_THROWS_AS(
        loewy_condition(SkewMatrix::from_upper(
            6, std::vector<Int>(15, Int(1))), 5),
        ResourceLimitError);

    SkewMatrix zero = sk(4, {0, 0, 0, 0, 0, 0});
    LoewyResult z = loewy_condition(zero);
    CHECK_FALSE(z.holds);
    CHECK(z.failure == LoewyResult::Failure::Reducible);

    auto [a, b] = coupled_fixture();
    LoewyResult r = loewy_condition(a);
    CHECK_FALSE(r.holds);
    CHECK(r.failure == LoewyResult::Failure::LowRankPartition);
    CHECK(r.witness == VertexSubset::of({0, 1}));

    // complete sign patterns are generically fine
    SkewMatrix k4 = sk(4, {1, 1, 1, 1, -1, 1});
    CHECK(loewy_condition(k4).holds);
}

TEST_CASE("rank condition agrees with the brute-force oracle") {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<int> dist(-1, 1);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 4 + it % 2;
        std::vector<Int> upper(n * (n - 1) / 2);
        for (Int& v : upper) v = dist(rng);
        SkewMatrix a = SkewMatrix::from_upper(n, std::move(upper));
        CHECK(loewy_condition(a).holds == loewy_oracle(a));
    }
}

TEST_CASE("rank condition fails exactly at wide nontrivial HL-clans") {
    std::mt19937_64 rng(113);
    for (int it = 0; it < 150; ++it) {
        std::size_t n = 4 + it % 3;
        SkewMatrix a = random_skew(rng, n, -2, 2);
        bool wide_clan = false;
        for (VertexSubset x : enumerate_hl_clans(a).clans)
            if (x.size() >= 2 && x.complement(n).size() >= 2) {
                wide_clan = true;
                break;
            }
        CHECK(loewy_condition(a).holds == !wide_clan);
    }
}
