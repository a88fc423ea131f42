#pragma once

#include <random>
#include <vector>

#include "pminor/detail/elimination.hpp"
#include "pminor/digraph.hpp"
#include "pminor/hlclan.hpp"
#include "pminor/matrix.hpp"
#include "pminor/similarity.hpp"

namespace testutil {

using pminor::GeneralMatrix;
using pminor::Int;
using pminor::Orientation;
using pminor::Rational;
using pminor::SignDiagonal;
using pminor::SkewMatrix;
using pminor::VertexSubset;

inline SkewMatrix sk(std::size_t n, std::initializer_list<long long> upper) {
    std::vector<Int> u;
    u.reserve(upper.size());
    for (long long v : upper) u.emplace_back(v);
    return SkewMatrix::from_upper(n, std::move(u));
}

inline SkewMatrix random_skew(std::mt19937_64& rng, std::size_t n,
                              long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    std::vector<Int> upper(n * (n - 1) / 2);
    for (Int& v : upper) v = dist(rng);
    return SkewMatrix::from_upper(n, std::move(upper));
}

inline SignDiagonal random_sign_diagonal(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Rational> d(n);
    for (Rational& v : d) v = coin(rng) ? 1 : -1;
    return SignDiagonal::of(std::move(d));
}

inline std::vector<Rational> random_rational_diagonal(std::mt19937_64& rng,
                                                      std::size_t n) {
    std::uniform_int_distribution<int> num(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Rational> d(n);
    for (Rational& v : d) {
        v = Rational(num(rng), num(rng));
        if (coin(rng)) v = -v;
    }
    return d;
}

// Laplace expansion along the first row; the independent determinant oracle.
inline Int cofactor_det(const std::vector<Int>& m, std::size_t n) {
    if (n == 0) return Int(1);
    if (n == 1) return m[0];
    Int acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 0) continue;
        std::vector<Int> sub;
        sub.reserve((n - 1) * (n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub.push_back(m[i * n + k]);
        Int term = m[j] * cofactor_det(sub, n - 1);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline Int cofactor_det(const GeneralMatrix& m) {
    return cofactor_det(m.entries(), m.rows());
}

inline Int cofactor_det(const SkewMatrix& a) {
    return cofactor_det(a.entries(), a.dim());
}

// Exhaustive {-1,+1}-diagonal similarity oracle; complete for matrices whose
// nonzero pattern is connected and entrywise sign-compatible.
inline bool pm1_similar_up_to_transpose(const SkewMatrix& a,
                                        const SkewMatrix& b) {
    const std::size_t n = a.dim();
    const SkewMatrix bt = b.negated();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Rational> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1 ? -1 : 1;
        SkewMatrix conj = pminor::conjugate_signs(a, SignDiagonal{d});
        if (conj == b || conj == bt) return true;
    }
    return false;
}

// c * D^-1 A D with c = prod_i numerator(d_i) * denominator(d_i), which keeps
// the entries integral; a uniform nonzero scale preserves every block rank,
// hence the HL-clan set.
inline GeneralMatrix scaled_conjugate(const SkewMatrix& a,
                                      const std::vector<Rational>& d) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const std::size_t n = a.dim();
    Rational c(1);
    for (const Rational& v : d) c *= Rational(numerator(v) * denominator(v));
    std::vector<Int> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = Rational(a(i, j)) * d[j] / d[i] * c;
            if (denominator(v) != 1)
                throw std::logic_error("scaled conjugate not integral");
            e[i * n + j] = numerator(v);
        }
    return GeneralMatrix::from_entries(n, n, std::move(e));
}

// D^-1 A D over the rationals, for checking minor preservation directly.
inline std::vector<Rational> rational_conjugate(const SkewMatrix& a,
                                                const std::vector<Rational>& d) {
    const std::size_t n = a.dim();
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = Rational(a(i, j)) * d[j] / d[i];
    return e;
}

inline Rational rational_minor(const std::vector<Rational>& m, std::size_t n,
                               VertexSubset x) {
    auto idx = x.indices();
    const std::size_t k = idx.size();
    std::vector<Rational> sub(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sub[i * k + j] = m[idx[i] * n + idx[j]];
    return pminor::detail::bareiss_determinant<Rational>(sub, k);
}

// Depth-limited search without memory, as an independent shortest-path
// oracle for tiny instances.
inline bool reversal_reachable_within(const SkewMatrix& cur,
                                      const SkewMatrix& target,
                                      std::size_t depth) {
    if (cur == target) return true;
    if (depth == 0) return false;
    auto clans = pminor::enumerate_hl_clans(cur);
    for (VertexSubset x : clans.clans) {
        if (x.size() < 2) continue;
        if (reversal_reachable_within(pminor::invert(cur, x), target,
                                      depth - 1))
            return true;
    }
    return false;
}

// Orientation on four vertices with vertex 0 dominating {1,2,3} and the
// given inner entries (row-major upper order a12, a13, a23 toward 1-based
// vertices 2,3,4).
inline Orientation apex_orientation(int a12, int a13, int a23) {
    return pminor::from_skew(sk(4, {1, 1, 1, a12, a13, a23}));
}

}  // namespace testutil
