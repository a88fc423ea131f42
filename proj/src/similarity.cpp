#include "pminor/similarity.hpp"

#include <stdexcept>

#include "pminor/hlclan.hpp"

namespace pminor {

SignDiagonal SignDiagonal::identity(std::size_t n) {
    return SignDiagonal{std::vector<Rational>(n, Rational(1))};
}

SignDiagonal SignDiagonal::of(std::vector<Rational> entries) {
    for (const Rational& d : entries)
        if (d == 0)
            throw std::invalid_argument("diagonal entries must be nonzero");
    return SignDiagonal{std::move(entries)};
}

bool SignDiagonal::sign_only() const {
    for (const Rational& d : entries)
        if (d != 1 && d != -1) return false;
    return true;
}

SkewMatrix conjugate_signs(const SkewMatrix& a, const SignDiagonal& d) {
    if (d.dim() != a.dim())
        throw std::invalid_argument("diagonal dimension mismatch");
    if (!d.sign_only())
        throw std::domain_error("sign conjugation needs a {-1,+1} diagonal");
    const std::size_t n = a.dim();
    std::vector<Int> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        int di = d.entries[i] == 1 ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            int dj = d.entries[j] == 1 ? 1 : -1;
            e[i * n + j] = a(i, j) * (di * dj);
        }
    }
    return SkewMatrix::from_entries(n, std::move(e));
}

namespace {

SimilarityDecision propagate_ratios(const SkewMatrix& a, const SkewMatrix& b) {
    const std::size_t n = a.dim();
    // Zero patterns must coincide; the first mismatch is the witness.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((a(i, j) == 0) != (b(i, j) == 0))
                return {std::nullopt, std::make_pair(i, j)};

    // b_ij = a_ij d_j / d_i fixes every ratio along a spanning forest of the
    // pattern graph; anchor each component at 1 (any per-component scale
    // works) and check all remaining edges.
    std::vector<Rational> d(n, Rational(0));
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (a(i, j) == 0 || d[j] != 0) continue;
                d[j] = d[i] * Rational(b(i, j)) / Rational(a(i, j));
                stack.push_back(j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != 0 &&
                Rational(b(i, j)) * d[i] != Rational(a(i, j)) * d[j])
                return {std::nullopt, std::nullopt};
    return {SimilarityWitness{SignDiagonal{std::move(d)}, false},
            std::nullopt};
}

}  // namespace

SimilarityDecision find_diagonal_similarity(const SkewMatrix& a,
                                            const SkewMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("similarity needs matching dimensions");
    return propagate_ratios(a, b);
}

SimilarityDecision find_similarity_up_to_transpose(const SkewMatrix& a,
                                                   const SkewMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("similarity needs matching dimensions");
    SimilarityDecision plain = propagate_ratios(a, b);
    if (plain.witness) return plain;
    SimilarityDecision flipped = propagate_ratios(a, b.negated());
    if (flipped.witness) {
        flipped.witness->transposed = true;
        return flipped;
    }
    return plain;  // keep the first attempt's mismatch diagnostics
}

bool witness_verifies(const SkewMatrix& a, const SkewMatrix& b,
                      const SimilarityWitness& w) {
    if (a.dim() != b.dim() || w.diagonal.dim() != a.dim()) return false;
    const std::size_t n = a.dim();
    const auto& d = w.diagonal.entries;
    for (const Rational& v : d)
        if (v == 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs = w.transposed ? Rational(b(j, i)) : Rational(b(i, j));
            if (lhs * d[i] != Rational(a(i, j)) * d[j]) return false;
        }
    return true;
}

ReversalCertificate similarity_to_reversal_sequence(const SkewMatrix& a,
                                                    const SignDiagonal& d) {
    const std::size_t n = a.dim();
    if (d.dim() != n)
        throw std::invalid_argument("diagonal dimension mismatch");
    if (!d.sign_only())
        throw std::domain_error(
            "reversal sequence construction needs a {-1,+1} diagonal");
    ReversalCertificate cert;
    cert.n = n;
    // Negating row/column j equals Inv([n], .) followed by Inv([n] - {j}, .);
    // both subsets are HL-clans of every matrix.
    for (std::size_t j = 0; j < n; ++j) {
        if (d.entries[j] != -1) continue;
        cert.steps.push_back(VertexSubset::full(n));
        cert.steps.push_back(VertexSubset::full(n).without(j));
    }
    return cert;
}

namespace {

bool pattern_connected(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j] && a(i, j) != 0) {
                seen[j] = true;
                ++count;
                stack.push_back(j);
            }
    }
    return count == n;
}

VertexSubset pattern_component(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    VertexSubset comp = VertexSubset::single(0);
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!comp.contains(j) && a(i, j) != 0) {
                comp = comp.with(j);
                stack.push_back(j);
            }
    }
    return comp;
}

}  // namespace

LoewyResult loewy_condition(const SkewMatrix& a, std::size_t cap) {
    const std::size_t n = a.dim();
    if (n < 4)
        throw std::out_of_range("the rank condition is defined for n >= 4");
    if (n > cap)
        throw ResourceLimitError("bipartition enumeration capped at n <= " +
                                 std::to_string(cap));
    // For skew input the pattern digraph is symmetric, so irreducibility
    // reduces to connectivity of the pattern graph.
    if (!pattern_connected(a))
        return {false, LoewyResult::Failure::Reducible, pattern_component(a)};
    // Enumerate bipartitions once by fixing vertex 0 on the X side.
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    for (std::uint64_t rest = 0; rest < half; ++rest) {
        VertexSubset x(rest << 1 | 1);
        std::size_t sz = x.size();
        if (sz < 2 || sz > n - 2) continue;
        VertexSubset y = x.complement(n);
        if (rank(a.block(x, y)) <= 1 && rank(a.block(y, x)) <= 1)
            return {false, LoewyResult::Failure::LowRankPartition, x};
    }
    return {true, LoewyResult::Failure::None, VertexSubset()};
}

}  // namespace pminor
