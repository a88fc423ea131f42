#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pminor/matrix.hpp"

namespace pminor {

/// All HL-clans of one matrix: the subsets X whose off-diagonal blocks
/// A[X, ~X] and A[~X, X] both have rank at most 1. The empty set, the full
/// set and all singletons always qualify.
struct HlClanList {
    std::size_t n = 0;
    std::vector<VertexSubset> clans;  // ascending bitmask order

    static bool trivial(VertexSubset x, std::size_t n) {
        return x.empty() || x.size() == 1 || x == VertexSubset::full(n);
    }
    bool contains(VertexSubset x) const;
};

/// HL-clan test. For skew input the two block conditions are equivalent, so
/// one block is scanned (the other is asserted in debug builds); the general
/// overload checks both.
bool is_hl_clan(const SkewMatrix& a, VertexSubset x);
bool is_hl_clan(const GeneralMatrix& m, VertexSubset x);

/// Brute-force enumeration over all 2^n subsets, ascending.
/// Throws ResourceLimitError when n exceeds `cap`.
HlClanList enumerate_hl_clans(const SkewMatrix& a, std::size_t cap = 16);

/// Inv(X, A): negate the entries with both indices in X. Defined for every
/// subset; principal minors are preserved exactly when X is an HL-clan.
SkewMatrix invert(const SkewMatrix& a, VertexSubset x);

/// As above but throws std::domain_error when X is not an HL-clan of A.
SkewMatrix invert_checked(const SkewMatrix& a, VertexSubset x);

/// Builds the pair (A, B) where A has diagonal blocks a11, a22 coupled by the
/// rank-one blocks A[top, bottom] = -beta alpha^T, A[bottom, top] =
/// alpha beta^T, and B flips the sign of the a11 block (B == Inv(top, A)).
/// The top block is an HL-clan of both matrices by construction, so the pair
/// has equal principal minors of all orders.
std::pair<SkewMatrix, SkewMatrix> rank_one_coupled_pair(
    const SkewMatrix& a11, const SkewMatrix& a22, std::span<const Int> alpha,
    std::span<const Int> beta);

}  // namespace pminor
