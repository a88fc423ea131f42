#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pminor/certificate.hpp"
#include "pminor/matrix.hpp"

namespace pminor {

/// Nonsingular diagonal matrix as a vector of nonzero rationals.
struct SignDiagonal {
    std::vector<Rational> entries;

    static SignDiagonal identity(std::size_t n);
    /// Validated constructor; throws std::invalid_argument on a zero entry.
    static SignDiagonal of(std::vector<Rational> entries);

    std::size_t dim() const { return entries.size(); }
    bool sign_only() const;  // all entries are +1 or -1
};

/// D^-1 A D for a {-1,+1} diagonal; the result is again skew-symmetric.
/// Throws std::domain_error unless d.sign_only().
SkewMatrix conjugate_signs(const SkewMatrix& a, const SignDiagonal& d);

struct SimilarityWitness {
    SignDiagonal diagonal;
    bool transposed = false;  // true means B^T == D^-1 A D
};

/// Result of a similarity search. `witness` empty means no diagonal exists;
/// `pattern_mismatch` carries the first (i,j) where exactly one of the two
/// matrices is zero, when that is the reason.
struct SimilarityDecision {
    std::optional<SimilarityWitness> witness;
    std::optional<std::pair<std::size_t, std::size_t>> pattern_mismatch;
};

/// Search for a nonsingular rational diagonal D with B == D^-1 A D, by ratio
/// propagation over a spanning forest of the common nonzero pattern with
/// every non-tree edge checked; complete as well as sound. The returned
/// diagonal has entry 1 on the first vertex of each pattern component.
SimilarityDecision find_diagonal_similarity(const SkewMatrix& a,
                                            const SkewMatrix& b);

/// As above but also tries B^T == D^-1 A D (i.e. -B for skew input).
SimilarityDecision find_similarity_up_to_transpose(const SkewMatrix& a,
                                                   const SkewMatrix& b);

/// Exact check that a witness reproduces B from A.
bool witness_verifies(const SkewMatrix& a, const SkewMatrix& b,
                      const SimilarityWitness& w);

/// Convert a {-1,+1} diagonal similarity into a reversal certificate from A
/// to D^-1 A D: two steps (the full set, then the complement of one vertex)
/// per -1 entry of D, both always HL-clans. Throws std::domain_error for
/// entries other than +-1.
ReversalCertificate similarity_to_reversal_sequence(const SkewMatrix& a,
                                                    const SignDiagonal& d);

/// Irreducibility plus the rank condition: every bipartition X, Y of the
/// index set with |X| >= 2 and |Y| >= 2 must have rank A[X,Y] >= 2 or
/// rank A[Y,X] >= 2. Fails exactly when a matrix outside the diagonal
/// similarity regime exists, i.e. when a nontrivial HL-clan with both sides
/// of size >= 2 is present (or the pattern is disconnected).
struct LoewyResult {
    enum class Failure { None, Reducible, LowRankPartition };
    bool holds = false;
    Failure failure = Failure::None;
    VertexSubset witness;  // violating side / disconnected component
};

/// Requires 4 <= n <= cap; throws std::out_of_range / ResourceLimitError.
LoewyResult loewy_condition(const SkewMatrix& a, std::size_t cap = 20);

}  // namespace pminor
