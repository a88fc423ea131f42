#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pminor/matrix.hpp"

namespace pminor {

/// Principal-minor values keyed by subset bitmask, ascending.
struct MinorFingerprint {
    std::size_t n = 0;
    std::map<std::uint64_t, Int> values;
};

/// Outcome of a fingerprint comparison. On inequality, `witness_mask` is the
/// first differing subset (smallest order, then ascending bitmask) and
/// lhs/rhs hold the two minor values.
struct FingerprintComparison {
    bool equal = true;
    std::uint64_t witness_mask = 0;
    Int lhs, rhs;
};

/// Evaluates principal minors of one matrix, reusing scratch space. Narrows
/// to 64-bit arithmetic when a Hadamard bound shows every minor computation
/// stays well inside the int64 range; results are identical either way.
class MinorEvaluator {
public:
    explicit MinorEvaluator(const SkewMatrix& a);
    Int minor(std::uint64_t subset_mask);
    std::size_t dim() const { return n_; }

private:
    const SkewMatrix* a_;
    std::size_t n_;
    bool fast_;
    std::vector<long long> flat_;
    std::vector<long long> scratch_ll_;
    std::vector<Int> scratch_big_;
};

/// det(A[x]); the empty subset yields 1.
Int principal_minor(const SkewMatrix& a, VertexSubset x);
Int principal_minor(const GeneralMatrix& m, VertexSubset x);

/// All order-k principal minors, ascending bitmask order.
MinorFingerprint minors_of_order(const SkewMatrix& a, std::size_t k);

/// All principal minors of all orders; guarded at n <= 20.
MinorFingerprint all_minors(const SkewMatrix& a);

/// Compare the given orders (ascending), short-circuiting on the first
/// difference. Dimension mismatch throws std::invalid_argument.
FingerprintComparison fingerprints_equal(const SkewMatrix& a,
                                         const SkewMatrix& b,
                                         std::vector<std::size_t> orders);
/// All-orders comparison; guarded at n <= 20.
FingerprintComparison fingerprints_equal(const SkewMatrix& a,
                                         const SkewMatrix& b);

/// Canonical serialization of the all-orders fingerprint, usable as an exact
/// grouping key. Guarded at n <= 20.
std::string fingerprint_key(const SkewMatrix& a);

}  // namespace pminor
