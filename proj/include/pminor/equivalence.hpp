#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pminor/certificate.hpp"
#include "pminor/matrix.hpp"
#include "pminor/minors.hpp"
#include "pminor/similarity.hpp"

namespace pminor {

/// Entries in {-1,0,1} and no zero off-diagonal entry in the first row
/// (the first vertex is adjacent to every other in the underlying graph).
bool is_apex_class(const SkewMatrix& a);

/// Conjugate by D = diag(1, a_12, ..., a_1n) so the first row becomes
/// (0, 1, ..., 1). Throws std::domain_error outside the apex class.
std::pair<SkewMatrix, SignDiagonal> normalize_first_row(const SkewMatrix& a);

struct SearchBudget {
    std::uint64_t max_states = 1'000'000;
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

/// NotFound is definitive: the whole reversal orbit of A was enumerated.
/// BudgetExhausted is not a mathematical conclusion.
struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<ReversalCertificate> certificate;
    std::uint64_t visited = 0;
    std::size_t max_depth = 0;
};

/// Breadth-first search over the orbit of A under HL-clan reversals, hashing
/// exact matrix contents; returns a shortest certificate when B is reached.
SearchResult find_reversal_certificate(const SkewMatrix& a,
                                       const SkewMatrix& b,
                                       SearchBudget budget = {});

/// Step-by-step certificate check: every step must be an HL-clan of the
/// running matrix and the final matrix must equal B exactly.
struct CertificateCheck {
    enum class Why { None, DimensionMismatch, NotAClan, Endpoint };
    bool ok = false;
    std::size_t failing_step = 0;  // step index; steps.size() for Endpoint
    Why reason = Why::None;
};
CertificateCheck verify_certificate(const SkewMatrix& a,
                                    const ReversalCertificate& cert,
                                    const SkewMatrix& b);

struct MinorWitness {
    VertexSubset subset;
    Int lhs, rhs;
};

/// Decision outcome. Undecided distinguishes a search-budget cap from the
/// (loudly reported) case where the full orbit was explored without reaching
/// the target, which would contradict the order-4 decision property.
struct EquivVerdict {
    enum class Status { Equivalent, NotEquivalent, Undecided };
    Status status = Status::Undecided;
    std::optional<ReversalCertificate> certificate;
    std::optional<MinorWitness> witness;
    std::string diagnostics;
};

/// Decision pipeline for the apex class: compare order-2 minors (underlying
/// graph guard), then order-4 minors; on equality assemble a certificate
/// from the two first-row normalizations (as reversal sequences) and a
/// breadth-first clan-reversal search between the normalized matrices.
/// Throws std::domain_error when either matrix is outside the class.
EquivVerdict decide_equivalence(const SkewMatrix& a, const SkewMatrix& b,
                                SearchBudget budget = {});

enum class EntrySet { PlusMinusOne, SignOrZero };

struct ScanOptions {
    std::size_t n = 4;
    EntrySet entries = EntrySet::PlusMinusOne;
    bool exhaustive = true;
    std::uint64_t samples = 0;     // randomized mode sample count
    std::uint64_t seed = 1;        // randomized mode RNG seed
    SearchBudget budget = {};      // per-orbit search budget
};

/// Group skew matrices over the chosen entry set by their all-orders
/// principal-minor fingerprint, then check that every fingerprint group is a
/// single reversal orbit. Pairs with equal fingerprints in provably distinct
/// orbits are counterexample candidates and are reported, never suppressed.
struct ScanReport {
    std::size_t n = 0;
    EntrySet entries = EntrySet::PlusMinusOne;
    bool exhaustive = true;
    std::uint64_t total = 0;               // distinct matrices examined
    std::uint64_t fingerprint_groups = 0;
    std::uint64_t orbits = 0;
    std::uint64_t largest_group = 0;
    std::uint64_t largest_orbit = 0;
    std::size_t max_certificate_length = 0;  // deepest BFS level seen
    bool complete = true;                    // no resource cap was hit
    std::vector<std::pair<SkewMatrix, SkewMatrix>> counterexamples;
    std::map<std::uint64_t, std::uint64_t> group_size_histogram;
    std::map<std::uint64_t, std::uint64_t> orbit_size_histogram;
};

/// Exhaustive mode requires n <= 6; randomized mode draws `samples` matrices.
ScanReport fingerprint_orbit_scan(const ScanOptions& options);

}  // namespace pminor
