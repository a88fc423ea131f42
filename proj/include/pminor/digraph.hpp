#pragma once

#include <cstdint>
#include <vector>

#include "pminor/matrix.hpp"

namespace pminor {

/// Orientation of a simple graph on {0,...,n-1}, stored as the skew map
/// sigma : V x V -> {-1, 0, 1} with sigma(i,j) == 1 iff (i,j) is an arc.
class Orientation {
public:
    static Orientation from_sigma(std::size_t n, std::vector<std::int8_t> sig);
    static Orientation from_arcs(
        std::size_t n,
        const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

    std::size_t dim() const { return n_; }
    int arc(std::size_t i, std::size_t j) const { return sig_[i * n_ + j]; }
    bool adjacent(std::size_t i, std::size_t j) const {
        return sig_[i * n_ + j] != 0;
    }

    bool operator==(const Orientation&) const = default;

private:
    Orientation(std::size_t n, std::vector<std::int8_t> s)
        : n_(n), sig_(std::move(s)) {}
    std::size_t n_ = 0;
    std::vector<std::int8_t> sig_;
};

/// Mutually inverse bijections between orientations and skew-adjacency
/// matrices. from_skew rejects entries outside {-1,0,1}.
Orientation from_skew(const SkewMatrix& a);
SkewMatrix to_skew(const Orientation& g);

/// All arcs reversed.
Orientation converse(const Orientation& g);

/// Clan test: every outside vertex relates uniformly to all of X.
bool is_clan(const Orientation& g, VertexSubset x);

/// Reverse the arcs with both ends in X; corresponds entrywise to the matrix
/// transform on the skew-adjacency side.
Orientation invert(const Orientation& g, VertexSubset x);

/// Induced subdigraph on X, vertices relabeled ascending.
Orientation induced(const Orientation& g, VertexSubset x);

/// Isomorphism / hemimorphism by brute force over all vertex bijections.
/// Guarded at n <= 8.
bool isomorphic(const Orientation& a, const Orientation& b);
bool hemimorphic(const Orientation& a, const Orientation& b);

/// Shape of a 3-vertex induced subgraph and, when it has at least two edges,
/// which of the two hemimorphy classes the orientation falls in.
enum class TripleShape : std::uint8_t { Empty, SingleEdge, Path, Triangle };
enum class TripleKind : std::uint8_t {
    None,          // at most one edge
    SourceSink,    // path oriented out of or into its centre
    DirectedPath,  // path traversed end to end
    Cyclic,        // 3-cycle
    Transitive,    // acyclic triangle
};
struct TripleClass {
    TripleShape shape = TripleShape::Empty;
    TripleKind kind = TripleKind::None;
    bool operator==(const TripleClass&) const = default;
};
const char* to_string(TripleShape s);
const char* to_string(TripleKind k);

TripleClass triple_class(const Orientation& g, VertexSubset t);

/// Compare the class of every 3-subset of two orientations of the same
/// underlying graph. Different underlying graphs throw
/// std::invalid_argument.
struct TripleScanResult {
    bool all_equal = true;
    VertexSubset witness;  // valid when !all_equal
    TripleClass lhs, rhs;
};
TripleScanResult triples_hemimorphic(const Orientation& g1,
                                     const Orientation& g2);

/// Determinant of the 4x4 skew-adjacency on {apex} + t, where the apex must
/// be oriented toward all three vertices of t. Within a fixed shape of t the
/// value separates the two hemimorphy classes:
///   Empty -> 0, SingleEdge -> 1, Path -> {0 (source/sink), 4 (directed)},
///   Triangle -> {9 (cyclic), 1 (transitive)}.
Int apex_triple_determinant(const Orientation& g, std::size_t apex,
                            VertexSubset t);

}  // namespace pminor
