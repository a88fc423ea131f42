#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pminor/subset.hpp"
#include "pminor/types.hpp"

namespace pminor {

/// Dense rectangular matrix with exact integer entries. Off-diagonal blocks
/// of a skew-symmetric matrix land here; no structural invariant beyond the
/// dimensions.
class GeneralMatrix {
public:
    GeneralMatrix() = default;
    GeneralMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    static GeneralMatrix from_entries(std::size_t rows, std::size_t cols,
                                      std::vector<Int> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }
    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const std::vector<Int>& entries() const { return e_; }

    GeneralMatrix transposed() const;
    GeneralMatrix negated() const;
    /// Block with row indices in `r` and column indices in `c`, both in
    /// ascending order. Out-of-range bits raise std::out_of_range.
    GeneralMatrix submatrix(VertexSubset r, VertexSubset c) const;

    bool operator==(const GeneralMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

/// n-by-n exact-integer skew-symmetric matrix. Skew-symmetry (hence zero
/// diagonal) is validated on every construction path.
class SkewMatrix {
public:
    /// Build from the strict upper triangle in row-major order
    /// (a12, a13, ..., a1n, a23, ...); needs exactly n(n-1)/2 values.
    static SkewMatrix from_upper(std::size_t n, std::vector<Int> upper);
    /// Build from all n*n entries, validating entries[i][j] == -entries[j][i].
    static SkewMatrix from_entries(std::size_t n, std::vector<Int> entries);

    std::size_t dim() const { return n_; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return e_[i * n_ + j];
    }
    const std::vector<Int>& entries() const { return e_; }

    /// Block A[r, c] as a general matrix.
    GeneralMatrix block(VertexSubset r, VertexSubset c) const;
    /// Principal submatrix A[x]; stays skew-symmetric.
    SkewMatrix principal(VertexSubset x) const;
    SkewMatrix negated() const;  // equals the transpose
    GeneralMatrix as_general() const;
    /// A + lambda*I as a general matrix.
    GeneralMatrix plus_scalar_identity(const Int& lambda) const;

    /// Canonical serialization of (n, strict upper triangle); two matrices
    /// are equal iff their keys are equal. Used as a hash key in searches.
    std::string key() const;

    bool operator==(const SkewMatrix&) const = default;

private:
    SkewMatrix(std::size_t n, std::vector<Int> e) : n_(n), e_(std::move(e)) {}
    std::size_t n_ = 0;
    std::vector<Int> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// The 0x0 determinant is 1. Throws std::invalid_argument on non-square input.
Int determinant(const GeneralMatrix& m);
Int determinant(const SkewMatrix& a);

/// Exact Pfaffian; pfaffian(A)^2 == determinant(A). Sign follows the
/// combinatorial expansion over perfect matchings with crossing signs.
/// Throws std::domain_error for odd dimension.
Int pfaffian(const SkewMatrix& a);

/// Exact rank over the rationals.
std::size_t rank(const GeneralMatrix& m);

}  // namespace pminor
