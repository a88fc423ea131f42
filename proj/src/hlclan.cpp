#include "pminor/hlclan.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pminor {

namespace {

// rank <= 1 test via a pivot-row cross-product scan: with pivot (i0, j0),
// rank(M) <= 1 iff M[i][j] * M[i0][j0] == M[i][j0] * M[i0][j] for all i, j.
// Cheaper than elimination and short-circuits early.
template <class EntryAt>
bool block_rank_le1(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols, EntryAt at) {
    std::size_t pi = rows.size(), pj = 0;
    for (std::size_t i = 0; i < rows.size() && pi == rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (at(rows[i], cols[j]) != 0) {
                pi = i;
                pj = j;
                break;
            }
    if (pi == rows.size()) return true;  // zero block
    const Int& pivot = at(rows[pi], cols[pj]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pi) continue;
        const Int& left = at(rows[i], cols[pj]);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j == pj) continue;
            if (at(rows[i], cols[j]) * pivot != left * at(rows[pi], cols[j]))
                return false;
        }
    }
    return true;
}

}  // namespace

bool HlClanList::contains(VertexSubset x) const {
    return std::binary_search(clans.begin(), clans.end(), x);
}

bool is_hl_clan(const SkewMatrix& a, VertexSubset x) {
    const std::size_t n = a.dim();
    if (!x.subset_of(VertexSubset::full(n)))
        throw std::out_of_range("subset exceeds matrix dimension");
    auto rows = x.indices();
    auto cols = x.complement(n).indices();
    auto at = [&](std::size_t i, std::size_t j) -> const Int& {
        return a(i, j);
    };
    bool ok = block_rank_le1(rows, cols, at);
    // For skew input A[~X, X] = -A[X, ~X]^T, so one block decides.
    assert(ok == block_rank_le1(cols, rows, at));
    return ok;
}

bool is_hl_clan(const GeneralMatrix& m, VertexSubset x) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("HL-clan test needs a square matrix");
    const std::size_t n = m.rows();
    if (!x.subset_of(VertexSubset::full(n)))
        throw std::out_of_range("subset exceeds matrix dimension");
    auto rows = x.indices();
    auto cols = x.complement(n).indices();
    auto at = [&](std::size_t i, std::size_t j) -> const Int& {
        return m(i, j);
    };
    return block_rank_le1(rows, cols, at) && block_rank_le1(cols, rows, at);
}

HlClanList enumerate_hl_clans(const SkewMatrix& a, std::size_t cap) {
    const std::size_t n = a.dim();
    if (n > cap)
        throw ResourceLimitError("HL-clan enumeration capped at n <= " +
                                 std::to_string(cap));
    HlClanList out;
    out.n = n;
    const std::uint64_t last = VertexSubset::full(n).mask();
    for (std::uint64_t mask = 0; mask <= last; ++mask) {
        VertexSubset x(mask);
        if (is_hl_clan(a, x)) out.clans.push_back(x);
        if (mask == last) break;
    }
    return out;
}

SkewMatrix invert(const SkewMatrix& a, VertexSubset x) {
    const std::size_t n = a.dim();
    if (!x.subset_of(VertexSubset::full(n)))
        throw std::out_of_range("subset exceeds matrix dimension");
    std::vector<Int> e = a.entries();
    auto idx = x.indices();
    for (std::size_t i : idx)
        for (std::size_t j : idx) e[i * n + j] = -e[i * n + j];
    return SkewMatrix::from_entries(n, std::move(e));
}

SkewMatrix invert_checked(const SkewMatrix& a, VertexSubset x) {
    if (!is_hl_clan(a, x))
        throw std::domain_error("subset is not an HL-clan of the matrix");
    return invert(a, x);
}

std::pair<SkewMatrix, SkewMatrix> rank_one_coupled_pair(
    const SkewMatrix& a11, const SkewMatrix& a22, std::span<const Int> alpha,
    std::span<const Int> beta) {
    const std::size_t p = a11.dim(), q = a22.dim();
    if (alpha.size() != q || beta.size() != p)
        throw std::invalid_argument(
            "coupling vectors must match the block dimensions");
    const std::size_t n = p + q;
    std::vector<Int> e(n * n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) e[i * n + j] = a11(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            e[(p + i) * n + (p + j)] = a22(i, j);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            e[i * n + (p + j)] = -beta[i] * alpha[j];
            e[(p + j) * n + i] = alpha[j] * beta[i];
        }
    SkewMatrix a = SkewMatrix::from_entries(n, std::move(e));
    VertexSubset top((std::uint64_t{1} << p) - 1);
    return {a, invert(a, top)};
}

}  // namespace pminor
