#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pminor {

/// Subset of the index set {0,...,n-1} as a bitmask. All user-facing I/O is
/// 1-based; the library itself is 0-based throughout.
class VertexSubset {
public:
    constexpr VertexSubset() = default;
    explicit constexpr VertexSubset(std::uint64_t mask) : mask_(mask) {}

    static constexpr VertexSubset full(std::size_t n) {
        return VertexSubset(n >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
    }
    static VertexSubset of(std::initializer_list<std::size_t> indices) {
        std::uint64_t m = 0;
        for (std::size_t i : indices) m |= std::uint64_t{1} << i;
        return VertexSubset(m);
    }
    static constexpr VertexSubset single(std::size_t i) {
        return VertexSubset(std::uint64_t{1} << i);
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::size_t size() const {
        return static_cast<std::size_t>(std::popcount(mask_));
    }
    constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1; }
    constexpr bool subset_of(VertexSubset o) const {
        return (mask_ & ~o.mask_) == 0;
    }
    constexpr VertexSubset complement(std::size_t n) const {
        return VertexSubset(full(n).mask_ & ~mask_);
    }
    constexpr VertexSubset with(std::size_t i) const {
        return VertexSubset(mask_ | (std::uint64_t{1} << i));
    }
    constexpr VertexSubset without(std::size_t i) const {
        return VertexSubset(mask_ & ~(std::uint64_t{1} << i));
    }

    friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) {
        return VertexSubset(a.mask_ & b.mask_);
    }
    friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) {
        return VertexSubset(a.mask_ | b.mask_);
    }

    /// Member indices in ascending order, 0-based.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t m = mask_; m; m &= m - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    friend constexpr auto operator<=>(VertexSubset, VertexSubset) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Compress `s` (a subset of `within`) into the index space of `within`:
/// bit k of the result is set iff the k-th smallest member of `within` is
/// in `s`. Used when restricting to an induced principal submatrix.
inline VertexSubset reindex_into(VertexSubset s, VertexSubset within) {
    std::uint64_t out = 0;
    std::size_t pos = 0;
    for (std::uint64_t m = within.mask(); m; m &= m - 1, ++pos) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
        if (s.contains(i)) out |= std::uint64_t{1} << pos;
    }
    return VertexSubset(out);
}

}  // namespace pminor
