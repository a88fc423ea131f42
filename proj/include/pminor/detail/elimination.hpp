#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

namespace pminor::detail {

// Fraction-free (Bareiss) elimination. After step k the active entries are,
// up to sign, (k+1)x(k+1) minors of the (row-permuted) input, so division by
// the previous pivot is exact in any integral domain. `Wide` holds the
// two-product intermediate before the division narrows back to T; for the
// int64 fast path it is __int128, otherwise T itself.
template <class T, class Wide = T>
T bareiss_determinant(std::vector<T> m, std::size_t n) {
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pr = k;
        while (pr < n && m[pr * n + k] == T(0)) ++pr;
        if (pr == n) return T(0);
        if (pr != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(m[k * n + j], m[pr * n + j]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if constexpr (std::is_same_v<T, Wide>) {
                    m[i * n + j] = (m[i * n + j] * m[k * n + k] -
                                    m[i * n + k] * m[k * n + j]) /
                                   prev;
                } else {
                    Wide num = Wide(m[i * n + j]) * Wide(m[k * n + k]) -
                               Wide(m[i * n + k]) * Wide(m[k * n + j]);
                    m[i * n + j] = static_cast<T>(num / Wide(prev));
                }
            }
        }
        prev = m[k * n + k];
    }
    T det = m[n * n - 1];
    return negate ? T(-det) : det;
}

// Rank by fraction-free elimination with full pivoting; row/column swaps keep
// the eliminated entries equal to minors of the permuted input.
template <class T>
std::size_t eliminated_rank(std::vector<T> m, std::size_t rows,
                            std::size_t cols) {
    std::size_t r = 0;
    T prev(1);
    while (r < rows && r < cols) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (m[i * cols + j] != T(0)) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        if (pi != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[r * cols + j], m[pi * cols + j]);
        if (pj != r)
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(m[i * cols + r], m[i * cols + pj]);
        for (std::size_t i = r + 1; i < rows; ++i)
            for (std::size_t j = r + 1; j < cols; ++j)
                m[i * cols + j] = (m[i * cols + j] * m[r * cols + r] -
                                   m[i * cols + r] * m[r * cols + j]) /
                                  prev;
        prev = m[r * cols + r];
        ++r;
    }
    return r;
}

// Signed sum over perfect matchings: pf = sum_k (-1)^(k-1) a[v0,vk] pf(rest).
// Exponential; intended for small even n.
template <class T>
T pfaffian_expansion(const std::vector<T>& m, std::size_t n,
                     std::vector<std::size_t>& active) {
    if (active.empty()) return T(1);
    T acc(0);
    std::size_t v0 = active.front();
    std::vector<std::size_t> rest(active.begin() + 1, active.end());
    for (std::size_t k = 0; k < rest.size(); ++k) {
        const T& a = m[v0 * n + rest[k]];
        if (a == T(0)) continue;
        std::vector<std::size_t> sub;
        sub.reserve(rest.size() - 1);
        for (std::size_t t = 0; t < rest.size(); ++t)
            if (t != k) sub.push_back(rest[t]);
        T term = a * pfaffian_expansion(m, n, sub);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Pfaffian analogue of Bareiss elimination. Invariant: before processing the
// pivot pair (t, t+1), entry (k,l) of the work matrix equals the Pfaffian of
// the input restricted to {0..t-1, k, l}, and `prev` equals the Pfaffian of
// the prefix {0..t-1}. The three-term update is the Pfaffian Pluecker
// identity, whose right side carries a factor of `prev`, so the division is
// exact. A zero pivot row means the reduced matrix has Pfaffian 0.
template <class T, class Wide = T>
T pfaffian_elimination(std::vector<T> m, std::size_t n) {
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t t = 0; t + 2 < n; t += 2) {
        if (m[t * n + t + 1] == T(0)) {
            std::size_t j = t + 2;
            while (j < n && m[t * n + j] == T(0)) ++j;
            if (j == n) return T(0);
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m[(t + 1) * n + c], m[j * n + c]);
            for (std::size_t r = 0; r < n; ++r)
                std::swap(m[r * n + t + 1], m[r * n + j]);
            negate = !negate;
        }
        const T pivot = m[t * n + t + 1];
        for (std::size_t k = t + 2; k < n; ++k) {
            for (std::size_t l = k + 1; l < n; ++l) {
                T v;
                if constexpr (std::is_same_v<T, Wide>) {
                    v = (pivot * m[k * n + l] -
                         m[t * n + k] * m[(t + 1) * n + l] +
                         m[t * n + l] * m[(t + 1) * n + k]) /
                        prev;
                } else {
                    Wide num = Wide(pivot) * Wide(m[k * n + l]) -
                               Wide(m[t * n + k]) * Wide(m[(t + 1) * n + l]) +
                               Wide(m[t * n + l]) * Wide(m[(t + 1) * n + k]);
                    v = static_cast<T>(num / Wide(prev));
                }
                m[k * n + l] = v;
                m[l * n + k] = -v;
            }
        }
        prev = pivot;
    }
    T pf = m[(n - 2) * n + (n - 1)];
    return negate ? T(-pf) : pf;
}

}  // namespace pminor::detail
