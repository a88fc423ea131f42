#include "pminor/minors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pminor/detail/elimination.hpp"

namespace pminor {

namespace {

constexpr std::size_t kAllOrdersCap = 20;

// Next bitmask with the same popcount (Gosper); caller stops past the range.
std::uint64_t next_same_size(std::uint64_t v) {
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

constexpr double kFastPathLimit = 1.0e18;

bool fits_fast(const SkewMatrix& a) {
    double bound = 1.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double v = a(i, j).convert_to<double>();
            s += v * v;
        }
        bound *= std::max(1.0, std::sqrt(s));
        if (!std::isfinite(bound) || bound >= kFastPathLimit) return false;
    }
    return true;
}

}  // namespace

MinorEvaluator::MinorEvaluator(const SkewMatrix& a)
    : a_(&a), n_(a.dim()), fast_(fits_fast(a)) {
    if (fast_) {
        flat_.resize(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                flat_[i * n_ + j] = a(i, j).convert_to<long long>();
    }
}

Int MinorEvaluator::minor(std::uint64_t mask) {
    std::size_t idx[64];
    std::size_t m = 0;
    for (std::uint64_t b = mask; b; b &= b - 1)
        idx[m++] = static_cast<std::size_t>(std::countr_zero(b));
    if (m == 0) return Int(1);
    if (m > 0 && idx[m - 1] >= n_)
        throw std::out_of_range("subset exceeds matrix dimension");
    if (fast_) {
        scratch_ll_.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                scratch_ll_[i * m + j] = flat_[idx[i] * n_ + idx[j]];
        return Int(detail::bareiss_determinant<long long, __int128>(
            scratch_ll_, m));
    }
    scratch_big_.assign(m * m, Int(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            scratch_big_[i * m + j] = (*a_)(idx[i], idx[j]);
    return detail::bareiss_determinant<Int>(scratch_big_, m);
}

Int principal_minor(const SkewMatrix& a, VertexSubset x) {
    if (!x.subset_of(VertexSubset::full(a.dim())))
        throw std::out_of_range("subset exceeds matrix dimension");
    if (x.empty()) return Int(1);
    return determinant(a.principal(x));
}

Int principal_minor(const GeneralMatrix& m, VertexSubset x) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("principal minor of a non-square matrix");
    return determinant(m.submatrix(x, x));
}

MinorFingerprint minors_of_order(const SkewMatrix& a, std::size_t k) {
    const std::size_t n = a.dim();
    if (k > n) throw std::out_of_range("minor order exceeds dimension");
    if (n > kAllOrdersCap)
        throw ResourceLimitError("fingerprints capped at n <= " +
                                 std::to_string(kAllOrdersCap));
    MinorFingerprint fp;
    fp.n = n;
    MinorEvaluator eval(a);
    if (k == 0) {
        fp.values[0] = Int(1);
        return fp;
    }
    const std::uint64_t last = VertexSubset::full(n).mask();
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (true) {
        fp.values[mask] = eval.minor(mask);
        std::uint64_t nxt = next_same_size(mask);
        if (nxt <= mask || nxt > last) break;
        mask = nxt;
    }
    return fp;
}

MinorFingerprint all_minors(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    if (n > kAllOrdersCap)
        throw ResourceLimitError("fingerprints capped at n <= " +
                                 std::to_string(kAllOrdersCap));
    MinorFingerprint fp;
    fp.n = n;
    MinorEvaluator eval(a);
    const std::uint64_t last = VertexSubset::full(n).mask();
    for (std::uint64_t mask = 0; mask <= last; ++mask)
        fp.values[mask] = eval.minor(mask);
    return fp;
}

FingerprintComparison fingerprints_equal(const SkewMatrix& a,
                                         const SkewMatrix& b,
                                         std::vector<std::size_t> orders) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("fingerprint comparison needs matching "
                                    "dimensions");
    const std::size_t n = a.dim();
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (std::size_t k : orders)
        if (k > n) throw std::out_of_range("minor order exceeds dimension");
    MinorEvaluator ea(a), eb(b);
    const std::uint64_t last = VertexSubset::full(n).mask();
    for (std::size_t k : orders) {
        if (k == 0) continue;  // both 1 by convention
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        while (true) {
            Int va = ea.minor(mask);
            Int vb = eb.minor(mask);
            if (va != vb)
                return {false, mask, std::move(va), std::move(vb)};
            std::uint64_t nxt = next_same_size(mask);
            if (nxt <= mask || nxt > last) break;
            mask = nxt;
        }
    }
    return {};
}

FingerprintComparison fingerprints_equal(const SkewMatrix& a,
                                         const SkewMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("fingerprint comparison needs matching "
                                    "dimensions");
    if (a.dim() > kAllOrdersCap)
        throw ResourceLimitError("fingerprints capped at n <= " +
                                 std::to_string(kAllOrdersCap));
    std::vector<std::size_t> orders(a.dim() + 1);
    for (std::size_t k = 0; k <= a.dim(); ++k) orders[k] = k;
    return fingerprints_equal(a, b, std::move(orders));
}

std::string fingerprint_key(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    if (n > kAllOrdersCap)
        throw ResourceLimitError("fingerprints capped at n <= " +
                                 std::to_string(kAllOrdersCap));
    MinorEvaluator eval(a);
    std::ostringstream os;
    const std::uint64_t last = VertexSubset::full(n).mask();
    for (std::uint64_t mask = 0; mask <= last; ++mask)
        os << eval.minor(mask) << ',';
    return os.str();
}

}  // namespace pminor
