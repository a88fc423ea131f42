#include "pminor/matrix.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pminor/detail/elimination.hpp"

namespace pminor {

namespace {

// Product over rows of max(1, l2-norm), a bound on the magnitude of every
// minor. Bareiss intermediates are minors and the update multiplies two of
// them, so __int128 intermediates are safe whenever the bound stays below
// 2^62; a 1e18 threshold leaves margin for double rounding.
constexpr double kFastPathLimit = 1.0e18;

bool fits_int64_elimination(const std::vector<Int>& e, std::size_t rows,
                            std::size_t cols) {
    double bound = 1.0;
    for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            double v = e[i * cols + j].convert_to<double>();
            s += v * v;
        }
        bound *= std::max(1.0, std::sqrt(s));
        if (!std::isfinite(bound) || bound >= kFastPathLimit) return false;
    }
    return true;
}

std::vector<long long> narrow(const std::vector<Int>& e) {
    std::vector<long long> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        out[i] = e[i].convert_to<long long>();
    return out;
}

Int det_dispatch(const std::vector<Int>& e, std::size_t n) {
    if (fits_int64_elimination(e, n, n)) {
        long long d = detail::bareiss_determinant<long long, __int128>(
            narrow(e), n);
        return Int(d);
    }
    return detail::bareiss_determinant<Int>(e, n);
}

}  // namespace

GeneralMatrix GeneralMatrix::from_entries(std::size_t rows, std::size_t cols,
                                          std::vector<Int> entries) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match " +
                                    std::to_string(rows) + "x" +
                                    std::to_string(cols));
    GeneralMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.e_ = std::move(entries);
    return m;
}

GeneralMatrix GeneralMatrix::transposed() const {
    GeneralMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

GeneralMatrix GeneralMatrix::negated() const {
    GeneralMatrix t(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) t.e_[k] = -e_[k];
    return t;
}

GeneralMatrix GeneralMatrix::submatrix(VertexSubset r, VertexSubset c) const {
    if (!r.subset_of(VertexSubset::full(rows_)))
        throw std::out_of_range("row subset exceeds matrix dimension");
    if (!c.subset_of(VertexSubset::full(cols_)))
        throw std::out_of_range("column subset exceeds matrix dimension");
    auto ri = r.indices();
    auto ci = c.indices();
    GeneralMatrix out(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            out(i, j) = (*this)(ri[i], ci[j]);
    return out;
}

SkewMatrix SkewMatrix::from_upper(std::size_t n, std::vector<Int> upper) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (n > 64) throw std::invalid_argument("dimension above 64 unsupported");
    if (upper.size() != n * (n - 1) / 2)
        throw std::invalid_argument(
            "expected " + std::to_string(n * (n - 1) / 2) +
            " upper-triangle entries, got " + std::to_string(upper.size()));
    std::vector<Int> e(n * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            e[i * n + j] = upper[k];
            e[j * n + i] = -upper[k];
        }
    return SkewMatrix(n, std::move(e));
}

SkewMatrix SkewMatrix::from_entries(std::size_t n, std::vector<Int> entries) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (n > 64) throw std::invalid_argument("dimension above 64 unsupported");
    if (entries.size() != n * n)
        throw std::invalid_argument("expected " + std::to_string(n * n) +
                                    " entries, got " +
                                    std::to_string(entries.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (entries[i * n + j] != -entries[j * n + i])
                throw std::invalid_argument(
                    "skew-symmetry violated at (" + std::to_string(i + 1) +
                    "," + std::to_string(j + 1) + ")");
    return SkewMatrix(n, std::move(entries));
}

GeneralMatrix SkewMatrix::block(VertexSubset r, VertexSubset c) const {
    return as_general().submatrix(r, c);
}

SkewMatrix SkewMatrix::principal(VertexSubset x) const {
    if (!x.subset_of(VertexSubset::full(n_)))
        throw std::out_of_range("subset exceeds matrix dimension");
    auto idx = x.indices();
    const std::size_t m = idx.size();
    std::vector<Int> e(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            e[i * m + j] = (*this)(idx[i], idx[j]);
    return SkewMatrix(m, std::move(e));
}

SkewMatrix SkewMatrix::negated() const {
    std::vector<Int> e(e_.size());
    for (std::size_t k = 0; k < e_.size(); ++k) e[k] = -e_[k];
    return SkewMatrix(n_, std::move(e));
}

GeneralMatrix SkewMatrix::as_general() const {
    return GeneralMatrix::from_entries(n_, n_, e_);
}

GeneralMatrix SkewMatrix::plus_scalar_identity(const Int& lambda) const {
    GeneralMatrix m = as_general();
    for (std::size_t i = 0; i < n_; ++i) m(i, i) += lambda;
    return m;
}

std::string SkewMatrix::key() const {
    std::ostringstream os;
    os << n_ << '|';
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) os << e_[i * n_ + j] << ',';
    return os.str();
}

Int determinant(const GeneralMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    return det_dispatch(m.entries(), m.rows());
}

Int determinant(const SkewMatrix& a) {
    return det_dispatch(a.entries(), a.dim());
}

Int pfaffian(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    if (n % 2 != 0)
        throw std::domain_error("pfaffian requires even dimension");
    if (n <= 8) {
        std::vector<std::size_t> active(n);
        for (std::size_t i = 0; i < n; ++i) active[i] = i;
        return detail::pfaffian_expansion(a.entries(), n, active);
    }
    if (fits_int64_elimination(a.entries(), n, n)) {
        long long p = detail::pfaffian_elimination<long long, __int128>(
            narrow(a.entries()), n);
        return Int(p);
    }
    return detail::pfaffian_elimination<Int>(a.entries(), n);
}

std::size_t rank(const GeneralMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (fits_int64_elimination(m.entries(), m.rows(), m.cols()))
        return detail::eliminated_rank(narrow(m.entries()), m.rows(),
                                       m.cols());
    return detail::eliminated_rank(m.entries(), m.rows(), m.cols());
}

}  // namespace pminor
