#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pminor/certificate.hpp"
#include "pminor/matrix.hpp"

namespace pminor {

/// Error in the matrix text format, carrying the 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column,
               const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Matrix text format: first token n, then n*n whitespace-separated integers
/// in row-major order. Skew-symmetry is validated on load; a violation is a
/// parse error naming the offending 1-based (i, j).
SkewMatrix read_skew_matrix(std::istream& in,
                            const std::string& source = "<input>");
SkewMatrix read_skew_matrix_file(const std::filesystem::path& path);
void write_skew_matrix(std::ostream& out, const SkewMatrix& a);
std::string to_text(const SkewMatrix& a);

/// Subsets in JSON are ascending 1-based index arrays.
nlohmann::json subset_to_json(VertexSubset x);
VertexSubset subset_from_json(const nlohmann::json& j, std::size_t n);

/// Certificate JSON: { "steps": [[i, ...], ...] } with 1-based indices.
nlohmann::json certificate_to_json(const ReversalCertificate& cert);
ReversalCertificate certificate_from_json(const nlohmann::json& j,
                                          std::size_t n);

/// Parse a 1-based comma-separated index list such as "1,3,4".
VertexSubset subset_from_csv(const std::string& csv, std::size_t n);

}  // namespace pminor
