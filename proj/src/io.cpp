#include "pminor/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pminor {

namespace {

std::string position_message(const std::string& source, std::size_t line,
                             std::size_t column, const std::string& what) {
    std::ostringstream os;
    os << source << ':' << line << ':' << column << ": " << what;
    return os.str();
}

struct Token {
    std::string text;
    std::size_t line = 0, column = 0;
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tokens.push_back(
                {line.substr(start, i - start), lineno, start + 1});
        }
    }
    return tokens;
}

bool looks_like_integer(const std::string& s) {
    std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       std::size_t column, const std::string& what)
    : std::runtime_error(position_message(source, line, column, what)),
      line_(line),
      column_(column) {}

SkewMatrix read_skew_matrix(std::istream& in, const std::string& source) {
    std::vector<Token> tokens = tokenize(in);
    if (tokens.empty())
        throw ParseError(source, 1, 1, "empty input, expected dimension");
    const Token& head = tokens.front();
    if (!looks_like_integer(head.text) || head.text[0] == '-')
        throw ParseError(source, head.line, head.column,
                         "expected a positive dimension, got '" + head.text +
                             "'");
    unsigned long n = 0;
    try {
        n = std::stoul(head.text);
    } catch (const std::exception&) {
        throw ParseError(source, head.line, head.column,
                         "dimension out of range: '" + head.text + "'");
    }
    if (n < 1 || n > 64)
        throw ParseError(source, head.line, head.column,
                         "dimension must be between 1 and 64");
    if (tokens.size() != 1 + n * n) {
        const Token& at = tokens.back();
        throw ParseError(source, at.line, at.column,
                         "expected " + std::to_string(n * n) +
                             " entries after the dimension, got " +
                             std::to_string(tokens.size() - 1));
    }
    std::vector<Int> entries(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const Token& t = tokens[k + 1];
        if (!looks_like_integer(t.text))
            throw ParseError(source, t.line, t.column,
                             "expected an integer, got '" + t.text + "'");
        entries[k] = Int(t.text);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (entries[i * n + j] != -entries[j * n + i]) {
                const Token& t = tokens[1 + i * n + j];
                throw ParseError(
                    source, t.line, t.column,
                    "skew-symmetry violated at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + "): entry " +
                        entries[i * n + j].str() + " vs " +
                        entries[j * n + i].str());
            }
    return SkewMatrix::from_entries(n, std::move(entries));
}

SkewMatrix read_skew_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    return read_skew_matrix(in, path.string());
}

void write_skew_matrix(std::ostream& out, const SkewMatrix& a) {
    const std::size_t n = a.dim();
    out << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << a(i, j);
        }
        out << '\n';
    }
}

std::string to_text(const SkewMatrix& a) {
    std::ostringstream os;
    write_skew_matrix(os, a);
    return os.str();
}

nlohmann::json subset_to_json(VertexSubset x) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i : x.indices()) arr.push_back(i + 1);
    return arr;
}

VertexSubset subset_from_json(const nlohmann::json& j, std::size_t n) {
    if (!j.is_array())
        throw std::invalid_argument("subset must be a JSON array");
    VertexSubset x;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("subset members must be integers");
        long long i = v.get<long long>();
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw std::invalid_argument(
                "subset member " + std::to_string(i) +
                " outside 1.." + std::to_string(n));
        x = x.with(static_cast<std::size_t>(i - 1));
    }
    return x;
}

nlohmann::json certificate_to_json(const ReversalCertificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (VertexSubset s : cert.steps) steps.push_back(subset_to_json(s));
    return nlohmann::json{{"steps", steps}};
}

ReversalCertificate certificate_from_json(const nlohmann::json& j,
                                          std::size_t n) {
    if (!j.contains("steps") || !j["steps"].is_array())
        throw std::invalid_argument("certificate needs a 'steps' array");
    ReversalCertificate cert;
    cert.n = n;
    for (const auto& s : j["steps"])
        cert.steps.push_back(subset_from_json(s, n));
    return cert;
}

VertexSubset subset_from_csv(const std::string& csv, std::size_t n) {
    VertexSubset x;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("empty index in subset list");
        std::size_t pos = 0;
        long long i = std::stoll(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad index '" + item + "'");
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw std::invalid_argument("index " + std::to_string(i) +
                                        " outside 1.." + std::to_string(n));
        x = x.with(static_cast<std::size_t>(i - 1));
    }
    return x;
}

}  // namespace pminor
