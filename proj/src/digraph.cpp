#include "pminor/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pminor {

Orientation Orientation::from_sigma(std::size_t n,
                                    std::vector<std::int8_t> sig) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (sig.size() != n * n)
        throw std::invalid_argument("sigma size does not match dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::int8_t v = sig[i * n + j];
            if (v < -1 || v > 1)
                throw std::domain_error("sigma value outside {-1,0,1}");
            if (v != -sig[j * n + i])
                throw std::invalid_argument("sigma is not skew-symmetric");
        }
    return Orientation(n, std::move(sig));
}

Orientation Orientation::from_arcs(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    std::vector<std::int8_t> sig(n * n, 0);
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n || u == v)
            throw std::invalid_argument("bad arc endpoints");
        if (sig[u * n + v] != 0)
            throw std::invalid_argument("duplicate or opposed arc");
        sig[u * n + v] = 1;
        sig[v * n + u] = -1;
    }
    return Orientation(n, std::move(sig));
}

Orientation from_skew(const SkewMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::int8_t> sig(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Int& v = a(i, j);
            if (v < -1 || v > 1)
                throw std::domain_error(
                    "skew-adjacency entries must lie in {-1,0,1}; entry (" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") does not");
            sig[i * n + j] = static_cast<std::int8_t>(v.convert_to<int>());
        }
    return Orientation::from_sigma(n, std::move(sig));
}

SkewMatrix to_skew(const Orientation& g) {
    const std::size_t n = g.dim();
    std::vector<Int> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = g.arc(i, j);
    return SkewMatrix::from_entries(n, std::move(e));
}

Orientation converse(const Orientation& g) {
    const std::size_t n = g.dim();
    std::vector<std::int8_t> sig(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sig[i * n + j] = static_cast<std::int8_t>(-g.arc(i, j));
    return Orientation::from_sigma(n, std::move(sig));
}

bool is_clan(const Orientation& g, VertexSubset x) {
    const std::size_t n = g.dim();
    if (!x.subset_of(VertexSubset::full(n)))
        throw std::out_of_range("subset exceeds digraph order");
    auto in = x.indices();
    for (std::size_t out = 0; out < n; ++out) {
        if (x.contains(out)) continue;
        for (std::size_t k = 1; k < in.size(); ++k)
            if (g.arc(in[k], out) != g.arc(in[0], out)) return false;
    }
    return true;
}

Orientation invert(const Orientation& g, VertexSubset x) {
    const std::size_t n = g.dim();
    if (!x.subset_of(VertexSubset::full(n)))
        throw std::out_of_range("subset exceeds digraph order");
    std::vector<std::int8_t> sig(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int v = g.arc(i, j);
            if (x.contains(i) && x.contains(j)) v = -v;
            sig[i * n + j] = static_cast<std::int8_t>(v);
        }
    return Orientation::from_sigma(n, std::move(sig));
}

Orientation induced(const Orientation& g, VertexSubset x) {
    if (!x.subset_of(VertexSubset::full(g.dim())))
        throw std::out_of_range("subset exceeds digraph order");
    auto idx = x.indices();
    const std::size_t m = idx.size();
    std::vector<std::int8_t> sig(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            sig[i * m + j] = static_cast<std::int8_t>(g.arc(idx[i], idx[j]));
    return Orientation::from_sigma(m, std::move(sig));
}

bool isomorphic(const Orientation& a, const Orientation& b) {
    if (a.dim() != b.dim()) return false;
    const std::size_t n = a.dim();
    if (n > 8)
        throw ResourceLimitError("brute-force isomorphism capped at n <= 8");
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a.arc(i, j) != b.arc(p[i], p[j])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

bool hemimorphic(const Orientation& a, const Orientation& b) {
    return isomorphic(a, b) || isomorphic(converse(a), b);
}

const char* to_string(TripleShape s) {
    switch (s) {
        case TripleShape::Empty: return "EMPTY";
        case TripleShape::SingleEdge: return "SINGLE_EDGE";
        case TripleShape::Path: return "PATH";
        case TripleShape::Triangle: return "TRIANGLE";
    }
    return "?";
}

const char* to_string(TripleKind k) {
    switch (k) {
        case TripleKind::None: return "N/A";
        case TripleKind::SourceSink: return "SOURCE_SINK";
        case TripleKind::DirectedPath: return "DIRECTED_PATH";
        case TripleKind::Cyclic: return "CYCLIC";
        case TripleKind::Transitive: return "TRANSITIVE";
    }
    return "?";
}

TripleClass triple_class(const Orientation& g, VertexSubset t) {
    if (t.size() != 3)
        throw std::invalid_argument("triple classification needs |t| == 3");
    if (!t.subset_of(VertexSubset::full(g.dim())))
        throw std::out_of_range("subset exceeds digraph order");
    auto v = t.indices();
    int e01 = g.arc(v[0], v[1]), e02 = g.arc(v[0], v[2]),
        e12 = g.arc(v[1], v[2]);
    int edges = (e01 != 0) + (e02 != 0) + (e12 != 0);
    switch (edges) {
        case 0: return {TripleShape::Empty, TripleKind::None};
        case 1: return {TripleShape::SingleEdge, TripleKind::None};
        case 2: {
            // out-degree of the path centre decides the class: 1 means the
            // path is traversed end to end, 0 or 2 means source/sink.
            int outdeg[3] = {0, 0, 0};
            if (e01 != 0) ++outdeg[e01 > 0 ? 0 : 1];
            if (e02 != 0) ++outdeg[e02 > 0 ? 0 : 2];
            if (e12 != 0) ++outdeg[e12 > 0 ? 1 : 2];
            std::size_t centre = e01 == 0 ? 2 : (e02 == 0 ? 1 : 0);
            int deg_at_centre = outdeg[centre];
            return {TripleShape::Path, deg_at_centre == 1
                                           ? TripleKind::DirectedPath
                                           : TripleKind::SourceSink};
        }
        default: {
            int outdeg[3] = {0, 0, 0};
            ++outdeg[e01 > 0 ? 0 : 1];
            ++outdeg[e02 > 0 ? 0 : 2];
            ++outdeg[e12 > 0 ? 1 : 2];
            bool cyclic =
                outdeg[0] == 1 && outdeg[1] == 1 && outdeg[2] == 1;
            return {TripleShape::Triangle,
                    cyclic ? TripleKind::Cyclic : TripleKind::Transitive};
        }
    }
}

TripleScanResult triples_hemimorphic(const Orientation& g1,
                                     const Orientation& g2) {
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("orientations have different orders");
    const std::size_t n = g1.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g1.adjacent(i, j) != g2.adjacent(i, j))
                throw std::invalid_argument(
                    "orientations have different underlying graphs");
    TripleScanResult res;
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                VertexSubset t = VertexSubset::of({i, j, k});
                TripleClass c1 = triple_class(g1, t);
                TripleClass c2 = triple_class(g2, t);
                if (!(c1 == c2)) {
                    res.all_equal = false;
                    res.witness = t;
                    res.lhs = c1;
                    res.rhs = c2;
                    return res;
                }
            }
    return res;
}

Int apex_triple_determinant(const Orientation& g, std::size_t apex,
                            VertexSubset t) {
    if (t.size() != 3)
        throw std::invalid_argument("apex determinant needs |t| == 3");
    if (apex >= g.dim() || t.contains(apex) ||
        !t.subset_of(VertexSubset::full(g.dim())))
        throw std::invalid_argument("apex must lie outside the triple");
    for (std::size_t v : t.indices())
        if (g.arc(apex, v) != 1)
            throw std::domain_error(
                "apex must be oriented toward every vertex of the triple");
    return determinant(to_skew(induced(g, t.with(apex))));
}

}  // namespace pminor
