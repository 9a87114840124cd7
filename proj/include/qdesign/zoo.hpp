#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extension.hpp"
#include "linear_code.hpp"
#include "numeric.hpp"
#include "profile.hpp"

namespace qdesign {

// Cap on the length of projective-geometry codes.
inline constexpr std::size_t kMaxZooLength = 10000;

namespace detail {

inline Matrix columns_to_rows(const std::vector<Vector>& cols, std::size_t k) {
    Matrix rows(k, Vector(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) rows[i][j] = cols[j][i];
    return rows;
}

// Points of PG(m-1, q): vectors whose first nonzero entry is 1, in lexicographic order
// (first coordinate most significant).
inline std::vector<Vector> projective_points(const FieldSpec& f, unsigned m) {
    const std::uint64_t q = f.q();
    auto n = checked_pow(q, m);
    if (!n || (*n - 1) / (q - 1) > kMaxZooLength) throw CapacityError("projective space has more than 10^4 points");
    std::vector<Vector> pts;
    Vector v(m, 0);
    for (std::uint64_t code = 0; code < *n; ++code) {
        std::uint64_t c = code;
        for (unsigned i = m; i-- > 0; c /= q) v[i] = static_cast<Symbol>(c % q);
        std::size_t lead = 0;
        while (lead < m && v[lead] == 0) ++lead;
        if (lead < m && v[lead] == 1) pts.push_back(v);
    }
    return pts;
}

}  // namespace detail

inline LinearCode simplex(unsigned q, unsigned m) {
    if (m < 2) throw ParameterError("simplex requires m >= 2");
    const auto f = make_field(q);
    auto pts = detail::projective_points(f, m);
    return code_from_generator(f, detail::columns_to_rows(pts, m), RankPolicy::strict,
                               "simplex(" + std::to_string(q) + "," + std::to_string(m) + ")");
}

inline LinearCode hamming(unsigned q, unsigned m) {
    return dual(simplex(q, m)).with_label("hamming(" + std::to_string(q) + "," + std::to_string(m) + ")");
}

// (f(1), f(alpha), ..., f(alpha^(q-2))) for deg f < k.
inline LinearCode reed_solomon(unsigned q, unsigned k) {
    if (k < 1 || k > q - 1) throw ParameterError("reed_solomon requires 1 <= k <= q-1");
    const auto f = make_field(q);
    Matrix rows(k, Vector(q - 1));
    for (unsigned j = 0; j < k; ++j)
        for (unsigned i = 0; i + 1 < q; ++i) rows[j][i] = f.exp(std::int64_t(i) * j);
    return code_from_generator(f, rows, RankPolicy::strict, "rs(" + std::to_string(q) + "," + std::to_string(k) + ")");
}

// (f(0), f(1), f(alpha), ..., f(alpha^(q-2)), f(inf)), f(inf) = coefficient of x^(k-1).
inline LinearCode drs(unsigned q, unsigned k) {
    if (k < 1 || k > q + 1) throw ParameterError("drs requires 1 <= k <= q+1");
    const auto f = make_field(q);
    Matrix rows(k, Vector(q + 1, 0));
    for (unsigned j = 0; j < k; ++j) {
        rows[j][0] = j == 0 ? 1 : 0;
        for (unsigned i = 0; i + 1 < q; ++i) rows[j][i + 1] = f.exp(std::int64_t(i) * j);
        rows[j][q] = j + 1 == k ? 1 : 0;
    }
    return code_from_generator(f, rows, RankPolicy::strict, "drs(" + std::to_string(q) + "," + std::to_string(k) + ")");
}

// Cyclic [11,6,5]_3 code generated by g(x) = 2 + x^2 + 2x^3 + x^4 + x^5 (shifts of g).
inline LinearCode ternary_golay() {
    const auto f = make_field(3);
    const std::vector<Symbol> g{2, 0, 1, 2, 1, 1};
    Matrix rows;
    for (unsigned s = 0; s < 6; ++s) {
        Vector v(11, 0);
        for (unsigned i = 0; i < g.size(); ++i) v[s + i] = g[i];
        rows.push_back(v);
    }
    return code_from_generator(f, rows, RankPolicy::strict, "ternary-golay");
}

inline LinearCode rt6() { return dual(ternary_golay()).with_label("rt6"); }

// [I | S] over F_3 with S the (p+1)x(p+1) conference matrix of the Paley construction:
// S = [[0, 1^T], [chi(-1) 1, Q]], Q_ij = chi(j - i), chi the quadratic character mod p.
// p = 5 gives P12, p = 11 gives P24.
inline LinearCode pless_symmetry(unsigned n) {
    if (n != 12 && n != 24) throw ParameterError("pless_symmetry requires n in {12, 24}");
    const unsigned p = n == 12 ? 5 : 11;
    const auto f = make_field(3);
    auto chi = [p](unsigned a) -> int {
        a %= p;
        if (a == 0) return 0;
        for (unsigned x = 1; x < p; ++x)
            if (x * x % p == a) return 1;
        return -1;
    };
    const unsigned h = p + 1;
    std::vector<std::vector<int>> s(h, std::vector<int>(h, 0));
    for (unsigned j = 1; j < h; ++j) {
        s[0][j] = 1;
        s[j][0] = chi(p - 1);
    }
    for (unsigned i = 1; i < h; ++i)
        for (unsigned j = 1; j < h; ++j) s[i][j] = chi(j - 1 + p - (i - 1));
    Matrix rows(h, Vector(2 * h, 0));
    for (unsigned i = 0; i < h; ++i) {
        rows[i][i] = 1;
        for (unsigned j = 0; j < h; ++j) rows[i][h + j] = f.from_int(s[i][j]);
    }
    return code_from_generator(f, rows, RankPolicy::strict, "pless" + std::to_string(n));
}

// Regular hyperoval {(1, t, t^2) : t in F_q} u {(0,1,0), (0,0,1)} as generator columns.
inline LinearCode tf1(unsigned q) {
    const auto f = make_field(q);
    if (f.p() != 2 || q <= 2) throw ParameterError("tf1 requires even q > 2");
    std::vector<Vector> cols;
    for (unsigned t = 0; t < q; ++t) cols.push_back({1, static_cast<Symbol>(t), f.mul(static_cast<Symbol>(t), static_cast<Symbol>(t))});
    cols.push_back({0, 1, 0});
    cols.push_back({0, 0, 1});
    return code_from_generator(f, detail::columns_to_rows(cols, 3), RankPolicy::strict, "tf1(" + std::to_string(q) + ")");
}

// Elliptic quadric x0 x1 + x2^2 + b x2 x3 + c x3^2 = 0 in PG(3,q), with (b, c) the first
// pair in index order making x^2 + b x + c irreducible. Its q^2+1 points are the columns.
inline LinearCode tf3(unsigned q) {
    const auto f = make_field(q);
    if (q < 4) throw ParameterError("tf3 requires q >= 4");
    std::optional<std::pair<Symbol, Symbol>> form;
    for (unsigned b = 0; b < q && !form; ++b)
        for (unsigned c = 1; c < q && !form; ++c) {
            bool root = false;
            for (unsigned x = 0; x < q && !root; ++x) {
                Symbol v = f.add(f.add(f.mul(static_cast<Symbol>(x), static_cast<Symbol>(x)), f.mul(static_cast<Symbol>(b), static_cast<Symbol>(x))),
                                 static_cast<Symbol>(c));
                root = v == 0;
            }
            if (!root) form = std::make_pair(static_cast<Symbol>(b), static_cast<Symbol>(c));
        }
    if (!form) throw InternalError("no irreducible quadratic found");
    const auto [b, c] = *form;
    std::vector<Vector> cols;
    for (const auto& x : detail::projective_points(f, 4)) {
        Symbol v = f.mul(x[0], x[1]);
        v = f.add(v, f.mul(x[2], x[2]));
        v = f.add(v, f.mul(b, f.mul(x[2], x[3])));
        v = f.add(v, f.mul(c, f.mul(x[3], x[3])));
        if (v == 0) cols.push_back(x);
    }
    if (cols.size() != std::size_t(q) * q + 1) throw InternalError("elliptic quadric has the wrong number of points");
    return code_from_generator(f, detail::columns_to_rows(cols, 4), RankPolicy::strict, "tf3(" + std::to_string(q) + ")");
}

// Trace-code codeword (Tr(a u + b u^2 + c u^3))_{u = gamma^i, i = 0..q} as F_q indices.
inline Vector trace_codeword(const QuadraticExtension& ext, Symbol a, Symbol b, Symbol c) {
    const auto& F = ext.ext();
    const auto& U = ext.unity_subgroup();
    Vector v(U.size());
    for (std::size_t i = 0; i < U.size(); ++i) {
        const Symbol u = U[i];
        const Symbol u2 = F.mul(u, u);
        Symbol x = F.add(F.add(F.mul(a, u), F.mul(b, u2)), F.mul(c, F.mul(u2, u)));
        v[i] = ext.trace(x);
    }
    return v;
}

// C_{1,2,3} over F_q, q = 2^m: rows from the F_q-basis {1, alpha} of each of a, b, c.
inline LinearCode trace_code_123(const QuadraticExtension& ext) {
    if (ext.base().p() != 2 || ext.base().m() < 5 || ext.base().m() % 2 == 0)
        throw ParameterError("trace_code_123 requires q = 2^m with m odd, m >= 5");
    const Symbol alpha = ext.ext().generator();
    Matrix rows;
    for (unsigned slot = 0; slot < 3; ++slot)
        for (Symbol basis : {Symbol(1), alpha}) {
            Symbol abc[3] = {0, 0, 0};
            abc[slot] = basis;
            rows.push_back(trace_codeword(ext, abc[0], abc[1], abc[2]));
        }
    return code_from_generator(ext.base(), rows, RankPolicy::strict, "trace123(" + std::to_string(ext.base().m()) + ")");
}

inline LinearCode trace_code_123(unsigned m) {
    if (m < 5 || m % 2 == 0 || m > 7) throw ParameterError("trace_code_123 requires odd m with 5 <= m <= 7");
    return trace_code_123(QuadraticExtension(1u << m));
}

// ---------------------------------------------------------------------------
// Registry

struct ZooParams {
    unsigned q = 0, m = 0, k = 0, n = 0;
};

struct ZooEntry {
    std::string id;
    std::string summary;
    std::vector<std::string> params;  // required parameter names
    std::function<LinearCode(const ZooParams&)> build;
    // Expected profile at the given parameters.
    std::function<std::size_t(const ZooParams&)> length, dimension;
    std::function<unsigned(const ZooParams&)> min_distance;
    std::function<std::optional<std::map<unsigned, BigInt>>(const ZooParams&)> enumerator;
    unsigned transitivity = 0;  // asserted t-transitivity of the automorphism group, 0 = none
    std::string transitivity_basis;
};

inline const std::vector<ZooEntry>& zoo_registry() {
    using E = std::optional<std::map<unsigned, BigInt>>;
    auto none = [](const ZooParams&) -> E { return std::nullopt; };
    static const std::vector<ZooEntry> reg = {
        {"simplex", "[(q^m-1)/(q-1), m, q^(m-1)]_q, one column per point of PG(m-1,q)", {"q", "m"},
         [](const ZooParams& p) { return simplex(p.q, p.m); },
         [](const ZooParams& p) { return std::size_t((*checked_pow(p.q, p.m) - 1) / (p.q - 1)); },
         [](const ZooParams& p) { return std::size_t(p.m); },
         [](const ZooParams& p) { return unsigned(*checked_pow(p.q, p.m - 1)); },
         [](const ZooParams& p) -> E {
             return std::map<unsigned, BigInt>{{0, 1}, {unsigned(*checked_pow(p.q, p.m - 1)), BigInt(*checked_pow(p.q, p.m) - 1)}};
         },
         0, ""},
        {"hamming", "[(q^m-1)/(q-1), n-m, 3]_q, dual of the simplex code", {"q", "m"},
         [](const ZooParams& p) { return hamming(p.q, p.m); },
         [](const ZooParams& p) { return std::size_t((*checked_pow(p.q, p.m) - 1) / (p.q - 1)); },
         [](const ZooParams& p) { return std::size_t((*checked_pow(p.q, p.m) - 1) / (p.q - 1) - p.m); },
         [](const ZooParams&) { return 3u; }, none, 0, ""},
        {"rs", "[q-1, k, q-k]_q Reed-Solomon code at 1, alpha, ..., alpha^(q-2)", {"q", "k"},
         [](const ZooParams& p) { return reed_solomon(p.q, p.k); }, [](const ZooParams& p) { return std::size_t(p.q - 1); },
         [](const ZooParams& p) { return std::size_t(p.k); }, [](const ZooParams& p) { return p.q - p.k; }, none, 0, ""},
        {"drs", "[q+1, k, q-k+2]_q doubly-extended Reed-Solomon code", {"q", "k"},
         [](const ZooParams& p) { return drs(p.q, p.k); }, [](const ZooParams& p) { return std::size_t(p.q + 1); },
         [](const ZooParams& p) { return std::size_t(p.k); }, [](const ZooParams& p) { return p.q - p.k + 2; }, none, 3,
         "permutation automorphisms contain PGL(2,q) acting on the projective line"},
        {"ternary-golay", "[11,6,5]_3 perfect cyclic code", {},
         [](const ZooParams&) { return ternary_golay(); }, [](const ZooParams&) { return std::size_t(11); },
         [](const ZooParams&) { return std::size_t(6); }, [](const ZooParams&) { return 5u; },
         [](const ZooParams&) -> E { return std::map<unsigned, BigInt>{{0, 1}, {5, 132}, {6, 132}, {8, 330}, {9, 110}, {11, 24}}; },
         0, ""},
        {"rt6", "[11,5,6]_3 two-weight code, dual of the ternary Golay code", {},
         [](const ZooParams&) { return rt6(); }, [](const ZooParams&) { return std::size_t(11); },
         [](const ZooParams&) { return std::size_t(5); }, [](const ZooParams&) { return 6u; },
         [](const ZooParams&) -> E { return std::map<unsigned, BigInt>{{0, 1}, {6, 132}, {9, 110}}; }, 0, ""},
        {"pless12", "[12,6,6]_3 Pless symmetry code", {},
         [](const ZooParams&) { return pless_symmetry(12); }, [](const ZooParams&) { return std::size_t(12); },
         [](const ZooParams&) { return std::size_t(6); }, [](const ZooParams&) { return 6u; },
         [](const ZooParams&) -> E { return std::map<unsigned, BigInt>{{0, 1}, {6, 264}, {9, 440}, {12, 24}}; }, 0, ""},
        {"pless24", "[24,12,9]_3 Pless symmetry code", {},
         [](const ZooParams&) { return pless_symmetry(24); }, [](const ZooParams&) { return std::size_t(24); },
         [](const ZooParams&) { return std::size_t(12); }, [](const ZooParams&) { return 9u; },
         [](const ZooParams&) -> E {
             return std::map<unsigned, BigInt>{{0, 1},       {9, 4048},    {12, 61824}, {15, 242880},
                                               {18, 198352}, {21, 24288}, {24, 48}};
         },
         0, ""},
        {"tf1", "[q+2, 3, q]_q hyperoval code, q even", {"q"},
         [](const ZooParams& p) { return tf1(p.q); }, [](const ZooParams& p) { return std::size_t(p.q + 2); },
         [](const ZooParams&) { return std::size_t(3); }, [](const ZooParams& p) { return p.q; },
         [](const ZooParams& p) -> E {
             const std::int64_t q = p.q;
             return std::map<unsigned, BigInt>{{0, 1}, {p.q, BigInt((q + 2) * (q * q - 1) / 2)}, {p.q + 2, BigInt(q * (q - 1) * (q - 1) / 2)}};
         },
         0, ""},
        {"tf3", "[q^2+1, 4, q^2-q]_q elliptic quadric code", {"q"},
         [](const ZooParams& p) { return tf3(p.q); }, [](const ZooParams& p) { return std::size_t(p.q * p.q + 1); },
         [](const ZooParams&) { return std::size_t(4); }, [](const ZooParams& p) { return p.q * p.q - p.q; },
         [](const ZooParams& p) -> E {
             const std::int64_t q = p.q;
             return std::map<unsigned, BigInt>{
                 {0, 1}, {p.q * p.q - p.q, BigInt((q * q - q) * (q * q + 1))}, {p.q * p.q, BigInt((q - 1) * (q * q + 1))}};
         },
         0, ""},
        {"trace123", "[q+1, 6, q-5]_q trace code over U, q = 2^m", {"m"},
         [](const ZooParams& p) { return trace_code_123(p.m); }, [](const ZooParams& p) { return std::size_t((1u << p.m) + 1); },
         [](const ZooParams&) { return std::size_t(6); }, [](const ZooParams& p) { return (1u << p.m) - 5; }, none, 3,
         "monomial automorphisms contain a group acting on U as PGL(2,q) on the projective line"},
    };
    return reg;
}

inline const ZooEntry& zoo_entry(const std::string& id) {
    for (const auto& e : zoo_registry())
        if (e.id == id) return e;
    throw ParameterError("unknown zoo code '" + id + "'");
}

inline LinearCode zoo_build(const std::string& id, const ZooParams& params) { return zoo_entry(id).build(params); }

// Differences between the computed profile and the expected one; empty when they agree.
inline std::vector<std::string> golden_mismatches(const ZooEntry& e, const ZooParams& p, const LinearCode& code,
                                                  const CodeProfile& prof) {
    std::vector<std::string> out;
    auto expect = [&](const std::string& what, auto got, auto want) {
        if (got != want) out.push_back(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    expect("n", code.n(), e.length(p));
    expect("k", code.k(), e.dimension(p));
    expect("d", prof.d, e.min_distance(p));
    if (auto en = e.enumerator(p)) {
        for (unsigned w = 0; w <= code.n(); ++w) {
            BigInt want = en->count(w) ? en->at(w) : BigInt(0);
            if (prof.distribution[w] != want)
                out.push_back("A_" + std::to_string(w) + ": got " + prof.distribution[w].str() + ", expected " + want.str());
        }
    }
    return out;
}

}  // namespace qdesign
