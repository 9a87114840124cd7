#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "design.hpp"
#include "zoo.hpp"

namespace qdesign {

// Square root in characteristic 2: x^(Q/2) with Q = |F|.
inline Symbol sqrt_char2(const FieldSpec& f, Symbol x) {
    if (f.p() != 2) throw ParameterError("sqrt_char2 needs characteristic 2");
    return f.pow(x, f.q() / 2);
}

namespace detail {

inline std::uint64_t zero_mask(const Vector& v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i]) m |= std::uint64_t{1} << i;
    return m;
}

inline std::uint64_t set_mask(const std::vector<unsigned>& s) {
    std::uint64_t m = 0;
    for (auto i : s) m |= std::uint64_t{1} << i;
    return m;
}

// All tau multiples of v, tau in F_q^*, including v itself.
template <class Fn>
void for_each_scalar_multiple(const FieldSpec& f, const Vector& v, Fn&& fn) {
    Vector w(v.size());
    for (unsigned tau = 1; tau < f.q(); ++tau) {
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = f.mul(static_cast<Symbol>(tau), v[i]);
        fn(w);
    }
}

// The codeword Tr(a u + b u^2 + c u^3) whose u^3-multiple is c prod (u + r), r over `roots`
// (a multiset of six elements of U), with c^(q-1) = prod r fixed by c = (prod r)^(-1/2).
// Its zero set must be exactly `zeros`; anything else is an internal error.
inline Vector trace_codeword_from_roots(const QuadraticExtension& ext, const std::vector<Symbol>& roots,
                                        const std::vector<unsigned>& zeros) {
    const auto& F = ext.ext();
    auto sigma = esp_all(F, roots);
    const Symbol c = F.inv(sqrt_char2(F, sigma[6]));
    if (sigma[3] != 0) throw InternalError("root multiset has sigma_3 != 0");
    Vector v = trace_codeword(ext, F.mul(c, sigma[2]), F.mul(c, sigma[1]), c);
    if (zero_mask(v) != set_mask(zeros)) throw InternalError("trace codeword zero set differs from its parameter set");
    return v;
}

}  // namespace detail

// Weight-(q-5) codewords from B in B_{6,3}: for each B, the q-1 codewords tau c u^-3 prod (u + u_j).
// fn(B, codeword) is called (q-1) times per B.
template <class Fn>
void for_each_tr60_codeword(const QuadraticExtension& ext, const std::vector<std::vector<unsigned>>& sets, Fn&& fn) {
    const auto& U = ext.unity_subgroup();
    for (const auto& b : sets) {
        if (b.size() != 6) throw ParameterError("B_{6,3} members have six elements");
        std::vector<Symbol> roots;
        for (auto i : b) roots.push_back(U[i]);
        Vector v = detail::trace_codeword_from_roots(ext, roots, b);
        detail::for_each_scalar_multiple(ext.base(), v, [&](const Vector& w) { fn(b, w); });
    }
}

// Weight-(q-4) codewords from B in B^b_{5,3}: every u_i in B with sigma_3(B - u_i) = 0 is a
// double root, giving q-1 codewords with zero set B. Returns the number of (B, u_i) pairs.
template <class Fn>
std::uint64_t for_each_tr53_codeword(const QuadraticExtension& ext, const std::vector<std::vector<unsigned>>& sets, Fn&& fn) {
    const auto& F = ext.ext();
    const auto& U = ext.unity_subgroup();
    std::uint64_t pairs = 0;
    for (const auto& b : sets) {
        if (b.size() != 5) throw ParameterError("B^b_{5,3} members have five elements");
        std::vector<Symbol> elems;
        for (auto i : b) elems.push_back(U[i]);
        auto sigma = esp_all(F, elems);
        for (auto i : b) {
            if (shifted_esp(F, sigma, 3, F.neg(U[i])) != 0) continue;
            ++pairs;
            auto roots = elems;
            roots.push_back(U[i]);
            Vector v = detail::trace_codeword_from_roots(ext, roots, b);
            detail::for_each_scalar_multiple(ext.base(), v, [&](const Vector& w) { fn(b, w); });
        }
    }
    return pairs;
}

// Closed forms for C_{1,2,3}, q = 2^m: indices of the q-ary 2-designs at weights q-5 and q-4.
inline Rational trace_lambda_d(std::int64_t q) { return Rational((q - 2) * (q - 5) * (q - 6) * (q - 8), 720); }
inline Rational trace_lambda_d1(std::int64_t q) { return Rational((q - 2) * (q - 4) * (q - 5), 24); }

// One weight of the trace-code suite, reached by two independent routes.
struct TraceWeightResult {
    unsigned w = 0;
    Rational lambda_formula;
    // Route 1: parametrization by block sets.
    std::uint64_t sets = 0;
    std::uint64_t pairs = 0;  // (B, double root) pairs; equals `sets` at weight q-5
    std::uint64_t param_codewords = 0;
    FixedCoordinateCheck param_fixed;
    // Route 2: enumeration of all q^6 codewords.
    std::optional<std::uint64_t> enum_codewords;
    std::optional<FixedCoordinateCheck> enum_fixed;
    std::optional<bool> zero_sets_match;  // enumerated zero sets = parameter sets, each q-1 times
    std::optional<std::string> enum_skipped;
};

struct TraceSuiteReport {
    unsigned m = 0, q = 0;
    std::size_t n = 0;
    std::vector<unsigned> coords;
    unsigned asserted_transitivity = 0;
    TraceWeightResult d, d1;  // weights q-5 and q-4
    std::optional<std::uint64_t> lighter_codewords;  // nonzero codewords of weight < q-5 (enumeration route)
};

using ProgressFn = std::function<void(const std::string&)>;

namespace detail {

// Every mask in `got` appears exactly `mult` times and the distinct masks equal `want`.
inline bool masks_match(std::vector<std::uint64_t> got, std::vector<std::uint64_t> want, std::uint64_t mult) {
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got.size() != want.size() * mult) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        for (std::uint64_t j = 0; j < mult; ++j)
            if (got[i * mult + j] != want[i]) return false;
    return true;
}

}  // namespace detail

// Runs both routes for q = 2^m. The enumeration route is skipped (with a reason) when q^6
// exceeds the codeword budget or `enumerate` is false.
inline TraceSuiteReport trace_suite(unsigned m, std::vector<unsigned> coords, unsigned asserted_transitivity,
                                    bool enumerate = true, unsigned threads = default_threads(),
                                    const Budget& budget = default_budget(), const ProgressFn& progress = {}) {
    auto say = [&](const std::string& s) {
        if (progress) progress(s);
    };
    if (asserted_transitivity < coords.size())
        throw ParameterError("fixed-coordinate verification needs an asserted transitivity >= t");
    QuadraticExtension ext(std::uint64_t{1} << m);
    LinearCode code = trace_code_123(ext);
    TraceSuiteReport r;
    r.m = m;
    r.q = ext.q();
    r.n = code.n();
    r.coords = coords;
    r.asserted_transitivity = asserted_transitivity;
    const unsigned q = r.q;
    r.d.w = q - 5;
    r.d1.w = q - 4;
    r.d.lambda_formula = trace_lambda_d(q);
    r.d1.lambda_formula = trace_lambda_d1(q);

    say("block sets B_{6,3}");
    auto b63 = block_sets(ext, 6, 3, BlockSetVariant::plain, budget);
    say("block sets B^b_{5,3}");
    auto b53 = block_sets(ext, 5, 3, BlockSetVariant::based, budget);
    r.d.sets = r.d.pairs = b63.size();
    r.d1.sets = b53.size();

    say("parametrized codewords of weight " + std::to_string(r.d.w));
    FixedCoordinateCounter fc_d(coords, q), fc_d1(coords, q);
    for_each_tr60_codeword(ext, b63, [&](const std::vector<unsigned>&, const Vector& v) {
        fc_d.add(v);
        ++r.d.param_codewords;
    });
    say("parametrized codewords of weight " + std::to_string(r.d1.w));
    r.d1.pairs = for_each_tr53_codeword(ext, b53, [&](const std::vector<unsigned>&, const Vector& v) {
        fc_d1.add(v);
        ++r.d1.param_codewords;
    });
    r.d.param_fixed = finish_fixed_coordinate(fc_d, r.n, r.d.param_codewords);
    r.d1.param_fixed = finish_fixed_coordinate(fc_d1, r.n, r.d1.param_codewords);

    if (!enumerate) {
        r.d.enum_skipped = r.d1.enum_skipped = "enumeration route disabled";
        return r;
    }
    say("enumerating " + std::to_string(q) + "^6 codewords");
    const unsigned workers = std::max(1u, threads);
    struct Acc {
        FixedCoordinateCounter fd, fd1;
        std::vector<std::uint64_t> masks_d, masks_d1;
        std::uint64_t lighter = 0;
    };
    std::vector<Acc> acc;
    for (unsigned i = 0; i < workers; ++i) acc.push_back({FixedCoordinateCounter(coords, q), FixedCoordinateCounter(coords, q), {}, {}, 0});
    try {
        std::vector<unsigned> wanted{r.d.w, r.d1.w};
        for (unsigned w = 1; w < r.d.w; ++w) wanted.push_back(w);
        enumerate_codewords_parallel(code, WeightFilter(wanted), workers, [&](unsigned worker, const Vector& v, unsigned w) {
            auto& a = acc[worker];
            if (w < r.d.w) {
                ++a.lighter;
            } else if (w == r.d.w) {
                a.fd.add(v);
                a.masks_d.push_back(detail::zero_mask(v));
            } else {
                a.fd1.add(v);
                a.masks_d1.push_back(detail::zero_mask(v));
            }
        }, budget);
    } catch (const CapacityError& e) {
        r.d.enum_skipped = r.d1.enum_skipped = std::string(e.what());
        return r;
    }
    std::vector<std::uint64_t> md, md1;
    for (unsigned i = 1; i < workers; ++i) {
        acc[0].fd.merge(acc[i].fd);
        acc[0].fd1.merge(acc[i].fd1);
    }
    for (auto& a : acc) {
        md.insert(md.end(), a.masks_d.begin(), a.masks_d.end());
        md1.insert(md1.end(), a.masks_d1.begin(), a.masks_d1.end());
    }
    r.lighter_codewords = 0;
    for (auto& a : acc) *r.lighter_codewords += a.lighter;
    r.d.enum_codewords = md.size();
    r.d1.enum_codewords = md1.size();
    r.d.enum_fixed = finish_fixed_coordinate(acc[0].fd, r.n, md.size());
    r.d1.enum_fixed = finish_fixed_coordinate(acc[0].fd1, r.n, md1.size());

    std::vector<std::uint64_t> want_d, want_d1;
    for (const auto& b : b63) want_d.push_back(detail::set_mask(b));
    for (const auto& b : b53) want_d1.push_back(detail::set_mask(b));
    // A weight-(q-4) zero set carries q-1 codewords per double root.
    std::vector<std::uint64_t> want_d1_pairs;
    {
        const auto& F = ext.ext();
        const auto& U = ext.unity_subgroup();
        for (const auto& b : b53) {
            std::vector<Symbol> elems;
            for (auto i : b) elems.push_back(U[i]);
            auto sigma = esp_all(F, elems);
            for (auto i : b)
                if (shifted_esp(F, sigma, 3, F.neg(U[i])) == 0) want_d1_pairs.push_back(detail::set_mask(b));
        }
    }
    r.d.zero_sets_match = detail::masks_match(std::move(md), std::move(want_d), q - 1);
    r.d1.zero_sets_match = detail::masks_match(std::move(md1), std::move(want_d1_pairs), q - 1);
    return r;
}

}  // namespace qdesign
