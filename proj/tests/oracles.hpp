#pragma once

// Brute-force oracles for the unit tests. Each one walks the full object (all of F_q^n,
// all messages, all weight-t vectors) and is only usable on tiny instances.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qdesign/qdesign.hpp"

namespace oracle {

using namespace qdesign;

// Calls fn(v) for every v in F_q^n, in lexicographic order.
template <class Fn>
void for_each_vector(unsigned q, std::size_t n, Fn&& fn) {
    Vector v(n, 0);
    while (true) {
        fn(static_cast<const Vector&>(v));
        std::size_t i = 0;
        while (i < n && ++v[i] == q) v[i++] = 0;
        if (i == n) return;
    }
}

inline std::vector<Vector> all_codewords(const LinearCode& c) {
    std::vector<Vector> out;
    if (c.k() == 0) return {Vector(c.n(), 0)};
    for_each_vector(c.q(), c.k(), [&](const Vector& m) { out.push_back(c.encode(m)); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> distribution(const LinearCode& c) {
    std::vector<std::uint64_t> a(c.n() + 1, 0);
    for (const auto& v : all_codewords(c)) ++a[hamming_weight(v)];
    return a;
}

inline unsigned min_distance(const LinearCode& c) {
    unsigned d = static_cast<unsigned>(c.n()) + 1;
    for (const auto& v : all_codewords(c))
        if (auto w = hamming_weight(v)) d = std::min(d, w);
    return d;
}

// max over x in F_q^n of min over codewords of d(x, c).
inline unsigned covering_radius(const LinearCode& c) {
    const auto words = all_codewords(c);
    unsigned rho = 0;
    for_each_vector(c.q(), c.n(), [&](const Vector& x) {
        unsigned best = static_cast<unsigned>(c.n());
        for (const auto& v : words) {
            unsigned d = 0;
            for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != v[i];
            best = std::min(best, d);
        }
        rho = std::max(rho, best);
    });
    return rho;
}

// Every vector of F_q^n orthogonal to all generator rows.
inline std::vector<Vector> orthogonal_complement(const LinearCode& c) {
    std::vector<Vector> out;
    for_each_vector(c.q(), c.n(), [&](const Vector& x) {
        bool ok = true;
        for (const auto& r : c.generator()) ok = ok && inner_product(c.field(), r, x) == 0;
        if (ok) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t covering_count(const BlockFamily& f, const Vector& v) {
    std::uint64_t c = 0;
    for (const auto& b : f.blocks) c += covers(b, v);
    return c;
}

// Count of blocks covering each weight-t vector; nullopt unless all counts agree.
inline std::optional<std::uint64_t> qary_lambda(const BlockFamily& f, unsigned t) {
    std::optional<std::uint64_t> lambda;
    bool uniform = true;
    for_each_vector(f.q(), f.n, [&](const Vector& v) {
        if (!uniform || hamming_weight(v) != t) return;
        std::uint64_t c = 0;
        for (const auto& b : f.blocks) c += covers(b, v);
        if (!lambda) lambda = c;
        else if (*lambda != c) uniform = false;
    });
    if (!uniform) return std::nullopt;
    return lambda;
}

// Classical index over distinct supports; nullopt unless uniform.
inline std::optional<std::uint64_t> classical_lambda(const BlockFamily& f, unsigned t) {
    std::set<std::vector<unsigned>> supports;
    for (const auto& b : f.blocks) supports.insert(support_of(b));
    std::optional<std::uint64_t> lambda;
    bool uniform = true;
    detail::for_each_subset(static_cast<unsigned>(f.n), t, [&](const std::vector<unsigned>& T) {
        if (!uniform) return;
        std::uint64_t c = 0;
        for (const auto& s : supports) c += std::includes(s.begin(), s.end(), T.begin(), T.end());
        if (!lambda) lambda = c;
        else if (*lambda != c) uniform = false;
    });
    if (!uniform) return std::nullopt;
    return lambda;
}

inline BlockFamily family(const LinearCode& c, unsigned w) {
    BlockFamily f{c.field(), c.n(), w, {}, "oracle"};
    for (const auto& v : all_codewords(c))
        if (hamming_weight(v) == w) f.blocks.push_back(v);
    return f;
}

// A random code with exactly k independent rows (redrawn until full rank).
inline LinearCode random_code(std::mt19937_64& rng, unsigned q, std::size_t n, std::size_t k) {
    auto f = make_field(q);
    std::uniform_int_distribution<unsigned> sym(0, q - 1);
    while (true) {
        Matrix g(k, Vector(n));
        for (auto& r : g)
            for (auto& s : r) s = static_cast<Symbol>(sym(rng));
        try {
            return code_from_generator(f, g, RankPolicy::strict, "random");
        } catch (const RankError&) {
        }
    }
}

}  // namespace oracle
