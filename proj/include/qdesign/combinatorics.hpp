#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "design.hpp"
#include "extension.hpp"
#include "numeric.hpp"

namespace qdesign {

// sigma_0..sigma_|B| of the multiset B, via the coefficients of prod (x + u).
inline std::vector<Symbol> esp_all(const FieldSpec& f, const std::vector<Symbol>& b) {
    std::vector<Symbol> e(b.size() + 1, 0);
    e[0] = 1;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j >= 1; --j) e[j] = f.add(e[j], f.mul(b[i], e[j - 1]));
    return e;
}

inline Symbol esp(const FieldSpec& f, const std::vector<Symbol>& b, std::size_t l) {
    if (l > b.size()) throw ParameterError("esp degree exceeds the set size");
    return esp_all(f, b)[l];
}

// sigma_l({u + s : u in B}) from sigma_0..sigma_k of B (k = |B|):
// sum_j sigma_j C(k-j, l-j) s^(l-j), binomials reduced in the prime field.
inline Symbol shifted_esp(const FieldSpec& f, const std::vector<Symbol>& sigma, std::size_t l, Symbol s) {
    const std::size_t k = sigma.size() - 1;
    if (l > k) throw ParameterError("esp degree exceeds the set size");
    Symbol acc = 0;
    for (std::size_t j = 0; j <= l; ++j) {
        const auto c = static_cast<std::int64_t>(binomial(static_cast<std::int64_t>(k - j), static_cast<std::int64_t>(l - j)) % f.p());
        if (c == 0) continue;
        acc = f.add(acc, f.mul(f.from_int(c), f.mul(sigma[j], f.pow(s, static_cast<std::int64_t>(l - j)))));
    }
    return acc;
}

// Ramanujan sum C_r(b) = sum over d | gcd(r, b) of mu(r/d) d, with gcd(r, 0) = r.
inline std::int64_t ramanujan_sum(std::uint64_t r, std::uint64_t b) {
    const std::uint64_t g = std::gcd(r, b);  // std::gcd(r, 0) = r
    std::int64_t s = 0;
    for (auto d : divisors(g)) s += mobius(r / d) * static_cast<std::int64_t>(d);
    return s;
}

// M(k, b): number of k-subsets of Z_n with element sum b (mod n), by
// (1/n) sum_{r | gcd(n,k)} (-1)^(k + k/r) C(n/r, k/r) C_r(b).
inline BigInt subset_sum_count(std::uint64_t n, std::uint64_t k, std::uint64_t b) {
    if (n == 0 || k > n) throw ParameterError("subset_sum_count requires 0 <= k <= n and n >= 1");
    b %= n;
    BigInt total = 0;
    for (auto r : divisors(std::gcd(n, k))) {
        BigInt term = binomial_big(static_cast<std::int64_t>(n / r), static_cast<std::int64_t>(k / r)) * ramanujan_sum(r, b);
        if ((k + k / r) % 2) total -= term;
        else total += term;
    }
    if (total % n != 0) throw InternalError("subset-sum formula produced a non-integer");
    return total / n;
}

// Direct count over all k-subsets; used as an oracle.
inline std::uint64_t subset_sum_count_brute(unsigned n, unsigned k, std::uint64_t b) {
    std::uint64_t count = 0;
    detail::for_each_subset(n, k, [&](const std::vector<unsigned>& c) {
        std::uint64_t s = 0;
        for (auto x : c) s += x;
        count += s % n == b % n;
    });
    return count;
}

// N(k, c): number of k-subsets of F_q^* with product c, via the discrete log onto Z_{q-1}.
inline BigInt subset_prod_count(const FieldSpec& f, std::uint64_t k, Symbol c) {
    if (c == 0) throw DomainError("subset_prod_count: c must be nonzero");
    return subset_sum_count(f.q() - 1, k, f.log(c));
}

inline std::uint64_t subset_prod_count_brute(const FieldSpec& f, unsigned k, Symbol c) {
    std::uint64_t count = 0;
    detail::for_each_subset(f.q() - 1, k, [&](const std::vector<unsigned>& s) {
        Symbol p = 1;
        for (auto x : s) p = f.mul(p, static_cast<Symbol>(x + 1));
        count += p == c;
    });
    return count;
}

// Revolving-door enumeration of k-subsets of {0..n-1} (Knuth 7.2.1.3, Algorithm R):
// consecutive subsets differ by exactly one element swap.
class RevolvingDoor {
public:
    RevolvingDoor(unsigned n, unsigned k) : n_(n), k_(k), c_(k + 2) {
        if (k > n) throw ParameterError("revolving door requires k <= n");
        for (unsigned j = 1; j <= k; ++j) c_[j] = j - 1;
        c_[k + 1] = n;
    }

    // Current subset in ascending order.
    std::vector<unsigned> current() const { return {c_.begin() + 1, c_.begin() + 1 + k_}; }

    // Advances; reports the element removed and the element added. False at the end.
    bool next(unsigned& out, unsigned& in) {
        if (k_ == 0 || k_ == n_) return false;
        if (k_ % 2 == 1) {
            if (c_[1] + 1 < c_[2]) {
                out = c_[1];
                in = ++c_[1];
                return true;
            }
            return step(2, true, out, in);
        }
        if (c_[1] > 0) {
            out = c_[1];
            in = --c_[1];
            return true;
        }
        return step(2, false, out, in);
    }

private:
    // R4 (decrease c_j) when `decrease`, else R5 (increase c_j), alternating upward in j.
    bool step(unsigned j, bool decrease, unsigned& out, unsigned& in) {
        while (j <= k_) {
            if (decrease) {
                if (c_[j] >= j) {
                    out = c_[j];
                    in = j - 2;
                    c_[j] = c_[j - 1];
                    c_[j - 1] = j - 2;
                    return true;
                }
            } else {
                if (c_[j] + 1 < c_[j + 1]) {
                    out = j - 2;
                    in = c_[j] + 1;
                    c_[j - 1] = c_[j];
                    c_[j] = c_[j] + 1;
                    return true;
                }
            }
            ++j;
            decrease = !decrease;
        }
        return false;
    }

    unsigned n_, k_;
    std::vector<unsigned> c_;  // c_[1..k] ascending, c_[k+1] = n sentinel
};

enum class BlockSetVariant { plain, based };

// Running coefficients of prod_{u in B} (x + u), highest degree first: coef[j] = sigma_j.
class EspTracker {
public:
    EspTracker(const FieldSpec& f, std::size_t k) : f_(f), coef_(k + 1, 0) { coef_[0] = 1; }
    void reset(const std::vector<Symbol>& b) { coef_ = esp_all(f_, b); }
    // Replace u_out by u_in: divide by (x + u_out) synthetically, multiply by (x + u_in).
    void swap(Symbol u_out, Symbol u_in) {
        const std::size_t k = coef_.size() - 1;
        std::vector<Symbol>& c = coef_;
        // quotient sigma'_j = sigma_j - u_out sigma'_{j-1}
        for (std::size_t j = 1; j < k; ++j) c[j] = f_.sub(c[j], f_.mul(u_out, c[j - 1]));
        c[k] = 0;
        for (std::size_t j = k; j >= 1; --j) c[j] = f_.add(c[j], f_.mul(u_in, c[j - 1]));
    }
    const std::vector<Symbol>& sigma() const { return coef_; }

private:
    const FieldSpec& f_;
    std::vector<Symbol> coef_;
};

// k-subsets of U (as ascending exponent lists i, u = gamma^i) with sigma_l(B) = 0 (plain)
// or sigma_l(B - a) = 0 for some a in B (based). Returned in lexicographic order.
inline std::vector<std::vector<unsigned>> block_sets(const QuadraticExtension& ext, unsigned k, unsigned l,
                                                     BlockSetVariant variant, const Budget& budget = default_budget()) {
    const auto& f = ext.ext();
    const auto& u = ext.unity_subgroup();
    const unsigned n = static_cast<unsigned>(u.size());
    if (l > k || k > n) throw ParameterError("block_sets requires l <= k <= q+1");
    if (binomial(n, k) > budget.subsets) throw CapacityError("C(q+1, k) exceeds the subset budget");
    std::vector<std::vector<unsigned>> out;
    RevolvingDoor door(n, k);
    EspTracker tracker(f, k);
    {
        std::vector<Symbol> b;
        for (auto i : door.current()) b.push_back(u[i]);
        tracker.reset(b);
    }
    auto accept = [&]() {
        const auto& s = tracker.sigma();
        if (variant == BlockSetVariant::plain) return s[l] == 0;
        for (auto i : door.current())
            if (shifted_esp(f, s, l, f.neg(u[i])) == 0) return true;
        return false;
    };
    unsigned rem = 0, add = 0;
    do {
        if (accept()) out.push_back(door.current());
        if (!door.next(rem, add)) break;
        tracker.swap(u[rem], u[add]);
    } while (true);
    std::sort(out.begin(), out.end());
    return out;
}

// Characteristic vectors over F_2 on the index set of U, for the classical design checks.
inline BlockFamily block_family_from_sets(const std::vector<std::vector<unsigned>>& sets, std::size_t n, unsigned k,
                                          std::string source) {
    BlockFamily fam{make_field(2), n, k, {}, std::move(source)};
    fam.blocks.reserve(sets.size());
    for (const auto& s : sets) fam.blocks.push_back(indicator(n, s));
    return fam;
}

}  // namespace qdesign
