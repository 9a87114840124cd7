#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace qdesign {

// Element of F_q as an index: the representative sum c_i alpha^i is stored as
// sum c_i p^i (little-endian base-p digits). 0 is zero, 1 is one.
using Symbol = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

// Dense polynomials over F_p, coefficients low to high.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// a mod f, f monic of degree >= 1.
inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    trim(a);
    while (a.size() > n) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - 1 - n;
        for (std::size_t i = 0; i <= n; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return poly_mod(std::move(r), f, p);
}

// g(y) mod f by Horner.
inline Poly poly_compose_mod(const Poly& g, const Poly& y, const Poly& f, std::uint64_t p) {
    Poly acc;
    for (std::size_t i = g.size(); i-- > 0;) {
        acc = poly_mulmod(acc, y, f, p);
        if (acc.empty()) acc.push_back(0);
        acc[0] = (acc[0] + g[i]) % p;
        trim(acc);
    }
    return acc;
}

// True when x has multiplicative order exactly p^n - 1 modulo f.
// This forces F_p[x]/f to be a field, so f is irreducible as well.
inline bool x_is_primitive(const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    const std::uint64_t order = *checked_pow(p, static_cast<unsigned>(n)) - 1;
    const Poly x = n == 1 ? Poly{(p - f[0]) % p} : Poly{0, 1};
    if (poly_powmod(x, order, f, p) != Poly{1}) return false;
    for (auto r : prime_factors(order))
        if (poly_powmod(x, order / r, f, p) == Poly{1}) return false;
    return true;
}

// Monic irreducibility by trial division against every monic polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = *checked_pow(p, static_cast<unsigned>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = c % p;
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// Conway polynomial C_{p,n} (coefficients low to high, monic), computed from the
// definition: the least primitive polynomial under the ordering of
// ((-1)^(n-i) c_i)_{i=n-1..0}, compatible with C_{p,d} for every proper d | n.
inline std::vector<unsigned> conway_by_search(unsigned p, unsigned n);

// Shipped table of Conway polynomials. Every entry equals conway_by_search(p, n);
// the unit tests re-derive each one.
inline const std::vector<unsigned>* conway_table_lookup(unsigned p, unsigned n) {
    static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
        {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 14}, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 15}, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 16}, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
        {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
        {{3, 9}, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1}},
        {{3, 10}, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{5, 5}, {3, 4, 0, 0, 0, 1}},
        {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
        {{7, 5}, {4, 1, 0, 0, 0, 1}},
        {{11, 1}, {9, 1}},
        {{11, 2}, {2, 7, 1}},
        {{11, 3}, {9, 2, 0, 1}},
        {{11, 4}, {2, 10, 8, 0, 1}},
        {{13, 1}, {11, 1}},
        {{13, 2}, {2, 12, 1}},
        {{13, 3}, {11, 2, 0, 1}},
        {{13, 4}, {2, 12, 3, 0, 1}},
    };
    auto it = table.find({p, n});
    return it == table.end() ? nullptr : &it->second;
}

inline std::vector<unsigned> conway_polynomial(unsigned p, unsigned n) {
    if (auto* t = conway_table_lookup(p, n)) return *t;
    return conway_by_search(p, n);
}

inline std::vector<unsigned> conway_by_search(unsigned p, unsigned n) {
    using detail::Poly;
    const auto total = checked_pow(p, n);
    if (!total || *total > kMaxFieldOrder) throw ParameterError("field order exceeds 2^16");
    std::vector<std::pair<unsigned, Poly>> subfields;  // (d, C_{p,d}) for proper d | n
    for (unsigned d = 1; d < n; ++d) {
        if (n % d) continue;
        auto c = conway_polynomial(p, d);
        subfields.emplace_back(d, Poly(c.begin(), c.end()));
    }
    const std::uint64_t order = *total - 1;
    // a = (a_{n-1}, ..., a_0) counted as a base-p number with a_{n-1} most significant.
    for (std::uint64_t code = 0; code < *total; ++code) {
        Poly f(n + 1, 0);
        f[n] = 1;
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i, c /= p) {
            std::uint64_t a = c % p;
            bool negate = ((n - i) & 1u) != 0;
            f[i] = negate ? (p - a) % p : a;
        }
        if (f[0] == 0) continue;
        if (!detail::x_is_primitive(f, p)) continue;
        bool compatible = true;
        const Poly x = n == 1 ? Poly{(p - f[0]) % p} : Poly{0, 1};
        for (auto& [d, g] : subfields) {
            std::uint64_t sub_order = *checked_pow(p, d) - 1;
            Poly y = detail::poly_powmod(x, order / sub_order, f, p);
            if (!detail::poly_compose_mod(g, y, f, p).empty()) {
                compatible = false;
                break;
            }
        }
        if (compatible) return std::vector<unsigned>(f.begin(), f.end());
    }
    throw InternalError("no Conway polynomial found");
}

// Immutable description of F_q with arithmetic tables; cheap to copy (shared storage).
class FieldSpec {
public:
    FieldSpec() = default;

    unsigned p() const { return d_->p; }
    unsigned m() const { return d_->m; }
    unsigned q() const { return d_->q; }
    const std::vector<unsigned>& modulus() const { return d_->modulus; }
    Symbol generator() const { return d_->exp[1]; }
    bool valid() const { return d_ != nullptr; }

    Symbol add(Symbol a, Symbol b) const {
        if (d_->p == 2) return static_cast<Symbol>(a ^ b);
        if (!d_->add_table.empty()) return d_->add_table[std::size_t(a) * d_->q + b];
        return add_digits(a, b);
    }
    Symbol neg(Symbol a) const { return d_->neg[a]; }
    Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        return d_->exp[d_->log[a] + d_->log[b]];
    }
    Symbol inv(Symbol a) const {
        if (a == 0) throw DomainError("inverse of zero");
        return d_->exp[(d_->q - 1 - d_->log[a]) % (d_->q - 1)];
    }
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::int64_t e) const {
        if (a == 0) {
            if (e < 0) throw DomainError("negative power of zero");
            return e == 0 ? 1 : 0;
        }
        const std::int64_t n = d_->q - 1;
        std::int64_t r = (static_cast<std::int64_t>(d_->log[a]) * (e % n)) % n;
        if (r < 0) r += n;
        return d_->exp[r];
    }
    // discrete log to base generator(); domain error at zero.
    std::uint32_t log(Symbol a) const {
        if (a == 0) throw DomainError("discrete log of zero");
        return d_->log[a];
    }
    // generator()^e for any integer e.
    Symbol exp(std::int64_t e) const {
        const std::int64_t n = d_->q - 1;
        e %= n;
        if (e < 0) e += n;
        return d_->exp[e];
    }
    // Image of an integer in the prime subfield.
    Symbol from_int(std::int64_t c) const {
        std::int64_t r = c % static_cast<std::int64_t>(d_->p);
        return static_cast<Symbol>(r < 0 ? r + d_->p : r);
    }
    std::vector<unsigned> digits(Symbol a) const {
        std::vector<unsigned> out(d_->m);
        for (unsigned i = 0; i < d_->m; ++i, a /= d_->p) out[i] = a % d_->p;
        return out;
    }
    Symbol from_digits(const std::vector<unsigned>& dig) const {
        unsigned r = 0;
        for (std::size_t i = dig.size(); i-- > 0;) r = r * d_->p + dig[i] % d_->p;
        return static_cast<Symbol>(r);
    }

    // Raw tables for hot loops: exp has length 2(q-1), log[0] is unused.
    const std::uint32_t* log_table() const { return d_->log.data(); }
    const Symbol* exp_table() const { return d_->exp.data(); }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.d_ == b.d_ || (a.d_ && b.d_ && a.p() == b.p() && a.modulus() == b.modulus());
    }

    // Builds F_{p^m} from a monic modulus of degree m. Verifies irreducibility and primitivity.
    static FieldSpec from_modulus(unsigned p, std::vector<unsigned> modulus);

private:
    struct Data {
        unsigned p = 0, m = 0, q = 0;
        std::vector<unsigned> modulus;
        std::vector<Symbol> exp;         // 2(q-1) entries
        std::vector<std::uint32_t> log;  // q entries
        std::vector<Symbol> neg;
        std::vector<Symbol> add_table;   // q*q entries, odd p and q <= 1024 only
    };

    Symbol add_digits(Symbol a, Symbol b) const {
        unsigned r = 0, scale = 1;
        for (unsigned i = 0; i < d_->m; ++i, a /= d_->p, b /= d_->p, scale *= d_->p)
            r += ((a % d_->p + b % d_->p) % d_->p) * scale;
        return static_cast<Symbol>(r);
    }

    std::shared_ptr<const Data> d_;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (p, m) with q = p^m, or nullopt when q is not a prime power.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    unsigned m = 0;
    for (std::uint64_t r = q; r > 1; r /= f[0]) ++m;
    return std::make_pair(static_cast<unsigned>(f[0]), m);
}

inline FieldSpec FieldSpec::from_modulus(unsigned p, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1) throw ParameterError("modulus must be monic of degree >= 1");
    const unsigned m = static_cast<unsigned>(modulus.size() - 1);
    auto q64 = checked_pow(p, m);
    if (!q64 || *q64 > kMaxFieldOrder) throw ParameterError("field order exceeds 2^16");
    for (auto c : modulus)
        if (c >= p) throw ParameterError("modulus coefficient out of range");
    detail::Poly f(modulus.begin(), modulus.end());
    if (!detail::irreducible_by_trial_division(f, p)) throw ParameterError("modulus is reducible");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = static_cast<unsigned>(*q64);
    d->modulus = std::move(modulus);
    const unsigned q = d->q;

    // Multiply by a root alpha of the modulus: shift digits up, fold the top digit back.
    d->exp.assign(2 * (q - 1), 0);
    d->log.assign(q, 0);
    std::vector<unsigned> cur(m, 0);
    cur[0] = 1;
    std::vector<bool> seen(q, false);
    for (unsigned i = 0; i < q - 1; ++i) {
        unsigned idx = 0;
        for (unsigned j = m; j-- > 0;) idx = idx * p + cur[j];
        if (idx == 0 || seen[idx]) throw ParameterError("modulus root is not primitive");
        seen[idx] = true;
        d->exp[i] = static_cast<Symbol>(idx);
        d->log[idx] = i;
        unsigned carry = cur[m - 1];
        for (unsigned j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        for (unsigned j = 0; j < m; ++j) cur[j] = (cur[j] + (p - carry) * d->modulus[j]) % p;
    }
    for (unsigned i = 0; i < q - 1; ++i) d->exp[i + q - 1] = d->exp[i];

    d->neg.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        unsigned r = 0, scale = 1, x = a;
        for (unsigned i = 0; i < m; ++i, x /= p, scale *= p) r += ((p - x % p) % p) * scale;
        d->neg[a] = static_cast<Symbol>(r);
    }

    FieldSpec out;
    out.d_ = d;
    if (p != 2 && q <= 1024) {
        d->add_table.resize(std::size_t(q) * q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) d->add_table[std::size_t(a) * q + b] = out.add_digits(a, b);
    }
    return out;
}

// F_q under the shipped Conway modulus; parameter error unless q = p^m <= 2^16.
inline FieldSpec make_field(std::uint64_t q) {
    auto pm = prime_power(q);
    if (!pm) throw ParameterError(std::to_string(q) + " is not a prime power");
    if (q > kMaxFieldOrder) throw ParameterError("field order exceeds 2^16");
    static std::mutex mu;
    static std::map<std::uint64_t, FieldSpec> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(q); it != cache.end()) return it->second;
    auto [p, m] = *pm;
    return cache[q] = FieldSpec::from_modulus(p, conway_polynomial(p, m));
}

inline std::uint32_t discrete_log(const FieldSpec& f, Symbol x) { return f.log(x); }

}  // namespace qdesign
