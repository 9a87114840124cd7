#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qdesign {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; 0 outside 0 <= k <= n.
inline BigInt binomial_big(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Binomial in 64 bits; throws CapacityError on overflow.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    bool fits = true;
    for (std::int64_t i = 1; i <= k && fits; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        fits = acc <= std::numeric_limits<std::uint64_t>::max();
    }
    if (fits) return static_cast<std::uint64_t>(acc);
    BigInt r = binomial_big(n, k);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw CapacityError("binomial coefficient exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

inline BigInt pow_big(std::int64_t base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// base^e if it fits in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        r *= base;
    }
    return r;
}

// Table C[n][k] for 0 <= k <= n < size, saturating at UINT64_MAX.
class BinomialTable {
public:
    explicit BinomialTable(std::size_t size) : size_(size), c_(size * size, 0) {
        for (std::size_t n = 0; n < size; ++n) {
            at(n, 0) = 1;
            for (std::size_t k = 1; k <= n; ++k) {
                std::uint64_t a = at(n - 1, k - 1), b = at(n - 1, k);
                at(n, k) = (a > std::numeric_limits<std::uint64_t>::max() - b) ? std::numeric_limits<std::uint64_t>::max() : a + b;
            }
        }
    }
    std::uint64_t operator()(std::size_t n, std::size_t k) const {
        return (k > n || n >= size_) ? 0 : c_[n * size_ + k];
    }

private:
    std::uint64_t& at(std::size_t n, std::size_t k) { return c_[n * size_ + k]; }
    std::size_t size_;
    std::vector<std::uint64_t> c_;
};

inline bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::string to_string(const BigInt& x) { return x.str(); }

// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integral(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// Prime factors of n in increasing order, without repetition.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        f.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) f.push_back(n);
    return f;
}

// Moebius function by trial factorization.
inline int mobius(std::uint64_t n) {
    if (n == 0) throw ParameterError("mobius(0) is undefined");
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// Work limits. Every exhaustive loop checks one of these before it starts.
struct Budget {
    std::uint64_t codewords = std::uint64_t{1} << 32;   // q^k for direct enumeration
    std::uint64_t unfiltered = std::uint64_t{1} << 28;  // above this a weight filter is mandatory
    std::uint64_t dense_counters = std::uint64_t{1} << 24;
    std::uint64_t counters = std::uint64_t{1} << 32;    // associative counter table entries
    std::uint64_t syndromes = std::uint64_t{1} << 24;   // q^(n-k) for the covering-radius sweep
    std::uint64_t subsets = std::uint64_t{1} << 32;     // C(n,k) for subset iteration
};

// Parses "N" or "2^N".
inline std::uint64_t parse_budget_value(const std::string& s) {
    auto caret = s.find('^');
    try {
        std::size_t used = 0;
        if (caret == std::string::npos) {
            auto v = std::stoull(s, &used);
            if (used != s.size()) throw ParameterError("bad budget value: " + s);
            return v;
        }
        auto base = std::stoull(s.substr(0, caret), &used);
        if (used != caret) throw ParameterError("bad budget value: " + s);
        auto e = std::stoul(s.substr(caret + 1), &used);
        if (used != s.size() - caret - 1) throw ParameterError("bad budget value: " + s);
        auto v = checked_pow(base, static_cast<unsigned>(e));
        if (!v) throw ParameterError("budget value overflows 64 bits: " + s);
        return *v;
    } catch (const std::logic_error&) {
        throw ParameterError("bad budget value: " + s);
    }
}

// Defaults, with QDESIGN_BUDGET (if set) replacing the codeword budget.
inline Budget default_budget() {
    Budget b;
    if (const char* env = std::getenv("QDESIGN_BUDGET"); env && *env) {
        b.codewords = parse_budget_value(env);
        b.unfiltered = std::min(b.unfiltered, b.codewords);
    }
    return b;
}

}  // namespace qdesign
