#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "linear_code.hpp"
#include "numeric.hpp"
#include "parallel.hpp"

namespace qdesign {

// Set of admissible codeword weights; default-constructed admits all.
class WeightFilter {
public:
    WeightFilter() = default;
    WeightFilter(std::initializer_list<unsigned> weights) : WeightFilter(std::vector<unsigned>(weights)) {}
    explicit WeightFilter(const std::vector<unsigned>& weights) : restricted_(true) {
        for (auto w : weights) {
            if (w >= allowed_.size()) allowed_.resize(w + 1, false);
            allowed_[w] = true;
        }
    }
    bool restricted() const { return restricted_; }
    bool admits(unsigned w) const { return !restricted_ || (w < allowed_.size() && allowed_[w]); }

private:
    bool restricted_ = false;
    std::vector<bool> allowed_;
};

namespace detail {

struct XorAdd {
    Symbol operator()(Symbol a, Symbol b) const { return static_cast<Symbol>(a ^ b); }
};
struct FieldAdd {
    const FieldSpec* f;
    Symbol operator()(Symbol a, Symbol b) const { return f->add(a, b); }
};

template <class Fn>
decltype(auto) with_adder(const FieldSpec& f, Fn&& fn) {
    if (f.p() == 2) return fn(XorAdd{});
    return fn(FieldAdd{&f});
}

}  // namespace detail

// Streams codewords in lexicographic message order (first message digit most
// significant). Row multiples lambda*g_r are tabulated once. The last generator row is
// handled in bulk: for a fixed prefix sum b, coordinate j of b + lambda*g vanishes for
// exactly one lambda when g_j != 0, so the weights of all q extensions cost O(n + q).
class CodewordEnumerator {
public:
    explicit CodewordEnumerator(const LinearCode& code, const Budget& budget = default_budget())
        : code_(code), budget_(budget) {
        const auto& f = code.field();
        const std::size_t k = code.k(), n = code.n(), q = f.q();
        auto total = checked_pow(q, static_cast<unsigned>(k));
        if (!total) throw CapacityError("q^k exceeds 64 bits; use the dual code or MacWilliams");
        total_ = *total;
        if (BigInt(k) * q * n > BigInt(1) << 28) throw CapacityError("row-multiple tables exceed 2^28 symbols");
        multiples_.resize(k);
        for (std::size_t r = 0; r < k; ++r) {
            multiples_[r].resize(q);
            for (std::size_t lam = 0; lam < q; ++lam) {
                Vector v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = f.mul(static_cast<Symbol>(lam), code.generator()[r][j]);
                multiples_[r][lam] = std::move(v);
            }
        }
        if (k > 0) {
            const auto& g = code.generator()[k - 1];
            log_inv_last_.assign(n, 0);
            for (std::size_t j = 0; j < n; ++j)
                if (g[j]) log_inv_last_[j] = (q - 1 - f.log(g[j])) % (q - 1);
        }
    }

    std::uint64_t total() const { return total_; }
    const LinearCode& code() const { return code_; }

    void check_budget(IndexRange range, const WeightFilter& filter) const {
        if (range.size() > budget_.codewords)
            throw CapacityError("enumeration of " + std::to_string(range.size()) + " codewords exceeds the budget of " +
                                std::to_string(budget_.codewords) + "; use a weight filter and partitioned ranges");
        if (!filter.restricted() && range.size() > budget_.unfiltered)
            throw CapacityError("enumerating " + std::to_string(range.size()) +
                                " codewords without a weight filter exceeds the unfiltered limit of " +
                                std::to_string(budget_.unfiltered) + "; pass a weight filter");
    }

    // visit(const Vector& codeword, unsigned weight) for every admitted codeword in range.
    template <class Visit>
    void run(IndexRange range, const WeightFilter& filter, Visit&& visit) const {
        check_budget(range, filter);
        const std::size_t n = code_.n();
        Vector cw(n);
        detail::with_adder(code_.field(), [&](auto add) { run_impl(range, add, [&](const Vector& base, const auto& zeros, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t lam = lo; lam < hi; ++lam) {
                unsigned w = static_cast<unsigned>(n - zeros[lam]);
                if (!filter.admits(w)) continue;
                if (multiples_.empty()) {
                    visit(base, w);
                    continue;
                }
                const Vector& m = multiples_.back()[lam];
                for (std::size_t j = 0; j < n; ++j) cw[j] = add(base[j], m[j]);
                visit(static_cast<const Vector&>(cw), w);
            }
        }); });
    }

    // Adds the weight histogram of the codewords in range to hist (size n+1).
    void histogram(IndexRange range, std::vector<std::uint64_t>& hist) const {
        if (range.size() > budget_.codewords)
            throw CapacityError("weight distribution over " + std::to_string(range.size()) +
                                " codewords exceeds the budget; use MacWilliams from the dual");
        detail::with_adder(code_.field(), [&](auto add) {
            run_impl(range, add, [&](const Vector&, const auto& zeros, std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t lam = lo; lam < hi; ++lam) ++hist[code_.n() - zeros[lam]];
            });
        });
    }

private:
    // block(base, zeros, lo, hi): zeros[lam] = number of zero coordinates of base + lam*g_last.
    template <class Add, class Block>
    void run_impl(IndexRange range, Add add, Block&& block) const {
        const auto& f = code_.field();
        const std::size_t k = code_.k(), n = code_.n(), q = f.q();
        if (range.end > total_) throw ParameterError("message range exceeds q^k");
        if (range.size() == 0) return;
        if (k == 0) {
            std::vector<std::uint32_t> zeros{static_cast<std::uint32_t>(n)};
            block(Vector(n, 0), zeros, 0, 1);
            return;
        }
        const std::uint64_t first_prefix = range.begin / q, last_prefix = (range.end - 1) / q;
        // digits of the prefix, most significant first; sums[i] = sum of the first i row multiples.
        std::vector<std::uint64_t> digit(k - 1, 0);
        {
            std::uint64_t x = first_prefix;
            for (std::size_t i = k - 1; i-- > 0;) {
                digit[i] = x % q;
                x /= q;
            }
        }
        std::vector<Vector> sums(k, Vector(n, 0));
        auto rebuild = [&](std::size_t from) {
            for (std::size_t i = from; i + 1 < k; ++i) {
                const Vector& m = multiples_[i][digit[i]];
                for (std::size_t j = 0; j < n; ++j) sums[i + 1][j] = add(sums[i][j], m[j]);
            }
        };
        rebuild(0);

        const Vector& g = code_.generator()[k - 1];
        const Symbol* exp = f.exp_table();
        const std::uint32_t* log = f.log_table();
        const bool char2 = f.p() == 2;
        std::vector<std::uint32_t> zeros(q);
        for (std::uint64_t prefix = first_prefix;; ++prefix) {
            const Vector& base = sums[k - 1];
            std::uint32_t fixed_zeros = 0;
            std::fill(zeros.begin(), zeros.end(), 0);
            for (std::size_t j = 0; j < n; ++j) {
                const Symbol b = base[j];
                if (!g[j]) {
                    fixed_zeros += b == 0;
                } else if (!b) {
                    ++zeros[0];
                } else {
                    const Symbol nb = char2 ? b : f.neg(b);
                    ++zeros[exp[log[nb] + log_inv_last_[j]]];
                }
            }
            if (fixed_zeros)
                for (auto& z : zeros) z += fixed_zeros;
            const std::uint64_t lo = prefix == first_prefix ? range.begin % q : 0;
            const std::uint64_t hi = prefix == last_prefix ? (range.end - 1) % q + 1 : q;
            block(base, zeros, lo, hi);
            if (prefix == last_prefix) break;
            std::size_t i = k - 1;
            while (i-- > 0) {
                if (++digit[i] < q) break;
                digit[i] = 0;
            }
            rebuild(i);
        }
    }

    const LinearCode& code_;
    Budget budget_;
    std::uint64_t total_ = 1;
    std::vector<std::vector<Vector>> multiples_;
    std::vector<std::uint32_t> log_inv_last_;
};

// Visits codewords (optionally only those of admitted weights) in lexicographic message order.
template <class Visit>
void enumerate_codewords(const LinearCode& code, const WeightFilter& filter, Visit&& visit,
                         std::optional<IndexRange> range = std::nullopt, const Budget& budget = default_budget()) {
    CodewordEnumerator e(code, budget);
    e.run(range.value_or(IndexRange{0, e.total()}), filter, visit);
}

// Splits the message space into one range per worker; visit(worker, codeword, weight).
// Visits within a worker are in message order; workers own disjoint ranges.
template <class Visit>
void enumerate_codewords_parallel(const LinearCode& code, const WeightFilter& filter, unsigned threads, Visit&& visit,
                                  const Budget& budget = default_budget()) {
    CodewordEnumerator e(code, budget);
    e.check_budget({0, e.total()}, filter);
    parallel_for(e.total(), threads, [&](IndexRange r, unsigned worker) {
        e.run(r, filter, [&](const Vector& c, unsigned w) { visit(worker, c, w); });
    });
}

// A_0..A_n.
struct WeightProfile {
    std::vector<BigInt> counts;

    std::size_t n() const { return counts.empty() ? 0 : counts.size() - 1; }
    BigInt total() const {
        BigInt s = 0;
        for (auto& c : counts) s += c;
        return s;
    }
    const BigInt& operator[](std::size_t w) const { return counts[w]; }
    // Nonzero weights w >= 1 with A_w > 0, increasing.
    std::vector<unsigned> weights() const {
        std::vector<unsigned> w;
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] != 0) w.push_back(static_cast<unsigned>(i));
        return w;
    }
    friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

inline WeightProfile weight_distribution_direct(const LinearCode& code, unsigned threads = default_threads(),
                                                const Budget& budget = default_budget()) {
    CodewordEnumerator e(code, budget);
    const std::size_t n = code.n();
    std::vector<std::vector<std::uint64_t>> hist(std::max(1u, threads), std::vector<std::uint64_t>(n + 1, 0));
    if (e.total() > budget.codewords)
        throw CapacityError("q^k = " + std::to_string(e.total()) + " exceeds the codeword budget");
    parallel_for(e.total(), threads, [&](IndexRange r, unsigned worker) { e.histogram(r, hist[worker]); });
    WeightProfile p;
    p.counts.assign(n + 1, 0);
    for (auto& h : hist)
        for (std::size_t w = 0; w <= n; ++w) p.counts[w] += h[w];
    return p;
}

// Krawtchouk polynomial K_j(i) for F_q^n.
inline BigInt krawtchouk(std::size_t n, unsigned q, std::size_t j, std::size_t i) {
    BigInt s = 0;
    for (std::size_t h = 0; h <= j; ++h) {
        BigInt term = binomial_big(static_cast<std::int64_t>(i), static_cast<std::int64_t>(h)) *
                      binomial_big(static_cast<std::int64_t>(n - i), static_cast<std::int64_t>(j - h)) *
                      pow_big(q - 1, static_cast<unsigned>(j - h));
        if (h % 2) s -= term;
        else s += term;
    }
    return s;
}

// Weight distribution of C from that of C^perp, where C^perp has dimension k_perp.
inline WeightProfile macwilliams_transform(const WeightProfile& dual_profile, unsigned q, std::size_t k_perp) {
    const std::size_t n = dual_profile.n();
    const BigInt size = pow_big(q, static_cast<unsigned>(k_perp));
    WeightProfile out;
    out.counts.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt s = 0;
        for (std::size_t i = 0; i <= n; ++i)
            if (dual_profile.counts[i] != 0) s += dual_profile.counts[i] * krawtchouk(n, q, j, i);
        if (s % size != 0) throw InternalError("MacWilliams transform produced a non-integer count");
        out.counts[j] = s / size;
    }
    return out;
}

enum class WeightMethod { direct, macwilliams, automatic };

inline WeightProfile weight_distribution(const LinearCode& code, WeightMethod method = WeightMethod::automatic,
                                         unsigned threads = default_threads(), const Budget& budget = default_budget()) {
    if (method == WeightMethod::automatic)
        method = code.k() <= code.n() - code.k() ? WeightMethod::direct : WeightMethod::macwilliams;
    if (method == WeightMethod::direct) return weight_distribution_direct(code, threads, budget);
    LinearCode d = dual(code);
    return macwilliams_transform(weight_distribution_direct(d, threads, budget), code.q(), d.k());
}

}  // namespace qdesign
