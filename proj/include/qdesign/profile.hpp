#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "enumerate.hpp"

namespace qdesign {

struct CodeProfile {
    unsigned q = 0;
    std::size_t n = 0, k = 0;
    unsigned d = 0, d_dual = 0;  // n+1 when the code has no nonzero codeword
    unsigned s = 0, s_dual = 0;
    unsigned e = 0;
    std::optional<unsigned> rho;  // exact covering radius, when the syndrome sweep ran
    unsigned rho_volume = 0;  // least rho with |C| * V_q(n, rho) >= q^n
    unsigned divisor = 1;
    unsigned h = 0, h_dual = 0;
    std::vector<unsigned> weights, dual_weights;
    WeightProfile distribution, dual_distribution;

    bool mds() const { return d == n - k + 1; }
    std::optional<bool> perfect() const {
        if (!rho) return std::nullopt;
        return e == *rho;
    }
};

// Largest h <= n with h - floor((h+q-2)/(q-1)) < d: supports of weights in [d, h]
// are shared by exactly q-1 codewords.
inline unsigned repeat_bound(std::size_t n, unsigned q, unsigned d) {
    for (std::size_t h = n + 1; h-- > 0;) {
        std::int64_t lhs = static_cast<std::int64_t>(h) - static_cast<std::int64_t>((h + q - 2) / (q - 1));
        if (lhs < static_cast<std::int64_t>(d)) return static_cast<unsigned>(h);
    }
    return 0;
}

// Least rho with q^k * sum_{i<=rho} C(n,i)(q-1)^i >= q^n.
inline unsigned sphere_covering_radius(std::size_t n, std::size_t k, unsigned q) {
    const BigInt target = pow_big(q, static_cast<unsigned>(n - k));
    BigInt vol = 0;
    for (unsigned r = 0; r <= n; ++r) {
        vol += binomial_big(static_cast<std::int64_t>(n), r) * pow_big(q - 1, r);
        if (vol >= target) return r;
    }
    return static_cast<unsigned>(n);
}

// Breadth-first search over the q^(n-k) syndromes H x, one step per scaled column
// lambda * H e_j. dist[s] is the coset-leader weight of syndrome s; with parents
// recorded, leader(s) rebuilds a minimum-weight representative.
class SyndromeGraph {
public:
    SyndromeGraph(const LinearCode& code, const Budget& budget, bool record_parents)
        : code_(code), check_(dual(code)), q_(code.q()), r_(code.n() - code.k()) {
        const auto& f = code.field();
        auto total = checked_pow(q_, static_cast<unsigned>(r_));
        if (!total || *total > budget.syndromes)
            throw CapacityError("q^(n-k) syndromes exceed the budget of " + std::to_string(budget.syndromes));
        total_ = *total;
        std::vector<std::uint64_t> seen;
        for (std::size_t j = 0; j < code.n(); ++j) {
            for (unsigned lam = 1; lam < q_; ++lam) {
                std::vector<Symbol> s(r_);
                std::uint64_t enc = 0;
                for (std::size_t i = r_; i-- > 0;) {
                    s[i] = f.mul(static_cast<Symbol>(lam), check_.generator()[i][j]);
                    enc = enc * q_ + s[i];
                }
                if (enc == 0 || std::find(seen.begin(), seen.end(), enc) != seen.end()) continue;
                seen.push_back(enc);
                steps_.push_back(std::move(s));
                step_origin_.emplace_back(static_cast<unsigned>(j), static_cast<Symbol>(lam));
            }
        }
        dist_.assign(total_, kUnreached);
        if (record_parents) {
            parent_.assign(total_, 0);
            via_.assign(total_, 0);
        }
        std::vector<std::uint64_t> frontier{0}, next;
        dist_[0] = 0;
        std::uint64_t visited = 1;
        unsigned level = 0;
        std::vector<Symbol> digits(r_);
        // In characteristic 2 the base-q encoding packs m-bit digits, so adding syndromes
        // is XOR of their encodings.
        std::vector<std::uint64_t> step_enc;
        for (const auto& st : steps_) {
            std::uint64_t enc = 0;
            for (std::size_t i = r_; i-- > 0;) enc = enc * q_ + st[i];
            step_enc.push_back(enc);
        }
        const bool xor_steps = f.p() == 2;
        while (!frontier.empty() && visited < total_) {
            next.clear();
            for (auto node : frontier) {
                if (xor_steps) {
                    for (std::size_t k = 0; k < step_enc.size(); ++k) {
                        const std::uint64_t enc = node ^ step_enc[k];
                        if (dist_[enc] != kUnreached) continue;
                        dist_[enc] = static_cast<std::uint8_t>(level + 1);
                        if (record_parents) {
                            parent_[enc] = node;
                            via_[enc] = static_cast<std::uint32_t>(k);
                        }
                        ++visited;
                        next.push_back(enc);
                    }
                    continue;
                }
                std::uint64_t x = node;
                for (std::size_t i = 0; i < r_; ++i, x /= q_) digits[i] = static_cast<Symbol>(x % q_);
                for (std::size_t k = 0; k < steps_.size(); ++k) {
                    const auto& st = steps_[k];
                    std::uint64_t enc = 0;
                    for (std::size_t i = r_; i-- > 0;) enc = enc * q_ + f.add(digits[i], st[i]);
                    if (dist_[enc] != kUnreached) continue;
                    dist_[enc] = static_cast<std::uint8_t>(level + 1);
                    if (record_parents) {
                        parent_[enc] = node;
                        via_[enc] = static_cast<std::uint32_t>(k);
                    }
                    ++visited;
                    next.push_back(enc);
                }
            }
            ++level;
            frontier.swap(next);
        }
        if (visited < total_) throw InternalError("syndrome search did not reach every coset");
        radius_ = level;
    }

    std::uint64_t size() const { return total_; }
    unsigned radius() const { return radius_; }
    unsigned leader_weight(std::uint64_t s) const { return dist_[s]; }

    // Minimum-weight vector with syndrome s (requires recorded parents).
    Vector leader(std::uint64_t s) const {
        if (parent_.empty()) throw ParameterError("syndrome graph built without parents");
        const auto& f = code_.field();
        Vector x(code_.n(), 0);
        while (s != 0) {
            auto [j, lam] = step_origin_[via_[s]];
            x[j] = f.add(x[j], lam);
            s = parent_[s];
        }
        return x;
    }

private:
    static constexpr std::uint8_t kUnreached = 0xFF;
    const LinearCode& code_;
    LinearCode check_;
    unsigned q_;
    std::size_t r_;
    std::uint64_t total_ = 0;
    unsigned radius_ = 0;
    std::vector<std::vector<Symbol>> steps_;
    std::vector<std::pair<unsigned, Symbol>> step_origin_;
    std::vector<std::uint8_t> dist_;
    std::vector<std::uint64_t> parent_;
    std::vector<std::uint32_t> via_;
};

// Covering radius = largest coset-leader weight; nullopt when q^(n-k) exceeds the
// syndrome budget.
inline std::optional<unsigned> covering_radius(const LinearCode& code, const Budget& budget = default_budget()) {
    if (code.k() == code.n()) return 0u;
    auto total = checked_pow(code.q(), static_cast<unsigned>(code.n() - code.k()));
    if (!total || *total > budget.syndromes) return std::nullopt;
    return SyndromeGraph(code, budget, false).radius();
}

inline CodeProfile code_profile(const LinearCode& code, bool compute_rho = true, unsigned threads = default_threads(),
                                const Budget& budget = default_budget()) {
    CodeProfile p;
    p.q = code.q();
    p.n = code.n();
    p.k = code.k();
    p.distribution = weight_distribution(code, WeightMethod::automatic, threads, budget);
    // The dual profile follows by MacWilliams from whichever side was enumerated.
    p.dual_distribution = macwilliams_transform(p.distribution, p.q, p.k);
    p.weights = p.distribution.weights();
    p.dual_weights = p.dual_distribution.weights();
    p.d = p.weights.empty() ? static_cast<unsigned>(p.n + 1) : p.weights.front();
    p.d_dual = p.dual_weights.empty() ? static_cast<unsigned>(p.n + 1) : p.dual_weights.front();
    p.s = static_cast<unsigned>(p.weights.size());
    p.s_dual = static_cast<unsigned>(p.dual_weights.size());
    p.e = p.d >= 1 ? (p.d - 1) / 2 : 0;
    unsigned g = 0;
    for (auto w : p.weights) g = std::gcd(g, w);
    p.divisor = g > 1 ? g : 1;
    p.h = repeat_bound(p.n, p.q, p.d);
    p.h_dual = repeat_bound(p.n, p.q, p.d_dual);
    p.rho_volume = sphere_covering_radius(p.n, p.k, p.q);
    if (compute_rho) p.rho = covering_radius(code, budget);
    return p;
}

}  // namespace qdesign
