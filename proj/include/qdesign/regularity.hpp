#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profile.hpp"

namespace qdesign {

// B_{x,i} = #{v in C : d(x, v) = i}, i = 0..n. Equals the weight distribution of x + C.
inline std::vector<std::uint64_t> outer_distribution(const LinearCode& code, const Vector& x,
                                                     const Budget& budget = default_budget()) {
    if (x.size() != code.n()) throw ParameterError("outer distribution: vector length differs from n");
    std::vector<std::uint64_t> b(code.n() + 1, 0);
    enumerate_codewords(
        code, WeightFilter{},
        [&](const Vector& v, unsigned) {
            unsigned w = 0;
            for (std::size_t j = 0; j < v.size(); ++j) w += x[j] != v[j];
            ++b[w];
        },
        std::nullopt, budget);
    return b;
}

struct RegularityReport {
    unsigned t = 0;
    bool regular = false;
    bool exhaustive = true;  // false: deterministic coset sample, result is partial
    std::uint64_t cosets_checked = 0;
    unsigned rho = 0;
    // On failure: two coset representatives at the same distance from C with different
    // outer distributions.
    std::optional<Vector> witness_a, witness_b;
    std::string note;
};

// Largest number of cosets per leader weight examined when q^n exceeds the exhaustive limit.
inline constexpr std::uint64_t kRegularitySamplePerWeight = 64;

// t-regularity: for every x with d(x, C) <= t the whole outer distribution B_{x,0..n}
// depends only on d(x, C). B_x is constant on cosets, so one representative per coset
// (syndrome) suffices. Exhaustive when q^n <= 2^24; otherwise at most
// kRegularitySamplePerWeight cosets per leader weight, spread evenly over syndrome order.
inline RegularityReport t_regular(const LinearCode& code, unsigned t, const Budget& budget = default_budget()) {
    RegularityReport rep;
    rep.t = t;
    SyndromeGraph graph(code, budget, true);
    rep.rho = graph.radius();
    const auto qn = checked_pow(code.q(), static_cast<unsigned>(code.n()));
    rep.exhaustive = qn && *qn <= (std::uint64_t{1} << 24);
    if (t > rep.rho) rep.note = "t exceeds the covering radius; every coset is in scope";

    std::vector<std::vector<std::uint64_t>> by_weight(std::min<unsigned>(t, rep.rho) + 1);
    for (std::uint64_t s = 0; s < graph.size(); ++s) {
        unsigned lw = graph.leader_weight(s);
        if (lw <= t) by_weight[lw].push_back(s);
    }
    std::map<unsigned, std::pair<std::vector<std::uint64_t>, Vector>> reference;
    rep.regular = true;
    for (unsigned lw = 0; lw < by_weight.size() && rep.regular; ++lw) {
        const auto& cosets = by_weight[lw];
        std::uint64_t stride = 1;
        if (!rep.exhaustive && cosets.size() > kRegularitySamplePerWeight)
            stride = cosets.size() / kRegularitySamplePerWeight;
        for (std::size_t idx = 0; idx < cosets.size(); idx += stride) {
            Vector x = graph.leader(cosets[idx]);
            auto b = outer_distribution(code, x, budget);
            ++rep.cosets_checked;
            auto it = reference.find(lw);
            if (it == reference.end()) {
                reference.emplace(lw, std::make_pair(std::move(b), std::move(x)));
            } else if (it->second.first != b) {
                rep.regular = false;
                rep.witness_a = it->second.second;
                rep.witness_b = x;
                break;
            }
        }
    }
    if (!rep.exhaustive) rep.note += (rep.note.empty() ? "" : "; ") + std::string("partial: sampled cosets only");
    return rep;
}

}  // namespace qdesign
