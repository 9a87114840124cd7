#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "design.hpp"
#include "profile.hpp"

namespace qdesign {

// Which code a prediction is about.
enum class Target { code, dual, punctured, shortened };

inline const char* to_string(Target t) {
    switch (t) {
        case Target::code: return "C";
        case Target::dual: return "C_perp";
        case Target::punctured: return "C^{m}";
        case Target::shortened: return "C_{m}";
    }
    return "?";
}

struct Prediction {
    Target target = Target::code;
    unsigned w = 0;
    unsigned t = 0;
    std::size_t n = 0;
    bool classical = false;         // classical design on supports, else q-ary design
    std::optional<Rational> lambda;  // pinned index, when the criterion or the counts fix it
    bool integral = true;            // false: the pinned index is not an integer, so no design can exist
};

struct CriterionReport {
    std::string criterion;
    bool applies = false;
    unsigned t = 0;
    std::vector<Prediction> predictions;
    std::vector<std::string> provisos;
    std::string reason;  // why the criterion does not apply
};

inline Prediction make_prediction(Target target, std::size_t n, unsigned w, unsigned t, bool classical,
                                  std::optional<Rational> lambda) {
    Prediction p;
    p.target = target;
    p.n = n;
    p.w = w;
    p.t = t;
    p.classical = classical;
    p.lambda = std::move(lambda);
    p.integral = !p.lambda || is_integral(*p.lambda);
    return p;
}

// d > s_perp or d_perp > s: every nonempty A_w of C and C_perp is a q-ary t-design,
// t = max(d - s_perp, d_perp - s). Indices follow from the block counts.
inline CriterionReport standard_criterion(const CodeProfile& p) {
    CriterionReport r;
    r.criterion = "standard";
    if (p.k == 0 || p.k == p.n) {
        r.reason = "trivial code";
        return r;
    }
    const int a = static_cast<int>(p.d) - static_cast<int>(p.s_dual);
    const int b = static_cast<int>(p.d_dual) - static_cast<int>(p.s);
    const int t = std::max(a, b);
    if (t < 1) {
        r.reason = "d <= s_perp and d_perp <= s";
        return r;
    }
    r.applies = true;
    r.t = static_cast<unsigned>(t);
    for (auto w : p.weights)
        if (w >= r.t)
            r.predictions.push_back(make_prediction(Target::code, p.n, w, r.t, false,
                                                    implied_qary_index(p.distribution[w], r.t, p.n, w, p.q)));
    for (auto w : p.dual_weights)
        if (w >= r.t)
            r.predictions.push_back(make_prediction(Target::dual, p.n, w, r.t, false,
                                                    implied_qary_index(p.dual_distribution[w], r.t, p.n, w, p.q)));
    return r;
}

// Requires s_perp < d and n in W(C_perp). With t = d - s_perp and
// W' = {w in W(C) : w - 1 not in W(C)}: A_{w-1} of the punctured code is a
// t-(n-1, w-1, lambda (w-t)/(n-t)) design and A_w of the shortened code a
// t-(n-1, w, lambda (n-w)/(n-t)) design, lambda the index of A_w(C).
inline CriterionReport puncturing_shortening_predict(const CodeProfile& p) {
    CriterionReport r;
    r.criterion = "puncturing-shortening";
    if (p.k == 0 || p.k == p.n) {
        r.reason = "trivial code";
        return r;
    }
    if (!(p.s_dual < p.d)) {
        r.reason = "s_perp >= d";
        return r;
    }
    if (std::find(p.dual_weights.begin(), p.dual_weights.end(), p.n) == p.dual_weights.end()) {
        r.reason = "n is not a weight of the dual code";
        return r;
    }
    r.applies = true;
    r.t = p.d - p.s_dual;
    r.provisos.push_back("holds for every coordinate m");
    const std::int64_t n = static_cast<std::int64_t>(p.n), t = r.t;
    for (auto w : p.weights) {
        if (std::find(p.weights.begin(), p.weights.end(), w - 1) != p.weights.end()) continue;
        if (w < r.t) continue;
        const Rational lambda = implied_qary_index(p.distribution[w], r.t, p.n, w, p.q);
        if (w - 1 >= r.t && w > 1)
            r.predictions.push_back(make_prediction(Target::punctured, p.n - 1, w - 1, r.t, false,
                                                    lambda * Rational(std::int64_t(w) - t, n - t)));
        if (static_cast<std::int64_t>(w) < n)
            r.predictions.push_back(make_prediction(Target::shortened, p.n - 1, w, r.t, false,
                                                    lambda * Rational(n - std::int64_t(w), n - t)));
    }
    return r;
}

namespace detail {

// Largest t in [1, d-1] with #{i in [1, n-t] : other_i != 0} <= d - t, or 0.
inline unsigned assmus_mattson_t(std::size_t n, unsigned d, const std::vector<unsigned>& other_weights) {
    if (d > n) return 0;
    for (unsigned t = d - 1; t >= 1; --t) {
        const auto m = std::count_if(other_weights.begin(), other_weights.end(),
                                     [&](unsigned w) { return w >= 1 && w + t <= n; });
        if (static_cast<unsigned>(m) <= d - t) return t;
    }
    return 0;
}

}  // namespace detail

// Assmus-Mattson, applied in both orientations (C, C_perp) and (C_perp, C). For an
// orientation with minimum distance d and the other code's weight count m(t) over
// [1, n-t] at most d - t: B_w is a classical t-design for w in [d, h] on the first code
// and for w in [d', min(n-t, h')] on the other. Indices: distinct supports A_w/(q-1).
inline CriterionReport assmus_mattson(const CodeProfile& p) {
    CriterionReport r;
    r.criterion = "assmus-mattson";
    if (p.k == 0 || p.k == p.n) {
        r.reason = "trivial code";
        return r;
    }
    struct Side {
        Target target;
        unsigned d, h;
        const std::vector<unsigned>* weights;
        const WeightProfile* dist;
    };
    const Side code{Target::code, p.d, p.h, &p.weights, &p.distribution};
    const Side dual{Target::dual, p.d_dual, p.h_dual, &p.dual_weights, &p.dual_distribution};
    auto classical_lambda = [&](const Side& s, unsigned w, unsigned t) {
        const BigInt supports = (*s.dist)[w] / (p.q - 1);
        return implied_classical_index(supports, t, p.n, w);
    };
    for (auto [first, other] : {std::pair{code, dual}, std::pair{dual, code}}) {
        const unsigned t = detail::assmus_mattson_t(p.n, first.d, *other.weights);
        if (t == 0) continue;
        r.applies = true;
        r.t = std::max(r.t, t);
        for (auto w : *first.weights)
            if (w >= first.d && w <= first.h && w >= t)
                r.predictions.push_back(make_prediction(first.target, p.n, w, t, true, classical_lambda(first, w, t)));
        for (auto w : *other.weights)
            if (w >= other.d && w + t <= p.n && w <= other.h && w >= t)
                r.predictions.push_back(make_prediction(other.target, p.n, w, t, true, classical_lambda(other, w, t)));
    }
    if (!r.applies) r.reason = "no t >= 1 with m(t) <= d - t in either orientation";
    // The same (target, w) can be predicted by both orientations; keep the larger t.
    std::sort(r.predictions.begin(), r.predictions.end(), [](const Prediction& a, const Prediction& b) {
        return std::tie(a.target, a.w, b.t) < std::tie(b.target, b.w, a.t);
    });
    r.predictions.erase(std::unique(r.predictions.begin(), r.predictions.end(),
                                    [](const Prediction& a, const Prediction& b) { return a.target == b.target && a.w == b.w; }),
                        r.predictions.end());
    return r;
}

// A_w(C) by whichever route touches fewer vectors: the weight-w scan or full enumeration.
inline BlockFamily family_of_weight(const LinearCode& code, unsigned w, unsigned threads = default_threads(),
                                    const Budget& budget = default_budget()) {
    const BigInt scan = binomial_big(static_cast<std::int64_t>(code.n()), w) * pow_big(code.q() - 1, w);
    const BigInt full = pow_big(code.q(), static_cast<unsigned>(code.k()));
    if (code.k() > 0 && scan * 4 < full && scan <= BigInt(budget.unfiltered)) return codewords_of_weight_scan(code, w, budget);
    return codewords_of_weight(code, w, threads, budget);
}

// Largest family (blocks times length, in symbols) that confirm_predictions materializes.
inline constexpr std::uint64_t kConfirmFamilySymbols = std::uint64_t{1} << 24;

// Block count implied by a prediction's pinned index.
inline std::optional<BigInt> predicted_family_size(const Prediction& p, unsigned q) {
    if (!p.lambda || !p.integral) return std::nullopt;
    Rational blocks = *p.lambda * Rational(binomial_big(static_cast<std::int64_t>(p.n), p.t)) / Rational(binomial_big(p.w, p.t));
    if (!p.classical) blocks *= Rational(pow_big(q - 1, p.t));
    else blocks *= q - 1;  // distinct supports, each carried by q-1 codewords when w <= h
    return boost::multiprecision::numerator(blocks) / boost::multiprecision::denominator(blocks);
}

struct Confirmation {
    Prediction prediction;
    DesignCheck check;
    bool confirmed = false;
    std::string skipped;  // capacity message when the family could not be built
};

// Runs design-check on every prediction. Punctured and shortened targets use `coordinate`.
inline std::vector<Confirmation> confirm_predictions(const LinearCode& code, const CriterionReport& report,
                                                     std::size_t coordinate = 0, unsigned threads = default_threads(),
                                                     const Budget& budget = default_budget()) {
    std::vector<Confirmation> out;
    std::optional<LinearCode> dual_code, punctured, shortened;
    auto target_code = [&](Target t) -> const LinearCode& {
        switch (t) {
            case Target::code: return code;
            case Target::dual:
                if (!dual_code) dual_code = dual(code);
                return *dual_code;
            case Target::punctured:
                if (!punctured) punctured = puncture(code, coordinate);
                return *punctured;
            case Target::shortened:
                if (!shortened) shortened = shorten(code, coordinate);
                return *shortened;
        }
        return code;
    };
    for (const auto& pred : report.predictions) {
        Confirmation c;
        c.prediction = pred;
        if (auto size = predicted_family_size(pred, code.q()); size && *size * pred.n > BigInt(kConfirmFamilySymbols)) {
            c.skipped = "family of about " + size->str() + " blocks exceeds the confirmation limit";
            out.push_back(std::move(c));
            continue;
        }
        BlockFamily fam;
        try {
            fam = family_of_weight(target_code(pred.target), pred.w, threads, budget);
        } catch (const CapacityError& e) {
            c.skipped = e.what();
            out.push_back(std::move(c));
            continue;
        }
        c.check = pred.classical ? classical_design_lambda(fam, pred.t, SupportMode::distinct, budget)
                                 : qary_design_lambda(fam, pred.t, threads, budget);
        c.confirmed = c.check.holds() && (!pred.lambda || Rational(*c.check.lambda) == *pred.lambda);
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// MDS and perfect characterizations

struct CharacterizationReport {
    std::string name;
    bool holds = false;
    std::optional<DesignCheck> minimum_weight_check;     // A_d at the characteristic t
    std::optional<Rational> expected_lambda;
    std::optional<BigInt> expected_count;                 // MDS: (q-1) C(n, d)
    std::vector<DesignCheck> other_weights;              // perfect: every nonempty A_w
    bool confirmed = true;                                // design checks agree with the characterization
    std::string note;
};

// d = n - k + 1; then A_d must be a q-ary 1-(n, d, C(n-1, d-1)) design with (q-1) C(n, d) blocks.
inline CharacterizationReport mds_test(const LinearCode& code, const CodeProfile& p, unsigned threads = default_threads(),
                                       const Budget& budget = default_budget()) {
    CharacterizationReport r;
    r.name = "mds";
    r.holds = p.k > 0 && p.d == p.n - p.k + 1;
    if (!r.holds) return r;
    const std::int64_t n = static_cast<std::int64_t>(p.n), d = p.d;
    r.expected_lambda = Rational(binomial_big(n - 1, d - 1));
    r.expected_count = BigInt(p.q - 1) * binomial_big(n, d);
    auto fam = codewords_of_weight(code, p.d, threads, budget);
    r.minimum_weight_check = qary_design_lambda(fam, 1, threads, budget);
    r.confirmed = r.minimum_weight_check->holds() && Rational(*r.minimum_weight_check->lambda) == *r.expected_lambda &&
                  BigInt(fam.size()) == *r.expected_count;
    return r;
}

// Perfect iff e = rho; then A_d is a q-ary (e+1)-(n, 2e+1, 1) design and every nonempty
// A_w is a q-ary (e+1)-design.
inline CharacterizationReport perfect_test(const LinearCode& code, const CodeProfile& p, unsigned threads = default_threads(),
                                           const Budget& budget = default_budget()) {
    CharacterizationReport r;
    r.name = "perfect";
    if (!p.rho) throw CapacityError("covering radius not available within the syndrome budget");
    r.holds = p.k > 0 && p.e == *p.rho;
    if (!r.holds) return r;
    const unsigned t = p.e + 1;
    r.expected_lambda = Rational(1);
    for (auto w : p.weights) {
        if (w < t) continue;
        auto fam = codewords_of_weight(code, w, threads, budget);
        auto c = qary_design_lambda(fam, t, threads, budget);
        if (w == p.d) {
            r.minimum_weight_check = c;
            r.confirmed = r.confirmed && c.holds() && c.lambda == std::uint64_t{1};
        } else {
            r.other_weights.push_back(c);
            r.confirmed = r.confirmed && c.holds();
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Symbolic check of an extremal Type IV enumerator (no enumeration of the code)

struct TypeIVCheck {
    std::size_t n = 0;
    unsigned m = 0, d = 0, s = 0;
    bool total_ok = false;           // sum A_w = 4^(n/2)
    bool macwilliams_fixed = false;  // enumerator is its own transform
    bool bound_ok = false;           // s <= 2m
    unsigned t = 0;                  // standard criterion strength d_perp - s
    Rational lambda_min;             // index of A_d at strength t
    bool passed() const { return total_ok && macwilliams_fixed && bound_ok && t == 2 && is_integral(lambda_min); }
};

// A Hermitian self-dual code over F_4 has the same weight enumerator as its dual, so
// d_perp = d and s_perp = s.
inline TypeIVCheck type_iv_symbolic_check(const WeightProfile& enumerator) {
    TypeIVCheck r;
    r.n = enumerator.n();
    r.m = static_cast<unsigned>(r.n / 6);
    const auto w = enumerator.weights();
    r.s = static_cast<unsigned>(w.size());
    r.d = w.empty() ? 0 : w.front();
    r.total_ok = enumerator.total() == pow_big(4, static_cast<unsigned>(r.n / 2));
    try {
        r.macwilliams_fixed = macwilliams_transform(enumerator, 4, r.n / 2) == enumerator;
    } catch (const InternalError&) {
        r.macwilliams_fixed = false;  // a non-integral transform: not the enumerator of any code
    }
    r.bound_ok = r.s <= 2 * r.m;
    if (r.d > r.s) r.t = r.d - r.s;
    if (r.t >= 1) r.lambda_min = implied_qary_index(enumerator[r.d], r.t, r.n, r.d, 4);
    return r;
}

}  // namespace qdesign
