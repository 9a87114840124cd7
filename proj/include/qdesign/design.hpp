#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "enumerate.hpp"
#include "numeric.hpp"
#include "parallel.hpp"

namespace qdesign {

// Constant-weight vectors over F_q (q-ary blocks). Supports may repeat.
struct BlockFamily {
    FieldSpec field;
    std::size_t n = 0;
    unsigned w = 0;
    std::vector<Vector> blocks;
    std::string source;

    unsigned q() const { return field.q(); }
    std::size_t size() const { return blocks.size(); }
};

inline void validate_family(const BlockFamily& f) {
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const auto& b = f.blocks[i];
        if (b.size() != f.n) throw ParameterError("block " + std::to_string(i) + " has length " + std::to_string(b.size()));
        for (auto x : b)
            if (x >= f.q()) throw ParameterError("block " + std::to_string(i) + " has an entry outside the field");
        if (hamming_weight(b) != f.w)
            throw ParameterError("block " + std::to_string(i) + " has weight " + std::to_string(hamming_weight(b)) + " != " +
                                 std::to_string(f.w));
    }
}

// A_w(C) in message order.
inline BlockFamily codewords_of_weight(const LinearCode& code, unsigned w, unsigned threads = default_threads(),
                                       const Budget& budget = default_budget()) {
    BlockFamily fam{code.field(), code.n(), w, {}, (code.label().empty() ? std::string("code") : code.label()) + ":A_" + std::to_string(w)};
    std::vector<std::vector<Vector>> parts(std::max(1u, threads));
    enumerate_codewords_parallel(code, WeightFilter{w}, threads,
                                 [&](unsigned worker, const Vector& c, unsigned) { parts[worker].push_back(c); }, budget);
    for (auto& p : parts)
        for (auto& v : p) fam.blocks.push_back(std::move(v));
    return fam;
}

namespace detail {

// Calls fn(positions) for each t-subset of `items` in lexicographic order (positions index into items).
template <class Fn>
void for_each_subset(unsigned w, unsigned t, Fn&& fn) {
    std::vector<unsigned> c(t);
    for (unsigned i = 0; i < t; ++i) c[i] = i;
    if (t > w) return;
    while (true) {
        fn(c);
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && c[i] == w - t + static_cast<unsigned>(i)) --i;
        if (i < 0) return;
        ++c[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace detail

// A_w(C) by scanning every weight-w vector against the parity checks; cheaper than
// enumerating C when C(n,w)(q-1)^w is far below q^k. Blocks in lexicographic support order.
inline BlockFamily codewords_of_weight_scan(const LinearCode& code, unsigned w, const Budget& budget = default_budget()) {
    const auto& f = code.field();
    const std::size_t n = code.n();
    if (w == 0 || w > n) throw ParameterError("weight scan requires 1 <= w <= n");
    BigInt work = binomial_big(static_cast<std::int64_t>(n), w) * pow_big(f.q() - 1, w);
    if (work > BigInt(budget.codewords)) throw CapacityError("weight-" + std::to_string(w) + " scan exceeds the codeword budget");
    BlockFamily fam{f, n, w, {}, (code.label().empty() ? std::string("code") : code.label()) + ":A_" + std::to_string(w)};
    const LinearCode check = dual(code);
    const std::size_t r = check.k();
    // Column j of the parity-check matrix scaled by each nonzero a.
    std::vector<std::vector<Vector>> scaled(n, std::vector<Vector>(f.q(), Vector(r, 0)));
    for (std::size_t j = 0; j < n; ++j)
        for (unsigned a = 1; a < f.q(); ++a)
            for (std::size_t i = 0; i < r; ++i) scaled[j][a][i] = f.mul(static_cast<Symbol>(a), check.generator()[i][j]);
    std::vector<Symbol> vals(w, 1);
    Vector syn(r);
    detail::for_each_subset(static_cast<unsigned>(n), w, [&](const std::vector<unsigned>& sup) {
        std::fill(vals.begin(), vals.end(), Symbol(1));
        while (true) {
            std::fill(syn.begin(), syn.end(), Symbol(0));
            for (unsigned i = 0; i < w; ++i) {
                const auto& col = scaled[sup[i]][vals[i]];
                for (std::size_t k = 0; k < r; ++k) syn[k] = f.add(syn[k], col[k]);
            }
            if (std::all_of(syn.begin(), syn.end(), [](Symbol x) { return x == 0; })) {
                Vector v(n, 0);
                for (unsigned i = 0; i < w; ++i) v[sup[i]] = vals[i];
                fam.blocks.push_back(std::move(v));
            }
            unsigned i = w;
            while (i-- > 0) {
                if (++vals[i] < f.q()) break;
                vals[i] = 1;
            }
            if (i == static_cast<unsigned>(-1)) break;
        }
    });
    return fam;
}

// a covers b: a_i = b_i wherever b_i != 0.
inline bool covers(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ParameterError("covers: vectors of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] && a[i] != b[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Index formulas

// |F| C(w,t) / ((q-1)^t C(n,t)): the only possible q-ary index of a family of that size.
inline Rational implied_qary_index(const BigInt& blocks, unsigned t, std::size_t n, unsigned w, unsigned q) {
    return Rational(blocks * binomial_big(w, t)) / Rational(pow_big(q - 1, t) * binomial_big(static_cast<std::int64_t>(n), t));
}

// b C(w,t) / C(n,t) for b blocks of size w.
inline Rational implied_classical_index(const BigInt& blocks, unsigned t, std::size_t n, unsigned w) {
    return Rational(blocks * binomial_big(w, t)) / Rational(binomial_big(static_cast<std::int64_t>(n), t));
}

// lambda_i = lambda (q-1)^(t-i) C(n-i, t-i) / C(w-i, t-i).
inline Rational lambda_scale(const Rational& lambda, unsigned t, unsigned i, std::size_t n, unsigned w, unsigned q) {
    if (!(i <= t && t <= w && w <= n)) throw ParameterError("lambda_scale requires i <= t <= w <= n");
    return lambda * Rational(pow_big(q - 1, t - i) * binomial_big(static_cast<std::int64_t>(n - i), t - i)) /
           Rational(binomial_big(w - i, t - i));
}

// Classical analogue: lambda C(n-i, t-i) / C(w-i, t-i).
inline Rational lambda_scale_classical(const Rational& lambda, unsigned t, unsigned i, std::size_t n, unsigned w) {
    if (!(i <= t && t <= w && w <= n)) throw ParameterError("lambda_scale requires i <= t <= w <= n");
    return lambda * Rational(binomial_big(static_cast<std::int64_t>(n - i), t - i)) / Rational(binomial_big(w - i, t - i));
}

// Number of blocks agreeing with alpha on x coordinates, nonzero and different from alpha
// on y coordinates, and zero on z coordinates:
// lambda (q-2)^y (q-1)^(t-x-y) C(n-x-y-z, w-x-y) / C(n-t, w-t).
inline Rational lambda_xyz(const Rational& lambda, unsigned t, std::size_t n, unsigned w, unsigned q, unsigned x, unsigned y,
                           unsigned z) {
    if (x + y + z > t || t > w || w > n) throw ParameterError("lambda_xyz requires x+y+z <= t <= w <= n");
    const std::int64_t nn = static_cast<std::int64_t>(n);
    return lambda * Rational(pow_big(static_cast<std::int64_t>(q) - 2, y) * pow_big(q - 1, t - x - y) *
                             binomial_big(nn - x - y - z, static_cast<std::int64_t>(w) - x - y)) /
           Rational(binomial_big(nn - t, w - t));
}

// ---------------------------------------------------------------------------
// Counting

enum class Verdict { holds, fails, vacuous };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "design";
        case Verdict::fails: return "not-design";
        case Verdict::vacuous: return "vacuous";
    }
    return "?";
}

// Outcome of one t. On failure `witness` is the lexicographically smallest weight-t
// vector (q-ary) or t-subset indicator (classical) whose count differs from the rest.
struct DesignCheck {
    unsigned t = 0;
    Verdict verdict = Verdict::vacuous;
    std::optional<std::uint64_t> lambda;
    std::optional<Vector> witness;
    std::optional<std::uint64_t> witness_count;
    Rational implied_index = 0;
    std::string reason;

    bool holds() const { return verdict == Verdict::holds; }
};

// Colex ranks of t-subsets of [0, n).
class SubsetRanker {
public:
    SubsetRanker(std::size_t n, unsigned t) : n_(n), t_(t), binom_(n + 2) {}
    std::uint64_t count() const { return binom_(n_, t_); }
    std::uint64_t rank(const unsigned* pos) const {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < t_; ++i) r += binom_(pos[i], i + 1);
        return r;
    }
    std::uint64_t choose(std::size_t a, std::size_t b) const { return binom_(a, b); }

private:
    std::size_t n_;
    unsigned t_;
    BinomialTable binom_;
};

namespace detail {

// Counter keyed by a 64-bit pattern index: dense up to the budget, associative above.
class PatternTable {
public:
    PatternTable(std::uint64_t size, const Budget& budget) : size_(size) {
        if (size <= budget.dense_counters) dense_.assign(size, 0);
        else if (size > budget.counters)
            throw CapacityError("counter table of " + std::to_string(size) + " entries exceeds the budget of " +
                                std::to_string(budget.counters));
        else sparse_ = true;
    }
    void inc(std::uint64_t key) {
        if (sparse_) ++map_[key];
        else ++dense_[key];
    }
    std::uint64_t get(std::uint64_t key) const {
        if (!sparse_) return dense_[key];
        auto it = map_.find(key);
        return it == map_.end() ? 0 : it->second;
    }
    void merge(const PatternTable& o) {
        if (sparse_)
            for (auto& [k, v] : o.map_) map_[k] += v;
        else
            for (std::size_t i = 0; i < dense_.size(); ++i) dense_[i] += o.dense_[i];
    }
    // True when every key in [0, size) has count c.
    bool uniform(std::uint64_t c) const {
        if (!sparse_) return std::all_of(dense_.begin(), dense_.end(), [c](std::uint64_t x) { return x == c; });
        if (c == 0) return map_.empty();
        if (map_.size() != size_) return false;
        return std::all_of(map_.begin(), map_.end(), [c](const auto& kv) { return kv.second == c; });
    }
    std::uint64_t size() const { return size_; }

private:
    std::uint64_t size_;
    bool sparse_ = false;
    std::vector<std::uint64_t> dense_;
    std::unordered_map<std::uint64_t, std::uint64_t> map_;
};

}  // namespace detail

// Streaming q-ary counter: entry (S, v) counts blocks covering the weight-t vector with
// support S and values v. Index = colex_rank(S) * (q-1)^t + mixed-radix(v - 1).
class QaryPatternCounter {
public:
    QaryPatternCounter(std::size_t n, unsigned q, unsigned t, const Budget& budget = default_budget())
        : n_(n), q_(q), t_(t), ranker_(n, t), radix_(pow_radix(q, t)), table_(table_size(n, q, t), budget) {}

    void add(const Vector& block) {
        pos_.clear();
        for (std::size_t j = 0; j < n_; ++j)
            if (block[j]) pos_.push_back(static_cast<unsigned>(j));
        const unsigned w = static_cast<unsigned>(pos_.size());
        if (w < t_) return;
        sel_.resize(t_);
        detail::for_each_subset(w, t_, [&](const std::vector<unsigned>& c) {
            std::uint64_t pat = 0;
            for (unsigned i = 0; i < t_; ++i) {
                sel_[i] = pos_[c[i]];
                pat = pat * (q_ - 1) + (block[sel_[i]] - 1u);
            }
            table_.inc(ranker_.rank(sel_.data()) * radix_ + pat);
        });
        ++blocks_;
    }
    void merge(const QaryPatternCounter& o) {
        table_.merge(o.table_);
        blocks_ += o.blocks_;
    }

    // Count for the weight-t vector v (t nonzero entries).
    std::uint64_t count(const Vector& v) const {
        std::vector<unsigned> s;
        std::uint64_t pat = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j]) {
                s.push_back(static_cast<unsigned>(j));
                pat = pat * (q_ - 1) + (v[j] - 1u);
            }
        if (s.size() != t_) throw ParameterError("count: vector weight differs from t");
        return table_.get(ranker_.rank(s.data()) * radix_ + pat);
    }
    std::uint64_t blocks() const { return blocks_; }
    bool uniform(std::uint64_t c) const { return table_.uniform(c); }

    static std::uint64_t table_size(std::size_t n, unsigned q, unsigned t) {
        BigInt s = binomial_big(static_cast<std::int64_t>(n), t) * pow_big(q - 1, t);
        if (s > BigInt(std::numeric_limits<std::uint64_t>::max())) throw CapacityError("q-ary counter table exceeds 64-bit indexing");
        return static_cast<std::uint64_t>(s);
    }

private:
    static std::uint64_t pow_radix(unsigned q, unsigned t) {
        auto r = checked_pow(q - 1, t);
        if (!r) throw CapacityError("(q-1)^t exceeds 64 bits");
        return *r;
    }
    std::size_t n_;
    unsigned q_, t_;
    SubsetRanker ranker_;
    std::uint64_t radix_;
    detail::PatternTable table_;
    std::uint64_t blocks_ = 0;
    std::vector<unsigned> pos_, sel_;
};

namespace detail {

// Weight-t vectors of length n over F_q in lexicographic order; stops when fn returns true.
inline bool first_weight_t_vector(std::size_t n, unsigned q, unsigned t, const std::function<bool(const Vector&)>& fn) {
    Vector v(n, 0);
    std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t j, unsigned left) -> bool {
        if (left == 0) return fn(v);
        if (n - j < left) return false;
        if (n - j > left) {
            if (rec(j + 1, left)) return true;
        }
        for (unsigned a = 1; a < q; ++a) {
            v[j] = static_cast<Symbol>(a);
            if (rec(j + 1, left - 1)) {
                return true;
            }
        }
        v[j] = 0;
        return false;
    };
    return rec(0, t);
}

inline std::uint64_t count_covering(const BlockFamily& f, const Vector& v) {
    std::uint64_t c = 0;
    for (const auto& b : f.blocks) c += covers(b, v);
    return c;
}

}  // namespace detail

// Decides the q-ary t-design property from a filled counter.
inline DesignCheck finish_qary_check(const QaryPatternCounter& counter, std::size_t n, unsigned q, unsigned w, unsigned t) {
    DesignCheck r;
    r.t = t;
    r.implied_index = implied_qary_index(counter.blocks(), t, n, w, q);
    if (counter.blocks() == 0) {
        r.verdict = Verdict::vacuous;
        return r;
    }
    const bool integral = is_integral(r.implied_index);
    const std::uint64_t avg = integral ? static_cast<std::uint64_t>(boost::multiprecision::numerator(r.implied_index)) : 0;
    if (integral && counter.uniform(avg)) {
        r.verdict = Verdict::holds;
        r.lambda = avg;
        return r;
    }
    r.verdict = Verdict::fails;
    r.reason = integral ? "counts differ" : "non-integral index";
    detail::first_weight_t_vector(n, q, t, [&](const Vector& v) {
        std::uint64_t c = counter.count(v);
        if (integral && c == avg) return false;
        r.witness = v;
        r.witness_count = c;
        return true;
    });
    return r;
}

// q-ary t-design check with the divisibility pre-check. On a non-integral index no table
// is built: every weight-t vector deviates, so the witness is the smallest weight-t
// vector and its count is taken directly.
inline DesignCheck qary_design_lambda(const BlockFamily& f, unsigned t, unsigned threads = default_threads(),
                                      const Budget& budget = default_budget()) {
    if (t < 1 || t > f.w) throw ParameterError("q-ary check requires 1 <= t <= w");
    DesignCheck r;
    r.t = t;
    r.implied_index = implied_qary_index(f.size(), t, f.n, f.w, f.q());
    if (f.blocks.empty()) {
        r.verdict = Verdict::vacuous;
        return r;
    }
    if (!is_integral(r.implied_index)) {
        r.verdict = Verdict::fails;
        r.reason = "non-integral index";
        Vector v(f.n, 0);
        for (std::size_t j = f.n - t; j < f.n; ++j) v[j] = 1;
        r.witness = v;
        r.witness_count = detail::count_covering(f, v);
        return r;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), f.size()));
    std::vector<QaryPatternCounter> counters;
    for (unsigned i = 0; i < workers; ++i) counters.emplace_back(f.n, f.q(), t, budget);
    parallel_for(f.size(), workers, [&](IndexRange range, unsigned worker) {
        for (auto i = range.begin; i < range.end; ++i) counters[worker].add(f.blocks[i]);
    });
    for (unsigned i = 1; i < workers; ++i) counters[0].merge(counters[i]);
    return finish_qary_check(counters[0], f.n, f.q(), f.w, t);
}

// How supports are counted in the classical check: the set B_w of distinct supports,
// or the multiset of supports of all blocks.
enum class SupportMode { distinct, multiset };

inline const char* to_string(SupportMode m) { return m == SupportMode::distinct ? "distinct" : "multiset"; }

using Support = std::vector<unsigned>;

inline Support support_of(const Vector& v) {
    Support s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) s.push_back(static_cast<unsigned>(j));
    return s;
}

// Supports of the family (sorted), deduplicated in distinct mode.
inline std::vector<Support> family_supports(const BlockFamily& f, SupportMode mode) {
    std::vector<Support> s;
    s.reserve(f.size());
    for (const auto& b : f.blocks) s.push_back(support_of(b));
    std::sort(s.begin(), s.end());
    if (mode == SupportMode::distinct) s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Vector indicator(std::size_t n, const std::vector<unsigned>& positions) {
    Vector v(n, 0);
    for (auto p : positions) v[p] = 1;
    return v;
}

// Classical t-design check on w-subsets of [0, n).
inline DesignCheck classical_design_lambda_on(const std::vector<Support>& blocks, std::size_t n, unsigned w, unsigned t,
                                              const Budget& budget = default_budget()) {
    if (t < 1 || t > w) throw ParameterError("classical check requires 1 <= t <= w");
    DesignCheck r;
    r.t = t;
    r.implied_index = implied_classical_index(blocks.size(), t, n, w);
    if (blocks.empty()) {
        r.verdict = Verdict::vacuous;
        return r;
    }
    const bool integral = is_integral(r.implied_index);
    const std::uint64_t avg = integral ? static_cast<std::uint64_t>(boost::multiprecision::numerator(r.implied_index)) : 0;
    SubsetRanker ranker(n, t);

    // A family in which every w-subset occurs equally often is a design for all t.
    if (BigInt(blocks.size()) % binomial_big(static_cast<std::int64_t>(n), w) == 0 && blocks.size() >= binomial(n, w)) {
        std::map<Support, std::uint64_t> mult;
        for (const auto& b : blocks) ++mult[b];
        const std::uint64_t mu = blocks.size() / binomial(n, w);
        if (mult.size() == binomial(n, w) &&
            std::all_of(mult.begin(), mult.end(), [mu](const auto& kv) { return kv.second == mu; })) {
            r.verdict = Verdict::holds;
            r.lambda = mu * binomial(static_cast<std::int64_t>(n - t), w - t);
            r.reason = "complete";
            return r;
        }
    }

    auto lex_first = [&](const std::function<std::uint64_t(const std::vector<unsigned>&)>& count) {
        detail::for_each_subset(static_cast<unsigned>(n), t, [&, done = false](const std::vector<unsigned>& c) mutable {
            if (done) return;
            std::uint64_t k = count(c);
            if (integral && k == avg) return;
            r.witness = indicator(n, c);
            r.witness_count = k;
            done = true;
        });
    };
    if (!integral) {
        r.verdict = Verdict::fails;
        r.reason = "non-integral index";
        std::vector<unsigned> first(t);
        for (unsigned i = 0; i < t; ++i) first[i] = i;
        std::uint64_t k = 0;
        for (const auto& b : blocks) k += std::includes(b.begin(), b.end(), first.begin(), first.end());
        r.witness = indicator(n, first);
        r.witness_count = k;
        return r;
    }
    detail::PatternTable table(ranker.count(), budget);
    std::vector<unsigned> sel(t);
    for (const auto& b : blocks) {
        detail::for_each_subset(static_cast<unsigned>(b.size()), t, [&](const std::vector<unsigned>& c) {
            for (unsigned i = 0; i < t; ++i) sel[i] = b[c[i]];
            table.inc(ranker.rank(sel.data()));
        });
    }
    if (table.uniform(avg)) {
        r.verdict = Verdict::holds;
        r.lambda = avg;
        return r;
    }
    r.verdict = Verdict::fails;
    r.reason = "counts differ";
    lex_first([&](const std::vector<unsigned>& c) { return table.get(ranker.rank(c.data())); });
    return r;
}

inline DesignCheck classical_design_lambda(const BlockFamily& f, unsigned t, SupportMode mode = SupportMode::distinct,
                                           const Budget& budget = default_budget()) {
    return classical_design_lambda_on(family_supports(f, mode), f.n, f.w, t, budget);
}

// ---------------------------------------------------------------------------
// Reports

struct DesignReport {
    std::string source;
    unsigned q = 0;
    std::size_t n = 0;
    unsigned w = 0;
    std::uint64_t blocks = 0;
    std::uint64_t distinct_supports = 0;
    SupportMode mode = SupportMode::distinct;
    std::vector<DesignCheck> qary, classical;  // rows t = 1, 2, ... up to the first failure
    unsigned T_qary = 0, T_classical = 0;
    bool vacuous = false;
    std::vector<std::string> provisos;
};

// Largest t with a q-ary (resp. classical) t-design, scanning t = 1 upward until the
// first failure or t = w.
inline DesignReport strengths(const BlockFamily& f, SupportMode mode = SupportMode::distinct,
                              unsigned threads = default_threads(), const Budget& budget = default_budget()) {
    DesignReport rep;
    rep.source = f.source;
    rep.q = f.q();
    rep.n = f.n;
    rep.w = f.w;
    rep.blocks = f.size();
    rep.mode = mode;
    auto supports = family_supports(f, mode);
    rep.distinct_supports = family_supports(f, SupportMode::distinct).size();
    if (f.blocks.empty() || f.w == 0) {
        rep.vacuous = true;
        return rep;
    }
    for (unsigned t = 1; t <= f.w; ++t) {
        auto c = qary_design_lambda(f, t, threads, budget);
        rep.qary.push_back(c);
        if (!c.holds()) break;
        rep.T_qary = t;
    }
    for (unsigned t = 1; t <= f.w; ++t) {
        auto c = classical_design_lambda_on(supports, f.n, f.w, t, budget);
        rep.classical.push_back(c);
        if (!c.holds()) break;
        rep.T_classical = t;
    }
    return rep;
}

// Single-t report (both senses).
inline DesignReport design_report_at(const BlockFamily& f, unsigned t, SupportMode mode = SupportMode::distinct,
                                     unsigned threads = default_threads(), const Budget& budget = default_budget()) {
    DesignReport rep;
    rep.source = f.source;
    rep.q = f.q();
    rep.n = f.n;
    rep.w = f.w;
    rep.blocks = f.size();
    rep.mode = mode;
    rep.distinct_supports = family_supports(f, SupportMode::distinct).size();
    rep.vacuous = f.blocks.empty();
    rep.qary.push_back(qary_design_lambda(f, t, threads, budget));
    rep.classical.push_back(classical_design_lambda(f, t, mode, budget));
    return rep;
}

// ---------------------------------------------------------------------------
// Group divisible designs

// Points [n] x F_q^*: point id i*(q-1) + (a-1). Groups are the n blocks of q-1 consecutive ids.
struct GddInstance {
    std::size_t groups = 0;
    unsigned group_size = 0;
    unsigned t = 0;
    std::uint64_t lambda = 0;
    std::vector<std::vector<unsigned>> blocks;  // sorted point ids

    std::size_t points() const { return groups * group_size; }
    unsigned group_of(unsigned point) const { return point / group_size; }
};

// Re-checks that every t-subset of points from t distinct groups lies in exactly lambda blocks
// and that no block meets a group twice.
inline bool verify_gdd(const GddInstance& g, const Budget& budget = default_budget()) {
    const std::size_t v = g.points();
    SubsetRanker ranker(v, g.t);
    detail::PatternTable table(ranker.count(), budget);
    std::vector<unsigned> sel(g.t);
    for (const auto& b : g.blocks) {
        for (std::size_t i = 1; i < b.size(); ++i)
            if (g.group_of(b[i]) == g.group_of(b[i - 1])) return false;
        detail::for_each_subset(static_cast<unsigned>(b.size()), g.t, [&](const std::vector<unsigned>& c) {
            for (unsigned i = 0; i < g.t; ++i) sel[i] = b[c[i]];
            table.inc(ranker.rank(sel.data()));
        });
    }
    bool ok = true;
    detail::for_each_subset(static_cast<unsigned>(v), g.t, [&](const std::vector<unsigned>& c) {
        if (!ok) return;
        for (unsigned i = 1; i < g.t; ++i)
            if (g.group_of(c[i]) == g.group_of(c[i - 1])) return;
        ok = table.get(ranker.rank(c.data())) == g.lambda;
    });
    return ok;
}

inline GddInstance to_gdd(const BlockFamily& f, unsigned t, std::uint64_t lambda, const Budget& budget = default_budget()) {
    GddInstance g;
    g.groups = f.n;
    g.group_size = f.q() - 1;
    g.t = t;
    g.lambda = lambda;
    for (const auto& b : f.blocks) {
        std::vector<unsigned> pts;
        for (std::size_t i = 0; i < f.n; ++i)
            if (b[i]) pts.push_back(static_cast<unsigned>(i * g.group_size + (b[i] - 1u)));
        g.blocks.push_back(std::move(pts));
    }
    if (!verify_gdd(g, budget)) throw InternalError("GDD re-verification failed");
    return g;
}

inline BlockFamily from_gdd(const GddInstance& g, const FieldSpec& field) {
    if (field.q() != g.group_size + 1) throw ParameterError("field order does not match GDD group size");
    BlockFamily f{field, g.groups, 0, {}, "gdd"};
    for (const auto& b : g.blocks) {
        Vector v(g.groups, 0);
        for (auto p : b) v[p / g.group_size] = static_cast<Symbol>(p % g.group_size + 1);
        f.blocks.push_back(std::move(v));
    }
    f.w = f.blocks.empty() ? 0 : hamming_weight(f.blocks[0]);
    return f;
}

// ---------------------------------------------------------------------------
// Support multiplicity

struct SupportMultiplicity {
    std::uint64_t distinct = 0;
    bool uniform = false;  // every distinct support occurs exactly `expected` times
    std::uint64_t expected = 0;
    std::optional<Support> witness;
    std::uint64_t witness_count = 0;
};

// Checks that each distinct support occurs exactly `expected` times (q-1 by default).
inline SupportMultiplicity support_multiplicity(const BlockFamily& f, std::optional<std::uint64_t> expected = std::nullopt) {
    SupportMultiplicity r;
    r.expected = expected.value_or(f.q() - 1);
    auto all = family_supports(f, SupportMode::multiset);
    r.uniform = true;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        ++r.distinct;
        if (r.uniform && j - i != r.expected) {
            r.uniform = false;
            r.witness = all[i];
            r.witness_count = j - i;
        }
        i = j;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fixed-coordinate verification

inline const char* kTransitivityProviso =
    "full-design conclusion assumes the asserted t-transitivity of the automorphism group (not computed)";

// Counts, for the (q-1)^t weight-t vectors supported on S, the blocks covering each one.
class FixedCoordinateCounter {
public:
    FixedCoordinateCounter(std::vector<unsigned> coords, unsigned q) : coords_(std::move(coords)), q_(q) {
        auto size = checked_pow(q - 1, static_cast<unsigned>(coords_.size()));
        if (!size || *size > (std::uint64_t{1} << 28)) throw CapacityError("too many fixed-coordinate patterns");
        counts_.assign(*size, 0);
    }
    void add(const Vector& b) {
        std::uint64_t pat = 0;
        for (auto c : coords_) {
            if (!b[c]) return;
            pat = pat * (q_ - 1) + (b[c] - 1u);
        }
        ++counts_[pat];
    }
    void merge(const FixedCoordinateCounter& o) {
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
    }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    const std::vector<unsigned>& coords() const { return coords_; }
    unsigned q() const { return q_; }

private:
    std::vector<unsigned> coords_;
    unsigned q_;
    std::vector<std::uint64_t> counts_;
};

struct FixedCoordinateCheck {
    unsigned t = 0;
    std::vector<unsigned> coords;
    Verdict verdict = Verdict::vacuous;
    std::optional<std::uint64_t> lambda;
    std::optional<Vector> witness;
    std::optional<std::uint64_t> witness_count;
    std::uint64_t patterns = 0;
    std::string proviso = kTransitivityProviso;
};

inline FixedCoordinateCheck finish_fixed_coordinate(const FixedCoordinateCounter& c, std::size_t n, std::uint64_t blocks) {
    FixedCoordinateCheck r;
    r.t = static_cast<unsigned>(c.coords().size());
    r.coords = c.coords();
    r.patterns = c.counts().size();
    if (blocks == 0) return r;
    const auto& k = c.counts();
    // Patterns are indexed in lexicographic order of their value tuples.
    if (std::all_of(k.begin(), k.end(), [&](std::uint64_t x) { return x == k[0]; }) && k[0] > 0) {
        r.verdict = Verdict::holds;
        r.lambda = k[0];
        return r;
    }
    r.verdict = Verdict::fails;
    // Deviant = differs from the most common count; report the lexicographically first.
    std::map<std::uint64_t, std::uint64_t> freq;
    for (auto x : k) ++freq[x];
    auto mode = std::max_element(freq.begin(), freq.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
    for (std::uint64_t pat = 0; pat < k.size(); ++pat) {
        if (k[pat] == mode && k[pat] > 0) continue;
        Vector v(n, 0);
        std::uint64_t x = pat;
        for (std::size_t i = r.t; i-- > 0;) {
            v[r.coords[i]] = static_cast<Symbol>(x % (c.q() - 1) + 1);
            x /= c.q() - 1;
        }
        r.witness = v;
        r.witness_count = k[pat];
        break;
    }
    return r;
}

// Verifies only the weight-t vectors supported on `coords`. Meaningful as a design
// statement only for codes whose automorphism group is t-transitive; the caller must
// assert that (asserted_transitivity >= t).
inline FixedCoordinateCheck fixed_coordinate_lambda(const BlockFamily& f, std::vector<unsigned> coords,
                                                    unsigned asserted_transitivity) {
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end() || coords.empty() || coords.back() >= f.n)
        throw ParameterError("fixed coordinates must be distinct positions in range");
    if (asserted_transitivity < coords.size())
        throw ParameterError("fixed-coordinate verification needs an asserted transitivity >= t");
    FixedCoordinateCounter c(coords, f.q());
    for (const auto& b : f.blocks) c.add(b);
    return finish_fixed_coordinate(c, f.n, f.size());
}

}  // namespace qdesign
