#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace qdesign {

using Vector = std::vector<Symbol>;
using Matrix = std::vector<Vector>;

inline unsigned hamming_weight(const Vector& v) {
    unsigned w = 0;
    for (auto x : v) w += x != 0;
    return w;
}

inline Symbol inner_product(const FieldSpec& f, const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ParameterError("inner product of vectors of different lengths");
    Symbol s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

// Row-reduces `rows` in place to reduced row-echelon form, dropping zero rows.
// Returns the pivot column of each remaining row.
inline std::vector<std::size_t> row_reduce(const FieldSpec& f, Matrix& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Symbol s = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Symbol factor = f.neg(rows[i][c]);
            for (std::size_t j = c; j < n; ++j)
                if (rows[r][j]) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

enum class RankPolicy { strict, reduce };

// [n,k]_q code stored by its reduced row-echelon generator. Immutable.
class LinearCode {
public:
    const FieldSpec& field() const { return field_; }
    unsigned q() const { return field_.q(); }
    std::size_t n() const { return n_; }
    std::size_t k() const { return generator_.size(); }
    const Matrix& generator() const { return generator_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::string& label() const { return label_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    LinearCode with_label(std::string label) const {
        LinearCode c = *this;
        c.label_ = std::move(label);
        return c;
    }

    // message * generator
    Vector encode(const Vector& message) const {
        if (message.size() != k()) throw ParameterError("message length differs from code dimension");
        Vector c(n_, 0);
        for (std::size_t r = 0; r < k(); ++r) {
            if (!message[r]) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (generator_[r][j]) c[j] = field_.add(c[j], field_.mul(message[r], generator_[r][j]));
        }
        return c;
    }

    bool contains(const Vector& x) const {
        if (x.size() != n_) return false;
        Vector rest = x;
        for (std::size_t r = 0; r < k(); ++r) {
            const Symbol c = rest[pivots_[r]];
            if (!c) continue;
            const Symbol factor = field_.neg(c);
            for (std::size_t j = 0; j < n_; ++j)
                if (generator_[r][j]) rest[j] = field_.add(rest[j], field_.mul(factor, generator_[r][j]));
        }
        for (auto v : rest)
            if (v) return false;
        return true;
    }

    // Set equality: the reduced row-echelon form is canonical for a subspace.
    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.generator_ == b.generator_;
    }

    friend LinearCode code_from_generator(const FieldSpec&, Matrix, RankPolicy, std::string);
    friend LinearCode zero_code(const FieldSpec&, std::size_t, std::string);
    friend LinearCode shorten(const LinearCode&, std::size_t);

private:
    FieldSpec field_;
    std::size_t n_ = 0;
    Matrix generator_;
    std::vector<std::size_t> pivots_;
    std::string label_;
    std::vector<std::string> warnings_;
};

// The {0} subspace of F_q^n; arises only as a derived code (dual of the full space, shortening).
inline LinearCode zero_code(const FieldSpec& f, std::size_t n, std::string label = {}) {
    LinearCode c;
    c.field_ = f;
    c.n_ = n;
    c.label_ = std::move(label);
    return c;
}

inline LinearCode code_from_generator(const FieldSpec& f, Matrix rows, RankPolicy policy = RankPolicy::strict,
                                      std::string label = {}) {
    if (rows.empty()) throw ParameterError("generator has no rows");
    const std::size_t n = rows[0].size();
    if (n == 0) throw ParameterError("code length must be positive");
    for (const auto& r : rows) {
        if (r.size() != n) throw ParameterError("generator rows have different lengths");
        for (auto x : r)
            if (x >= f.q()) throw ParameterError("generator entry outside the field");
    }
    const std::size_t k = rows.size();
    LinearCode c;
    c.field_ = f;
    c.n_ = n;
    c.pivots_ = row_reduce(f, rows);
    if (rows.size() < k && policy == RankPolicy::strict)
        throw RankError("generator has rank " + std::to_string(rows.size()) + " < " + std::to_string(k) + " rows");
    if (rows.empty()) throw RankError("generator has rank 0");
    if (rows.size() < k)
        c.warnings_.push_back("generator has rank " + std::to_string(rows.size()) + " < " + std::to_string(k) +
                              " rows; dependent rows dropped");
    c.generator_ = std::move(rows);
    c.label_ = std::move(label);
    return c;
}

// Null space of the generator under the standard inner product.
inline LinearCode dual(const LinearCode& c) {
    const auto& f = c.field();
    const std::size_t n = c.n();
    std::string label = c.label().empty() ? std::string{} : c.label() + "^perp";
    if (c.k() == n) return zero_code(f, n, label);
    std::vector<bool> is_pivot(n, false);
    for (auto p : c.pivots()) is_pivot[p] = true;
    Matrix rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vector v(n, 0);
        v[j] = 1;
        for (std::size_t r = 0; r < c.k(); ++r) v[c.pivots()[r]] = f.neg(c.generator()[r][j]);
        rows.push_back(std::move(v));
    }
    return code_from_generator(f, std::move(rows), RankPolicy::strict, label);
}

inline void check_coordinate(const LinearCode& c, std::size_t m) {
    if (m >= c.n()) throw ParameterError("coordinate " + std::to_string(m) + " out of range for length " + std::to_string(c.n()));
    if (c.n() < 2) throw ParameterError("cannot delete the only coordinate");
}

// Deletes coordinate m (0-based) from every codeword.
inline LinearCode puncture(const LinearCode& c, std::size_t m) {
    check_coordinate(c, m);
    std::string label = c.label().empty() ? std::string{} : c.label() + "^{" + std::to_string(m) + "}";
    if (c.k() == 0) return zero_code(c.field(), c.n() - 1, label);
    Matrix rows = c.generator();
    for (auto& r : rows) r.erase(r.begin() + static_cast<std::ptrdiff_t>(m));
    bool any = false;
    for (auto& r : rows)
        for (auto x : r) any = any || x;
    if (!any) return zero_code(c.field(), c.n() - 1, label);
    return code_from_generator(c.field(), std::move(rows), RankPolicy::reduce, label);
}

// Codewords vanishing at coordinate m (0-based), with that coordinate deleted.
inline LinearCode shorten(const LinearCode& c, std::size_t m) {
    check_coordinate(c, m);
    const auto& f = c.field();
    std::string label = c.label().empty() ? std::string{} : c.label() + "_{" + std::to_string(m) + "}";
    Matrix rows = c.generator();
    std::size_t sel = 0;
    while (sel < rows.size() && rows[sel][m] == 0) ++sel;
    bool degenerate = sel == rows.size();
    if (!degenerate) {
        const Symbol s = f.inv(rows[sel][m]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == sel || rows[i][m] == 0) continue;
            const Symbol factor = f.neg(f.mul(rows[i][m], s));
            for (std::size_t j = 0; j < c.n(); ++j) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[sel][j]));
        }
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(sel));
    }
    for (auto& r : rows) r.erase(r.begin() + static_cast<std::ptrdiff_t>(m));
    LinearCode out = rows.empty() ? zero_code(f, c.n() - 1, label)
                                  : code_from_generator(f, std::move(rows), RankPolicy::strict, label);
    if (degenerate) {
        out.warnings_.push_back("coordinate " + std::to_string(m) + " is zero in every codeword; shortening kept dimension " +
                                std::to_string(c.k()));
    }
    return out;
}

}  // namespace qdesign
