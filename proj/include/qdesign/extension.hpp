#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace qdesign {

// F_{q^2} built directly (degree 2m over F_p) together with F_q identified as the
// fixed field of x -> x^q through explicit index-remapping tables.
class QuadraticExtension {
public:
    explicit QuadraticExtension(std::uint64_t q) : base_(make_field(q)), ext_(make_field(q * q)) {
        const unsigned qq = base_.q();
        // Nonzero subfield elements are alpha^((q+1)j); take the smallest j whose power
        // is a root of the base modulus.
        std::optional<Symbol> root;
        for (unsigned j = 0; j < qq - 1 && !root; ++j) {
            Symbol beta = ext_.exp(std::int64_t(qq + 1) * j);
            Symbol acc = 0;
            const auto& mod = base_.modulus();
            for (std::size_t i = mod.size(); i-- > 0;) acc = ext_.add(ext_.mul(acc, beta), ext_.from_int(mod[i]));
            if (acc == 0) root = beta;
        }
        if (!root) throw InternalError("base modulus has no root in the quadratic extension");

        to_ext_.assign(qq, 0);
        to_base_.assign(ext_.q(), -1);
        for (unsigned a = 0; a < qq; ++a) {
            auto dig = base_.digits(static_cast<Symbol>(a));
            Symbol acc = 0;
            for (std::size_t i = dig.size(); i-- > 0;) acc = ext_.add(ext_.mul(acc, *root), ext_.from_int(dig[i]));
            if (ext_.pow(acc, qq) != acc || to_base_[acc] != -1) throw InternalError("subfield embedding is not injective into the fixed field");
            to_ext_[a] = acc;
            to_base_[acc] = static_cast<int>(a);
        }

        gamma_ = ext_.exp(qq - 1);
        unity_.resize(qq + 1);
        Symbol u = 1;
        for (unsigned i = 0; i <= qq; ++i, u = ext_.mul(u, gamma_)) unity_[i] = u;
    }

    const FieldSpec& base() const { return base_; }
    const FieldSpec& ext() const { return ext_; }
    unsigned q() const { return base_.q(); }

    Symbol embed(Symbol a) const { return to_ext_[a]; }
    // Base-field index of x, or nullopt when x lies outside F_q.
    std::optional<Symbol> restrict_to_base(Symbol x) const {
        int r = to_base_[x];
        if (r < 0) return std::nullopt;
        return static_cast<Symbol>(r);
    }
    Symbol frobenius(Symbol x) const { return ext_.pow(x, base_.q()); }

    // Tr(x) = x + x^q as an F_q index.
    Symbol trace(Symbol x) const {
        auto r = restrict_to_base(ext_.add(x, frobenius(x)));
        if (!r) throw InternalError("trace left the base field");
        return *r;
    }

    // gamma = alpha^(q-1), generator of the order-(q+1) subgroup U.
    Symbol gamma() const { return gamma_; }
    // U ordered as gamma^i, i = 0..q.
    const std::vector<Symbol>& unity_subgroup() const { return unity_; }

private:
    FieldSpec base_, ext_;
    std::vector<Symbol> to_ext_;
    std::vector<int> to_base_;
    Symbol gamma_ = 1;
    std::vector<Symbol> unity_;
};

inline Symbol trace_down(const QuadraticExtension& ext, Symbol x) { return ext.trace(x); }

inline const std::vector<Symbol>& unity_subgroup(const QuadraticExtension& ext) { return ext.unity_subgroup(); }

}  // namespace qdesign
