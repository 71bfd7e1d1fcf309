#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "c4gb/exponent.hpp"
#include "c4gb/field.hpp"
#include "c4gb/staircase.hpp"

namespace c4gb {

// Multivariate polynomial in total lex order x_1 > ... > x_n. Terms iterate
// in decreasing lex order; zero coefficients are never stored.
class LexPolynomial {
public:
    using TermMap = std::map<Exponent, FieldElement, LexGreater>;

    LexPolynomial(int dim, FieldDesc field) : dim_(dim), field_(field) {}

    static LexPolynomial zero(int dim, FieldDesc field) { return LexPolynomial(dim, field); }
    static LexPolynomial constant(int dim, const FieldElement& c);
    static LexPolynomial monomial(const Exponent& e, const FieldElement& c);
    // x_axis - c, axis 1-based.
    static LexPolynomial linear(int dim, int axis, const FieldElement& c);

    int dim() const { return dim_; }
    const FieldDesc& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Exponent& leading_exponent() const;  // rejects the zero polynomial
    const FieldElement& leading_coefficient() const;
    FieldElement coefficient(const Exponent& e) const;  // zero if absent

    void add_term(const Exponent& e, const FieldElement& c);  // accumulates, drops zeros

    LexPolynomial operator+(const LexPolynomial& o) const;
    LexPolynomial operator-(const LexPolynomial& o) const;
    LexPolynomial operator*(const LexPolynomial& o) const;
    LexPolynomial operator-() const;
    LexPolynomial scaled(const FieldElement& c) const;
    LexPolynomial times_monomial(const Exponent& e, const FieldElement& c) const;

    bool operator==(const LexPolynomial& o) const;
    bool operator!=(const LexPolynomial& o) const { return !(*this == o); }

    // p(x_1,...,x_{n-1}, value) as a polynomial in n-1 variables.
    LexPolynomial substitute_last(const FieldElement& value) const;
    // Reinterpret in n+1 variables with last exponent 0.
    LexPolynomial lift() const;
    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    std::string str() const;

private:
    int dim_;
    FieldDesc field_;
    TermMap terms_;

    void check_compatible(const LexPolynomial& o) const;
};

// Reduced lex Groebner basis of a monic ideal with standard set Delta: one
// monic polynomial per corner, leading exponent the corner, all other
// exponents in Delta and lex-smaller. Immutable; the on-demand extension
// table is the only mutable state and is lock-protected (copies share it).
class ReducedGB {
public:
    ReducedGB(StandardSet delta, FieldDesc field, std::map<Exponent, LexPolynomial, LexLess> entries);

    const StandardSet& delta() const { return delta_; }
    const FieldDesc& field() const { return field_; }
    int dim() const { return delta_.dim(); }
    const std::map<Exponent, LexPolynomial, LexLess>& entries() const { return entries_; }

    // Unique representative of p modulo the ideal with support in Delta;
    // always cancels the lex-greatest reducible term first.
    LexPolynomial normal_form(const LexPolynomial& p) const;

    // The unique monic element with leading exponent a and tail in Delta,
    // for any a outside Delta; corners return the stored entry. Memoized.
    LexPolynomial extended(const Exponent& a) const;

    bool operator==(const ReducedGB& o) const {
        return delta_ == o.delta_ && field_ == o.field_ && entries_ == o.entries_;
    }

private:
    StandardSet delta_;
    FieldDesc field_;
    std::map<Exponent, LexPolynomial, LexLess> entries_;

    struct ExtensionCache {
        std::mutex mu;
        std::map<Exponent, LexPolynomial, LexLess> table;
    };
    std::shared_ptr<ExtensionCache> cache_;
};

}  // namespace c4gb
