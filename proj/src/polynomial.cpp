#include "c4gb/polynomial.hpp"

#include <sstream>

namespace c4gb {

LexPolynomial LexPolynomial::constant(int dim, const FieldElement& c) {
    LexPolynomial p(dim, c.field());
    p.add_term(Exponent(static_cast<std::size_t>(dim), 0), c);
    return p;
}

LexPolynomial LexPolynomial::monomial(const Exponent& e, const FieldElement& c) {
    LexPolynomial p(static_cast<int>(e.size()), c.field());
    p.add_term(e, c);
    return p;
}

LexPolynomial LexPolynomial::linear(int dim, int axis, const FieldElement& c) {
    LexPolynomial p(dim, c.field());
    p.add_term(unit_exponent(dim, axis - 1), FieldElement::one(c.field()));
    p.add_term(Exponent(static_cast<std::size_t>(dim), 0), -c);
    return p;
}

const Exponent& LexPolynomial::leading_exponent() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const FieldElement& LexPolynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

FieldElement LexPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void LexPolynomial::add_term(const Exponent& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != dim_) throw DimensionMismatch("term of wrong arity");
    if (!(c.field() == field_)) throw FieldMismatch("coefficient from wrong field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LexPolynomial::check_compatible(const LexPolynomial& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("polynomials of different arity");
    if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
}

LexPolynomial LexPolynomial::operator+(const LexPolynomial& o) const {
    check_compatible(o);
    LexPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LexPolynomial LexPolynomial::operator-(const LexPolynomial& o) const {
    check_compatible(o);
    LexPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LexPolynomial LexPolynomial::operator-() const {
    LexPolynomial r(dim_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LexPolynomial LexPolynomial::operator*(const LexPolynomial& o) const {
    check_compatible(o);
    LexPolynomial r(dim_, field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exponent_sum(e1, e2), c1 * c2);
    return r;
}

LexPolynomial LexPolynomial::scaled(const FieldElement& c) const {
    LexPolynomial r(dim_, field_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LexPolynomial LexPolynomial::times_monomial(const Exponent& e, const FieldElement& c) const {
    LexPolynomial r(dim_, field_);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms_) r.terms_.emplace(exponent_sum(t, e), k * c);
    return r;
}

bool LexPolynomial::operator==(const LexPolynomial& o) const {
    return dim_ == o.dim_ && field_ == o.field_ && terms_ == o.terms_;
}

LexPolynomial LexPolynomial::substitute_last(const FieldElement& value) const {
    if (dim_ < 1) throw DimensionMismatch("no last variable to substitute");
    LexPolynomial r(dim_ - 1, field_);
    for (const auto& [e, c] : terms_)
        r.add_term(drop_last(e), c * value.pow(static_cast<std::uint64_t>(e.back())));
    return r;
}

LexPolynomial LexPolynomial::lift() const {
    LexPolynomial r(dim_ + 1, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(with_last(e, 0), c);
    return r;
}

FieldElement LexPolynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != dim_) throw DimensionMismatch("evaluation point arity");
    FieldElement acc = FieldElement::zero(field_);
    for (const auto& [e, c] : terms_) {
        FieldElement m = c;
        for (int i = 0; i < dim_; ++i)
            m = m * point[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]));
        acc = acc + m;
    }
    return acc;
}

std::string LexPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) os << "*x" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
}

ReducedGB::ReducedGB(StandardSet delta, FieldDesc field,
                     std::map<Exponent, LexPolynomial, LexLess> entries)
    : delta_(std::move(delta)),
      field_(field),
      entries_(std::move(entries)),
      cache_(std::make_shared<ExtensionCache>()) {
    auto corners = delta_.corners();
    if (corners.size() != entries_.size())
        throw Error("basis must carry exactly one entry per corner");
    for (const auto& alpha : corners) {
        auto it = entries_.find(alpha);
        if (it == entries_.end())
            throw Error("missing basis entry for corner (" + exponent_key(alpha) + ")");
        const LexPolynomial& f = it->second;
        if (f.dim() != delta_.dim()) throw DimensionMismatch("basis entry arity mismatch");
        if (!(f.field() == field_)) throw FieldMismatch("basis entry over wrong field");
        if (f.is_zero() || !(f.leading_exponent() == alpha) || !f.leading_coefficient().is_one())
            throw Error("basis entry for (" + exponent_key(alpha) + ") is not monic with that leading exponent");
        bool lead = true;
        for (const auto& [e, c] : f.terms()) {
            if (lead) {
                lead = false;
                continue;
            }
            if (!delta_.contains(e) || !lex_less(e, alpha))
                throw Error("basis entry tail leaves the standard set");
        }
    }
}

LexPolynomial ReducedGB::normal_form(const LexPolynomial& p) const {
    if (p.dim() != dim()) throw DimensionMismatch("normal form arity mismatch");
    if (!(p.field() == field_)) throw FieldMismatch("normal form field mismatch");
    LexPolynomial r = p;
    while (true) {
        // the lex-greatest term outside Delta (terms iterate decreasing)
        const Exponent* off = nullptr;
        for (const auto& [e, c] : r.terms()) {
            if (!delta_.contains(e)) {
                off = &e;
                break;
            }
        }
        if (!off) return r;
        const Exponent gamma = *off;
        const FieldElement c = r.coefficient(gamma);
        bool reduced = false;
        for (const auto& [corner, f] : entries_) {
            if (divides(corner, gamma)) {
                r = r - f.times_monomial(exponent_diff(gamma, corner), c);
                reduced = true;
                break;
            }
        }
        if (!reduced)
            throw InternalReductionFailure("no corner divides (" + exponent_key(gamma) + ")");
    }
}

LexPolynomial ReducedGB::extended(const Exponent& a) const {
    if (delta_.contains(a)) throw Error("exponent lies inside the standard set");
    auto it = entries_.find(a);
    if (it != entries_.end()) return it->second;
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto hit = cache_->table.find(a);
        if (hit != cache_->table.end()) return hit->second;
    }
    LexPolynomial xa = LexPolynomial::monomial(a, FieldElement::one(field_));
    LexPolynomial f = xa - normal_form(xa);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->table.emplace(a, std::move(f)).first->second;
}

}  // namespace c4gb
