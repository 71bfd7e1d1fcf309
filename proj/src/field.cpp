#include "c4gb/field.hpp"

#include <map>
#include <mutex>

namespace c4gb {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw ZeroDivision("inverse of zero in F_" + std::to_string(p));
    // p is prime, so Fermat works and avoids signed bookkeeping
    return pow_mod(a, p - 2, p);
}

// Smallest quadratic non-residue mod p; defines t^2 = r for F_{p^2}.
std::uint64_t nonresidue(std::uint64_t p) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::uint64_t r = 2;
    while (pow_mod(r, (p - 1) / 2, p) == 1) ++r;
    cache[p] = r;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string FieldDesc::str() const {
    switch (kind) {
        case FieldKind::Q: return "Q";
        case FieldKind::Fp: return "F_" + std::to_string(p);
        case FieldKind::Fp2: return "F_" + std::to_string(p) + "^2";
    }
    return "?";
}

FieldElement FieldElement::rational(long num, long den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return rational(std::move(v));
}

FieldElement FieldElement::rational(mpq_class v) {
    FieldElement e;
    e.desc_ = field_q();
    e.rat_ = std::move(v);
    return e;
}

FieldElement FieldElement::prime(std::uint64_t v, std::uint64_t p) {
    FieldElement e;
    e.desc_ = field_fp(p);
    e.a_ = v % p;
    return e;
}

FieldElement FieldElement::quad(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    FieldElement e;
    e.desc_ = field_fp2(p);
    e.a_ = a % p;
    e.b_ = b % p;
    return e;
}

FieldElement FieldElement::zero(const FieldDesc& fd) { return from_integer(0, fd); }
FieldElement FieldElement::one(const FieldDesc& fd) { return from_integer(1, fd); }

FieldElement FieldElement::from_integer(long v, const FieldDesc& fd) {
    switch (fd.kind) {
        case FieldKind::Q: return rational(v);
        case FieldKind::Fp: {
            long r = v % static_cast<long>(fd.p);
            if (r < 0) r += static_cast<long>(fd.p);
            return prime(static_cast<std::uint64_t>(r), fd.p);
        }
        case FieldKind::Fp2: {
            long r = v % static_cast<long>(fd.p);
            if (r < 0) r += static_cast<long>(fd.p);
            return quad(static_cast<std::uint64_t>(r), 0, fd.p);
        }
    }
    throw Error("unreachable field kind");
}

bool FieldElement::is_zero() const {
    switch (desc_.kind) {
        case FieldKind::Q: return rat_ == 0;
        case FieldKind::Fp: return a_ == 0;
        case FieldKind::Fp2: return a_ == 0 && b_ == 0;
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (desc_.kind) {
        case FieldKind::Q: return rat_ == 1;
        case FieldKind::Fp: return a_ == 1 % desc_.p;
        case FieldKind::Fp2: return a_ == 1 % desc_.p && b_ == 0;
    }
    return false;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(desc_ == o.desc_))
        throw FieldMismatch("mixed fields: " + desc_.str() + " vs " + o.desc_.str());
}

FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    switch (desc_.kind) {
        case FieldKind::Q: r.rat_ = -rat_; break;
        case FieldKind::Fp: r.a_ = a_ == 0 ? 0 : desc_.p - a_; break;
        case FieldKind::Fp2:
            r.a_ = a_ == 0 ? 0 : desc_.p - a_;
            r.b_ = b_ == 0 ? 0 : desc_.p - b_;
            break;
    }
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r(*this);
    switch (desc_.kind) {
        case FieldKind::Q: r.rat_ = rat_ + o.rat_; break;
        case FieldKind::Fp: r.a_ = add_mod(a_, o.a_, desc_.p); break;
        case FieldKind::Fp2:
            r.a_ = add_mod(a_, o.a_, desc_.p);
            r.b_ = add_mod(b_, o.b_, desc_.p);
            break;
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement r(*this);
    switch (desc_.kind) {
        case FieldKind::Q: r.rat_ = rat_ - o.rat_; break;
        case FieldKind::Fp: r.a_ = sub_mod(a_, o.a_, desc_.p); break;
        case FieldKind::Fp2:
            r.a_ = sub_mod(a_, o.a_, desc_.p);
            r.b_ = sub_mod(b_, o.b_, desc_.p);
            break;
    }
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement r(*this);
    switch (desc_.kind) {
        case FieldKind::Q: r.rat_ = rat_ * o.rat_; break;
        case FieldKind::Fp: r.a_ = mul_mod(a_, o.a_, desc_.p); break;
        case FieldKind::Fp2: {
            // (a + bt)(c + dt) = ac + bd r + (ad + bc) t, t^2 = r
            std::uint64_t p = desc_.p, rr = nonresidue(p);
            std::uint64_t na = add_mod(mul_mod(a_, o.a_, p), mul_mod(mul_mod(b_, o.b_, p), rr, p), p);
            std::uint64_t nb = add_mod(mul_mod(a_, o.b_, p), mul_mod(b_, o.a_, p), p);
            r.a_ = na;
            r.b_ = nb;
            break;
        }
    }
    return r;
}

FieldElement FieldElement::inverse() const {
    FieldElement r(*this);
    switch (desc_.kind) {
        case FieldKind::Q:
            if (rat_ == 0) throw ZeroDivision("inverse of zero in Q");
            r.rat_ = 1 / rat_;
            break;
        case FieldKind::Fp: r.a_ = inv_mod(a_, desc_.p); break;
        case FieldKind::Fp2: {
            // (a + bt)^{-1} = (a - bt) / (a^2 - r b^2); the norm is nonzero
            // because r is a non-residue.
            std::uint64_t p = desc_.p, rr = nonresidue(p);
            std::uint64_t norm = sub_mod(mul_mod(a_, a_, p), mul_mod(mul_mod(b_, b_, p), rr, p), p);
            std::uint64_t ninv = inv_mod(norm, p);
            r.a_ = mul_mod(a_, ninv, p);
            r.b_ = mul_mod(b_ == 0 ? 0 : p - b_, ninv, p);
            break;
        }
    }
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement base(*this), acc = one(desc_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::frobenius() const {
    if (desc_.kind != FieldKind::Fp2) return *this;
    // t^p = -t since t^2 is a non-residue, so Frobenius is conjugation.
    FieldElement r(*this);
    r.b_ = b_ == 0 ? 0 : desc_.p - b_;
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!(desc_ == o.desc_)) return false;
    switch (desc_.kind) {
        case FieldKind::Q: return rat_ == o.rat_;
        case FieldKind::Fp: return a_ == o.a_;
        case FieldKind::Fp2: return a_ == o.a_ && b_ == o.b_;
    }
    return false;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same(o);
    switch (desc_.kind) {
        case FieldKind::Q: return rat_ < o.rat_;
        case FieldKind::Fp: return a_ < o.a_;
        case FieldKind::Fp2: return a_ != o.a_ ? a_ < o.a_ : b_ < o.b_;
    }
    return false;
}

const mpq_class& FieldElement::rat() const {
    if (desc_.kind != FieldKind::Q) throw FieldMismatch("not a rational");
    return rat_;
}

std::uint64_t FieldElement::residue() const {
    if (desc_.kind != FieldKind::Fp) throw FieldMismatch("not a prime-field residue");
    return a_;
}

std::pair<std::uint64_t, std::uint64_t> FieldElement::parts() const {
    if (desc_.kind != FieldKind::Fp2) throw FieldMismatch("not an F_{p^2} element");
    return {a_, b_};
}

FieldElement FieldElement::to_prime_field(std::uint64_t p) const {
    if (desc_.kind == FieldKind::Fp) {
        if (desc_.p != p) throw FieldMismatch("residue from wrong modulus");
        return *this;
    }
    if (desc_.kind != FieldKind::Q) throw FieldMismatch("cannot reduce " + desc_.str());
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        throw ZeroDivision("denominator divisible by " + std::to_string(p));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    std::uint64_t n64 = nr.get_ui(), d64 = dr.get_ui();
    return prime(mul_mod(n64, inv_mod(d64, p), p), p);
}

std::string FieldElement::str() const {
    switch (desc_.kind) {
        case FieldKind::Q: {
            if (rat_.get_den() == 1) return rat_.get_num().get_str();
            return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
        }
        case FieldKind::Fp: return std::to_string(a_);
        case FieldKind::Fp2: return std::to_string(a_) + "+" + std::to_string(b_) + "t";
    }
    return "?";
}

}  // namespace c4gb
