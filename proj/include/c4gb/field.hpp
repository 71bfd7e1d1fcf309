#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "c4gb/errors.hpp"

namespace c4gb {

enum class FieldKind { Q, Fp, Fp2 };

// Describes the coefficient field. Fp2 is the quadratic extension of F_p with
// a fixed generator t, t^2 = r for the smallest quadratic non-residue r; it
// exists only for internal sanity checks and is never serialized.
struct FieldDesc {
    FieldKind kind = FieldKind::Q;
    std::uint64_t p = 0;

    bool operator==(const FieldDesc&) const = default;
    std::string str() const;
};

inline FieldDesc field_q() { return {FieldKind::Q, 0}; }
inline FieldDesc field_fp(std::uint64_t p) { return {FieldKind::Fp, p}; }
inline FieldDesc field_fp2(std::uint64_t p) { return {FieldKind::Fp2, p}; }

bool is_prime(std::uint64_t p);

// Exact scalar: an arbitrary-precision rational, a residue mod p, or an
// element a + b*t of F_{p^2}. Values are immutable and always canonical;
// mixing fields in arithmetic throws FieldMismatch.
class FieldElement {
public:
    FieldElement() : desc_(field_q()), rat_(0) {}

    static FieldElement rational(long num, long den = 1);
    static FieldElement rational(mpq_class v);
    static FieldElement prime(std::uint64_t v, std::uint64_t p);
    static FieldElement quad(std::uint64_t a, std::uint64_t b, std::uint64_t p);
    static FieldElement zero(const FieldDesc& fd);
    static FieldElement one(const FieldDesc& fd);
    static FieldElement from_integer(long v, const FieldDesc& fd);

    const FieldDesc& field() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;  // throws ZeroDivision on zero
    FieldElement pow(std::uint64_t e) const;

    // x -> x^p on Fp2 (= conjugation); identity on Q and Fp.
    FieldElement frobenius() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Canonical total order, used for map keys and deterministic sorting.
    bool operator<(const FieldElement& o) const;

    const mpq_class& rat() const;                       // requires Q
    std::uint64_t residue() const;                      // requires Fp
    std::pair<std::uint64_t, std::uint64_t> parts() const;  // requires Fp2

    // Reduce a rational with p-free denominator into F_p.
    FieldElement to_prime_field(std::uint64_t p) const;

    std::string str() const;

private:
    FieldDesc desc_;
    mpq_class rat_;             // Q payload
    std::uint64_t a_ = 0;       // Fp residue, or Fp2 constant part
    std::uint64_t b_ = 0;       // Fp2 t-coefficient

    void check_same(const FieldElement& o) const;
};

}  // namespace c4gb
