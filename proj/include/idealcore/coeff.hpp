#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "idealcore/errors.hpp"

namespace idealcore {

enum class FieldKind { rational, prime };

// Coefficient field of a ring context: exact rationals, or F_p for a
// 64-bit prime p.  The mode is fixed per context; coefficients from
// different modes never mix.
struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0; // modulus when kind == prime

    static FieldSpec rationals() { return {FieldKind::rational, 0}; }
    static FieldSpec prime_field(std::uint64_t p); // validates primality

    bool operator==(const FieldSpec&) const = default;
    std::string str() const; // "Q" or "Fp<p>"
};

bool is_prime_u64(std::uint64_t n);

// A field element.  Rational mode keeps an exact mpq (lowest terms,
// positive denominator — mpq_class canonicalizes); prime mode keeps the
// canonical residue in [0, p).
class Coeff {
public:
    Coeff() = default; // rational zero

    static Coeff zero(const FieldSpec& f);
    static Coeff one(const FieldSpec& f);
    static Coeff from_mpq(mpq_class v); // rational mode
    static Coeff from_mpz(mpz_class v, const FieldSpec& f);
    static Coeff from_long(long v, const FieldSpec& f);
    // numerator/denominator given as decimal strings (arbitrary size)
    static Coeff from_fraction(const std::string& num, const std::string& den,
                               const FieldSpec& f);

    FieldSpec field() const {
        return p_ ? FieldSpec{FieldKind::prime, p_} : FieldSpec::rationals();
    }

    bool is_zero() const;
    bool is_one() const;
    // True when the canonical printed form carries a leading minus
    // (always false in prime mode: residues print as-is).
    bool is_negative() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const; // errors on zero divisor
    Coeff operator-() const;
    Coeff inv() const;
    Coeff abs() const; // |.| in rational mode, identity in prime mode

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Rational-mode accessors (error in prime mode).
    const mpq_class& rat() const;
    // Prime-mode accessors (error in rational mode).
    std::uint64_t residue() const;

    std::string str() const;

private:
    void check_same(const Coeff& o) const;

    mpq_class q_;          // rational value (rational mode only)
    std::uint64_t r_ = 0;  // residue (prime mode only)
    std::uint64_t p_ = 0;  // 0 = rational mode
};

} // namespace idealcore
