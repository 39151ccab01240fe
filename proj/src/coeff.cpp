#include "idealcore/coeff.hpp"

#include "idealcore/counters.hpp"

namespace idealcore {

Counters& counters() {
    thread_local Counters c;
    return c;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Modular inverse by extended Euclid; p prime, 0 < a < p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit with the standard witness set.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (1ULL << 63))
        throw InputError("prime modulus too large (must fit in 63 bits): " + std::to_string(p));
    if (!is_prime_u64(p))
        throw InputError("non-prime modulus: " + std::to_string(p));
    return {FieldKind::prime, p};
}

std::string FieldSpec::str() const {
    return kind == FieldKind::rational ? "Q" : "Fp" + std::to_string(p);
}

Coeff Coeff::zero(const FieldSpec& f) {
    Coeff c;
    if (f.kind == FieldKind::prime) c.p_ = f.p;
    return c;
}

Coeff Coeff::one(const FieldSpec& f) {
    Coeff c = zero(f);
    if (c.p_) c.r_ = 1 % c.p_;
    else c.q_ = 1;
    return c;
}

Coeff Coeff::from_mpq(mpq_class v) {
    Coeff c;
    v.canonicalize();
    c.q_ = std::move(v);
    return c;
}

Coeff Coeff::from_mpz(mpz_class v, const FieldSpec& f) {
    if (f.kind == FieldKind::rational) return from_mpq(mpq_class(std::move(v)));
    Coeff c = zero(f);
    mpz_class r = v % static_cast<unsigned long>(f.p);
    if (r < 0) r += static_cast<unsigned long>(f.p);
    c.r_ = mpz_get_ui(r.get_mpz_t());
    return c;
}

Coeff Coeff::from_long(long v, const FieldSpec& f) {
    return from_mpz(mpz_class(v), f);
}

Coeff Coeff::from_fraction(const std::string& num, const std::string& den, const FieldSpec& f) {
    mpz_class n(num), d(den);
    if (d == 0) throw InputError("zero denominator in coefficient");
    if (f.kind == FieldKind::rational) {
        mpq_class q(n);
        q /= mpq_class(d);
        return from_mpq(q);
    }
    Coeff cn = from_mpz(n, f), cd = from_mpz(d, f);
    if (cd.is_zero())
        throw InputError("denominator divisible by the field characteristic: " + den);
    return cn / cd;
}

bool Coeff::is_zero() const { return p_ ? r_ == 0 : q_ == 0; }

bool Coeff::is_one() const { return p_ ? r_ == 1 % p_ : q_ == 1; }

bool Coeff::is_negative() const { return p_ ? false : q_ < 0; }

void Coeff::check_same(const Coeff& o) const {
    if (p_ != o.p_)
        throw InputError("mixed coefficient modes: " + field().str() + " vs " + o.field().str());
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_same(o);
    Coeff c = *this;
    if (p_) {
        c.r_ = r_ + o.r_;
        if (c.r_ >= p_) c.r_ -= p_;
    } else {
        c.q_ += o.q_;
    }
    return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_same(o);
    Coeff c = *this;
    if (p_) {
        c.r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    } else {
        c.q_ -= o.q_;
    }
    return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_same(o);
    Coeff c = *this;
    if (p_) c.r_ = mulmod(r_, o.r_, p_);
    else c.q_ *= o.q_;
    return c;
}

Coeff Coeff::operator/(const Coeff& o) const {
    return *this * o.inv();
}

Coeff Coeff::operator-() const {
    Coeff c = *this;
    if (p_) c.r_ = r_ ? p_ - r_ : 0;
    else c.q_ = -q_;
    return c;
}

Coeff Coeff::inv() const {
    if (is_zero()) throw InputError("division by zero coefficient");
    Coeff c = *this;
    if (p_) c.r_ = invmod(r_, p_);
    else c.q_ = 1 / q_;
    return c;
}

Coeff Coeff::abs() const {
    Coeff c = *this;
    if (!p_) c.q_ = ::abs(q_);
    return c;
}

bool Coeff::operator==(const Coeff& o) const {
    if (p_ != o.p_) return false;
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

const mpq_class& Coeff::rat() const {
    if (p_) throw InternalError("rat() on a prime-field coefficient");
    return q_;
}

std::uint64_t Coeff::residue() const {
    if (!p_) throw InternalError("residue() on a rational coefficient");
    return r_;
}

std::string Coeff::str() const {
    return p_ ? std::to_string(r_) : q_.get_str();
}

} // namespace idealcore
