#pragma once

#include <cstdint>
#include <vector>

#include "idealcore/errors.hpp"

namespace idealcore {

// Power product in a fixed number of variables.  The weighted degree
// (dot product with the owning context's weight vector) and the total
// degree are cached at construction and maintained additively by the
// multiplicative operations, so they never need the weight vector again.
class Monomial {
public:
    Monomial() = default; // monomial 1 in zero variables

    Monomial(std::vector<unsigned> exps, const std::vector<long long>& weights);
    static Monomial one(std::size_t nvars);

    std::size_t nvars() const { return e_.size(); }
    unsigned exp(std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exps() const { return e_; }
    long long weighted_degree() const { return wdeg_; }
    unsigned total_degree() const { return tdeg_; }
    bool is_one() const { return tdeg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const; // this | o
    Monomial operator/(const Monomial& o) const; // errors unless o | this
    bool coprime(const Monomial& o) const;
    // lcm/gcd rebuild the degree caches and therefore need the weights.
    static Monomial lcm(const Monomial& a, const Monomial& b,
                        const std::vector<long long>& weights);
    static Monomial gcd(const Monomial& a, const Monomial& b,
                        const std::vector<long long>& weights);

    // Bit i set iff variable i occurs.  Contexts cap nvars at 64.
    std::uint64_t support() const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<unsigned> e_;
    long long wdeg_ = 0;
    unsigned tdeg_ = 0;
};

// Dot product of exponents with an explicit weight vector.  This is the
// public entry point and enforces strictly positive weights; internal
// grading bookkeeping goes through the cached value instead (auxiliary
// variables of internally extended contexts may carry weight 0).
long long weighted_degree(const Monomial& m, const std::vector<long long>& weights);

} // namespace idealcore
