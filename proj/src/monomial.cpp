#include "idealcore/monomial.hpp"

#include <algorithm>

namespace idealcore {

Monomial::Monomial(std::vector<unsigned> exps, const std::vector<long long>& weights)
    : e_(std::move(exps)) {
    if (e_.size() != weights.size())
        throw InputError("exponent/weight length mismatch: " + std::to_string(e_.size()) +
                         " vs " + std::to_string(weights.size()));
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (weights[i] < 0) throw InputError("negative weight");
        wdeg_ += static_cast<long long>(e_[i]) * weights[i];
        tdeg_ += e_[i];
    }
}

Monomial Monomial::one(std::size_t nvars) {
    Monomial m;
    m.e_.assign(nvars, 0);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw InternalError("monomial arity mismatch in *");
    Monomial m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    m.wdeg_ += o.wdeg_;
    m.tdeg_ += o.tdeg_;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw InternalError("monomial arity mismatch in divides");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw InternalError("inexact monomial division");
    Monomial m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    m.wdeg_ -= o.wdeg_;
    m.tdeg_ -= o.tdeg_;
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b,
                       const std::vector<long long>& weights) {
    std::vector<unsigned> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e), weights);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b,
                       const std::vector<long long>& weights) {
    std::vector<unsigned> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(e), weights);
}

std::uint64_t Monomial::support() const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i]) s |= 1ULL << i;
    return s;
}

long long weighted_degree(const Monomial& m, const std::vector<long long>& weights) {
    if (m.nvars() != weights.size())
        throw InputError("exponent/weight length mismatch: " + std::to_string(m.nvars()) +
                         " vs " + std::to_string(weights.size()));
    long long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) throw InputError("non-positive weight");
        d += static_cast<long long>(m.exp(i)) * weights[i];
    }
    return d;
}

} // namespace idealcore
