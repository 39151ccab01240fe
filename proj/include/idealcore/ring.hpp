#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealcore/polynomial.hpp"

namespace idealcore {

class RingContext;
using Ctx = std::shared_ptr<const RingContext>;

// Immutable description of the ring being worked in: a polynomial ring
// k[vars] with positive weights, optionally modulo a defining ideal Q0
// (elements are then handled as ambient representatives; every basis
// computation adjoins the Q0 generators).  All polynomial values crossing
// this interface are canonically sorted under canonical_order().
class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    static Ctx polynomial_ring(FieldSpec field, std::vector<std::string> vars,
                               std::vector<long long> weights = {});
    // Same variables/field, with a defining ideal; generators must be
    // nonzero without constant term (so Q0 is proper and sits in m).
    Ctx with_quotient(std::vector<Polynomial> gens) const;
    // This ring without its quotient (ambient polynomial ring).
    Ctx ambient() const;
    // Appends fresh variables.  Internal extensions may carry weight-0
    // auxiliaries (the universal-setup grading needs them); user-facing
    // contexts keep strictly positive weights.
    Ctx extended(const std::vector<std::string>& names,
                 const std::vector<long long>& ws) const;

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<long long>& weights() const { return weights_; }
    const FieldSpec& field() const { return field_; }
    bool is_quotient() const { return !quotient_.empty(); }
    const std::vector<Polynomial>& quotient_gens() const { return quotient_; }
    const MonomialOrder& canonical_order() const { return order_; }
    bool unit_weights() const { return unit_weights_; }

    std::string signature() const;
    bool same_ring(const RingContext& o) const;

    int var_index(const std::string& name) const; // -1 if absent
    std::string fresh_name(const std::string& base) const;

    // value factories
    Monomial monomial(std::vector<unsigned> exps) const;
    Polynomial constant(Coeff c) const;
    Polynomial one() const { return constant(Coeff::one(field_)); }
    Polynomial variable(std::size_t i) const;
    Polynomial from_terms(std::vector<Term> ts) const;

    // arithmetic under the canonical order
    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial sub(const Polynomial& a, const Polynomial& b) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    Polynomial pow(const Polynomial& a, unsigned k) const;
    Polynomial exact_div(const Polynomial& a, const Polynomial& b) const;

    // text form: "3*U^2*V - 1/2*W"; parse(str(p)) == p exactly
    Polynomial parse(const std::string& text) const;
    std::string str(const Polynomial& p) const;

    // embeddings: this must be a prefix of big's variable list
    Polynomial lift_to(const Ctx& big, const Polynomial& p) const;
    // inverse of lift: errors if p touches the appended variables
    Polynomial project_suffix(const Polynomial& p, const Ctx& small) const;
    // image under "keep listed variables, send the rest to 0", expressed
    // in `target` whose variables are exactly keep (in that order)
    Polynomial restrict_vars(const Polynomial& p, const std::vector<std::size_t>& keep,
                             const Ctx& target) const;
    // exact copy into `target` mapping variable keep[k] -> target var k;
    // errors if p involves a variable outside keep
    Polynomial map_vars(const Polynomial& p, const std::vector<std::size_t>& keep,
                        const Ctx& target) const;

private:
    RingContext() = default;

    FieldSpec field_;
    std::vector<std::string> vars_;
    std::vector<long long> weights_;
    std::vector<Polynomial> quotient_;
    MonomialOrder order_;
    bool unit_weights_ = true;
};

} // namespace idealcore
