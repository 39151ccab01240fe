#include "idealcore/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "idealcore/counters.hpp"

namespace idealcore {

namespace {

constexpr int kSaturationCap = 64;
constexpr int kContractionCap = 256; // monomial-degree ceiling for origin parts
constexpr std::size_t kMinorBudget = 100000;

void check_same_ctx(const Ideal& I, const Ideal& J, const char* what) {
    if (!I.ctx() || !J.ctx() || !I.ctx()->same_ring(*J.ctx()))
        throw InputError(std::string(what) + ": operands live in different rings");
}

} // namespace

Ideal::Ideal(Ctx ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    if (!ctx_) throw InternalError("ideal without a ring context");
    for (const Polynomial& g : gens_) {
        if (g.is_zero()) continue;
        if (!(g.lc().field() == ctx_->field()))
            throw InputError("generator coefficient mode differs from the ring's");
        if (g.lm().exps().size() != ctx_->nvars())
            throw InternalError("generator from a ring with different variables");
    }
}

const GroebnerBasis& Ideal::basis() const { return basis(ctx_->canonical_order()); }

const GroebnerBasis& Ideal::basis(const MonomialOrder& ord) const {
    if (!cache_) throw InternalError("operations on an empty ideal handle");
    std::lock_guard<std::mutex> lock(cache_->mu);
    std::string key = ord.key();
    auto it = cache_->by_order.find(key);
    if (it == cache_->by_order.end()) {
        std::vector<Polynomial> all = gens_;
        for (const Polynomial& q : ctx_->quotient_gens()) all.push_back(q);
        it = cache_->by_order.emplace(key, buchberger(ctx_, std::move(all), ord)).first;
    }
    return it->second;
}

const std::vector<Polynomial>& Ideal::reduced_gens() const { return basis().gens; }

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, basis()).is_zero(); }

bool Ideal::contains(const Ideal& J) const {
    check_same_ctx(*this, J, "containment");
    for (const Polynomial& g : J.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::same_ideal(const Ideal& J) const {
    check_same_ctx(*this, J, "equality");
    return basis().gens == J.basis().gens; // reduced bases are unique
}

bool Ideal::is_unit() const { return basis().is_unit_ideal(); }

bool Ideal::is_zero_ideal() const {
    Ideal q0(ctx_, {});
    for (const Polynomial& g : gens_)
        if (!q0.contains(g)) return false;
    return true;
}

int Ideal::dim() const { return krull_dimension(ctx_, basis()); }

long long Ideal::vdim() const { return vector_space_dimension(ctx_, basis()); }

Ideal origin_ideal(const Ctx& ctx) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ctx->nvars(); ++i) vars.push_back(ctx->variable(i));
    return Ideal(ctx, std::move(vars));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same_ctx(I, J, "sum");
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_same_ctx(I, J, "product");
    std::vector<Polynomial> gens;
    for (const Polynomial& a : I.gens())
        for (const Polynomial& b : J.gens()) {
            Polynomial p = I.ctx()->mul(a, b);
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned r) {
    const Ctx& C = I.ctx();
    if (r == 0) return Ideal(C, {C->one()});
    // multiset products: index-nondecreasing chains avoid duplicate tuples
    std::vector<std::pair<Polynomial, std::size_t>> cur;
    for (std::size_t i = 0; i < I.gens().size(); ++i) cur.push_back({I.gens()[i], i});
    for (unsigned step = 1; step < r; ++step) {
        std::vector<std::pair<Polynomial, std::size_t>> next;
        for (const auto& [p, k] : cur)
            for (std::size_t j = k; j < I.gens().size(); ++j)
                next.push_back({C->mul(p, I.gens()[j]), j});
        cur = std::move(next);
    }
    std::vector<Polynomial> gens;
    for (auto& [p, k] : cur)
        if (!p.is_zero()) gens.push_back(std::move(p));
    return Ideal(C, std::move(gens));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    check_same_ctx(I, J, "intersection");
    const Ctx& C = I.ctx();
    Ctx ext = C->extended({C->fresh_name("s")}, {1});
    const std::size_t si = C->nvars();
    Polynomial s = ext->variable(si);
    Polynomial one_minus_s = ext->sub(ext->one(), s);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(ext->mul(s, C->lift_to(ext, g)));
    for (const Polynomial& g : J.gens())
        gens.push_back(ext->mul(one_minus_s, C->lift_to(ext, g)));
    return eliminate(Ideal(ext, std::move(gens)), {si}, C);
}

namespace {

// colon by a single nonzero element in a plain polynomial context:
// (A : g) = (A ∩ (g)) / g, with A given by explicit ambient generators
std::vector<Polynomial> colon_single(const Ctx& P, const std::vector<Polynomial>& amb,
                                     const Polynomial& g) {
    Ideal M = ideal_intersection(Ideal(P, amb), Ideal(P, {g}));
    std::vector<Polynomial> out;
    for (const Polynomial& h : M.gens()) out.push_back(P->exact_div(h, g));
    return out;
}

} // namespace

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    check_same_ctx(I, J, "colon");
    ++counters().colons;
    const Ctx& C = I.ctx();
    Ctx P = C->ambient();
    std::vector<Polynomial> amb = I.gens();
    for (const Polynomial& q : C->quotient_gens()) amb.push_back(q);

    bool nonzero_seen = false;
    Ideal acc;
    bool first = true;
    for (const Polynomial& g : J.gens()) {
        if (g.is_zero()) continue;
        nonzero_seen = true;
        Ideal part(C, colon_single(P, amb, g));
        if (first) {
            acc = part;
            first = false;
        } else {
            acc = ideal_intersection(acc, part);
        }
    }
    if (!nonzero_seen) throw InputError("colon by the zero ideal");
    return acc;
}

Ideal ideal_saturation(const Ideal& I, const Ideal& J) {
    check_same_ctx(I, J, "saturation");
    Ideal K = I;
    for (int step = 0; step < kSaturationCap; ++step) {
        ++counters().saturation_steps;
        Ideal next = ideal_colon(K, J);
        if (K.contains(next)) return K; // K : J = K, the chain has stabilized
        K = next;
    }
    throw ResourceError("saturation chain failed to stabilize within " +
                        std::to_string(kSaturationCap) + " colon steps");
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop, const Ctx& target) {
    ++counters().eliminations;
    const Ctx& C = I.ctx();
    const std::size_t n = C->nvars();
    std::vector<std::size_t> d = drop;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    for (std::size_t i : d)
        if (i >= n) throw InputError("eliminated variable index out of range");

    std::vector<std::size_t> kept;
    std::uint64_t dropmask = 0;
    for (std::size_t i : d) dropmask |= std::uint64_t{1} << i;
    for (std::size_t i = 0; i < n; ++i)
        if (!(dropmask >> i & 1)) kept.push_back(i);

    if (target->nvars() != kept.size() || !(target->field() == C->field()))
        throw InputError("target ring does not match the surviving variables");
    for (std::size_t k = 0; k < kept.size(); ++k)
        if (target->vars()[k] != C->vars()[kept[k]])
            throw InputError("target ring does not match the surviving variables");

    std::vector<long long> kw;
    for (std::size_t i : kept) kw.push_back(C->weights()[i]);
    MonomialOrder ord = MonomialOrder::elimination(d, kept, kw);
    const GroebnerBasis& G = I.basis(ord);

    std::vector<Polynomial> out;
    for (const Polynomial& g : G.gens)
        if ((g.lm().support() & dropmask) == 0)
            out.push_back(C->map_vars(g, kept, target));
    return Ideal(target, std::move(out));
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    const Ctx& C = I.ctx();
    Ctx ext = C->extended({C->fresh_name("y")}, {1});
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(C->lift_to(ext, g));
    Polynomial yf = ext->mul(ext->variable(C->nvars()), C->lift_to(ext, f));
    gens.push_back(ext->sub(ext->one(), yf));
    return Ideal(ext, std::move(gens)).is_unit();
}

bool local_membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    Ideal colon = ideal_colon(I, Ideal(I.ctx(), {f}));
    // colon ⊄ m exactly when some generator carries a constant term
    for (const Polynomial& g : colon.gens())
        if (g.has_constant_term()) return true;
    return false;
}

Ideal local_contraction_zero_dim(const Ideal& I) {
    int d = I.dim();
    if (d > 0)
        throw ShapeError("local contraction needs a zero-dimensional ideal, got dimension " +
                         std::to_string(d));
    // The component at the origin is I + m^t once t is deep enough, and
    // "deep enough" is visible: I + m^t = I + m^{t+1} forces m^t into the
    // origin component (Nakayama in the local ring), and I + m^t then
    // contains I, localizes to it at the origin, and is m-primary — so it
    // *is* the component.  Degree-truncated bases stay small where the
    // two-saturation route (strip the away part, then saturate at it)
    // swells without bound on dense rational inputs.
    const Ctx& C = I.ctx();
    auto plus_power = [&](int t) {
        std::vector<Polynomial> gens = I.gens();
        std::vector<unsigned> e(C->nvars(), 0);
        std::function<void(std::size_t, unsigned)> go = [&](std::size_t i, unsigned rem) {
            if (i + 1 == C->nvars()) {
                e[i] = rem;
                gens.push_back(C->from_terms({Term{Coeff::one(C->field()), C->monomial(e)}}));
                e[i] = 0;
                return;
            }
            for (unsigned k = 0; k <= rem; ++k) {
                e[i] = k;
                go(i + 1, rem - k);
            }
            e[i] = 0;
        };
        go(0, static_cast<unsigned>(t));
        return Ideal(C, std::move(gens));
    };
    Ideal cur = plus_power(1);
    for (int t = 1; t <= kContractionCap; ++t) {
        Ideal next = plus_power(t + 1);
        if (cur.same_ideal(next)) return cur;
        cur = std::move(next);
    }
    throw ResourceError("origin part did not stabilize within " +
                        std::to_string(kContractionCap) + " monomial degrees");
}

std::vector<std::vector<Polynomial>> syzygy_rows(const Ideal& I) {
    const Ctx& C = I.ctx();
    Ctx P = C->ambient();
    std::vector<Polynomial> seq = I.gens();
    const std::size_t n = seq.size();
    for (const Polynomial& q : C->quotient_gens()) seq.push_back(q);
    SyzygyMatrix S = syzygies(P, seq);
    std::vector<std::vector<Polynomial>> rows;
    for (auto& row : S.rows) {
        std::vector<Polynomial> head(row.begin(), row.begin() + n);
        bool zero = true;
        for (const Polynomial& e : head) zero = zero && e.is_zero();
        if (zero) continue;
        bool dup = false;
        for (const auto& r : rows) dup = dup || r == head;
        if (!dup) rows.push_back(std::move(head));
    }
    return rows;
}

Ideal fitting_ideal(const Ideal& I, std::size_t j) {
    const Ctx& C = I.ctx();
    const std::size_t n = I.gens().size();
    if (j > n) throw InputError("Fitting index exceeds the generator count");
    if (j == n) return Ideal(C, {C->one()});
    auto rows = syzygy_rows(I);
    const std::size_t size = n - j;
    if (size > rows.size()) return Ideal(C, {});
    if (rows.size() > 62) throw ResourceError("syzygy matrix too large for minor expansion");

    // subdeterminants shared across minors: memoize on (row mask, col mask)
    std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo;
    std::function<Polynomial(std::uint64_t, std::uint64_t)> det =
        [&](std::uint64_t rmask, std::uint64_t cmask) -> Polynomial {
        if (rmask == 0) return C->one();
        auto it = memo.find({rmask, cmask});
        if (it != memo.end()) return it->second;
        int r0 = std::countr_zero(rmask);
        Polynomial acc;
        bool plus = true;
        for (int c = 0; c < static_cast<int>(n); ++c) {
            if (!(cmask >> c & 1)) continue;
            const Polynomial& e = rows[r0][c];
            if (!e.is_zero()) {
                Polynomial sub = det(rmask & (rmask - 1), cmask ^ (std::uint64_t{1} << c));
                Polynomial term = C->mul(e, sub);
                acc = plus ? C->add(acc, term) : C->sub(acc, term);
            }
            plus = !plus;
        }
        memo.emplace(std::pair{rmask, cmask}, acc);
        return acc;
    };

    // enumerate row subsets and column subsets of the minor size
    std::vector<std::uint64_t> rsubs, csubs;
    std::function<void(std::size_t, std::size_t, std::uint64_t, std::size_t, std::vector<std::uint64_t>&)>
        combos = [&](std::size_t from, std::size_t total, std::uint64_t mask, std::size_t left,
                     std::vector<std::uint64_t>& out) {
            if (left == 0) {
                out.push_back(mask);
                return;
            }
            for (std::size_t i = from; i + left <= total; ++i)
                combos(i + 1, total, mask | (std::uint64_t{1} << i), left - 1, out);
        };
    combos(0, rows.size(), 0, size, rsubs);
    combos(0, n, 0, size, csubs);
    if (rsubs.size() * csubs.size() > kMinorBudget)
        throw ResourceError("minor expansion exceeds the enumeration budget");

    std::vector<Polynomial> gens;
    for (std::uint64_t rm : rsubs)
        for (std::uint64_t cm : csubs) {
            Polynomial d = det(rm, cm);
            if (d.is_zero()) continue;
            bool dup = false;
            for (const Polynomial& g : gens) dup = dup || g == d;
            if (!dup) gens.push_back(std::move(d));
        }
    return Ideal(C, std::move(gens));
}

} // namespace idealcore
