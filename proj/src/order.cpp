#include "idealcore/order.hpp"

#include <numeric>

namespace idealcore {

namespace {

Cmp cmp_block(const Monomial& a, const Monomial& b, const MonomialOrder::Block& blk) {
    switch (blk.kind) {
    case MonomialOrder::Kind::lex:
        for (std::size_t v : blk.vars) {
            if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    case MonomialOrder::Kind::wgrevlex: {
        long long da = 0, db = 0;
        for (std::size_t k = 0; k < blk.vars.size(); ++k) {
            da += static_cast<long long>(a.exp(blk.vars[k])) * blk.weights[k];
            db += static_cast<long long>(b.exp(blk.vars[k])) * blk.weights[k];
        }
        if (da != db) return da > db ? Cmp::GT : Cmp::LT;
        [[fallthrough]];
    }
    case MonomialOrder::Kind::grevlex: {
        unsigned ta = 0, tb = 0;
        for (std::size_t v : blk.vars) { ta += a.exp(v); tb += b.exp(v); }
        if (ta != tb) return ta > tb ? Cmp::GT : Cmp::LT;
        for (std::size_t k = blk.vars.size(); k-- > 0;) {
            std::size_t v = blk.vars[k];
            if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    }
    }
    return Cmp::EQ;
}

std::vector<std::size_t> iota_vars(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

} // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    MonomialOrder o;
    o.blocks.push_back({iota_vars(nvars), Kind::grevlex, {}});
    return o;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    MonomialOrder o;
    o.blocks.push_back({iota_vars(nvars), Kind::lex, {}});
    return o;
}

MonomialOrder MonomialOrder::wgrevlex(std::vector<long long> weights) {
    MonomialOrder o;
    o.blocks.push_back({iota_vars(weights.size()), Kind::wgrevlex, std::move(weights)});
    return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> elim,
                                         std::vector<std::size_t> keep,
                                         std::vector<long long> keep_weights) {
    if (keep.size() != keep_weights.size())
        throw InternalError("elimination order: keep/weight size mismatch");
    MonomialOrder o;
    o.blocks.push_back({std::move(elim), Kind::grevlex, {}});
    o.blocks.push_back({std::move(keep), Kind::wgrevlex, std::move(keep_weights)});
    return o;
}

std::string MonomialOrder::key() const {
    std::string k;
    for (const Block& b : blocks) {
        switch (b.kind) {
        case Kind::grevlex: k += "g["; break;
        case Kind::lex: k += "l["; break;
        case Kind::wgrevlex: k += "w["; break;
        }
        for (std::size_t i = 0; i < b.vars.size(); ++i) {
            if (i) k += ',';
            k += std::to_string(b.vars[i]);
            if (b.kind == Kind::wgrevlex) k += ':' + std::to_string(b.weights[i]);
        }
        k += ']';
    }
    return k;
}

Cmp mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    for (const MonomialOrder::Block& blk : o.blocks) {
        Cmp c = cmp_block(a, b, blk);
        if (c != Cmp::EQ) return c;
    }
    return Cmp::EQ;
}

} // namespace idealcore
