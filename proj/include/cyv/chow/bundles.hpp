#ifndef CYV_CHOW_BUNDLES_HPP
#define CYV_CHOW_BUNDLES_HPP

#include <map>
#include <vector>

#include "cyv/chow/ring.hpp"
#include "cyv/error.hpp"
#include "cyv/symfunc/chern.hpp"

namespace cyv::chow {

enum class Taut { SubDual, Quot };

/// c_i of a tautological bundle on G(k,n): c_i(Q) = sigma_(i), c_i(S^*) = sigma_(1^i).
inline RingClass taut_chern(const RingPtr& ring, Taut which, int i) {
    if (ring->kind() != Ring::Kind::Grassmannian) fail(ErrorCode::RingMismatch, "tautological bundles live on Grassmannians");
    const int rank = which == Taut::SubDual ? ring->k() : ring->n() - ring->k();
    if (i < 0 || i > rank)
        fail(ErrorCode::IndexOutOfRange, "c_" + std::to_string(i) + " of a rank " + std::to_string(rank) + " bundle");
    return schubert(ring, which == Taut::SubDual ? Partition::column(i) : Partition::row(i));
}

/// c_0 .. c_rank of a tautological bundle.
inline std::vector<RingClass> taut_chern_all(const RingPtr& ring, Taut which) {
    const int rank = which == Taut::SubDual ? ring->k() : ring->n() - ring->k();
    std::vector<RingClass> out;
    for (int i = 0; i <= rank; ++i) out.push_back(taut_chern(ring, which, i));
    return out;
}

/// Substitutes ring classes for the Chern variables of a ChernSeries.
/// `classes[a]` lists c_1, c_2, ... of alphabet a (missing entries count as 0).
inline RingClass evaluate(const ChernSeries& series, const RingPtr& ring,
                          const std::vector<std::vector<RingClass>>& classes) {
    if (classes.size() != series.ranks().size()) fail(ErrorCode::BadDimensions, "one class list per alphabet expected");
    std::vector<RingClass> vars;
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (int i = 1; i <= series.ranks()[a]; ++i) {
            auto idx = static_cast<std::size_t>(i - 1);
            vars.push_back(idx < classes[a].size() ? classes[a][idx] : zero(ring));
        }
    std::map<std::pair<std::size_t, int>, RingClass> powers;
    auto power = [&](std::size_t v, int e) -> const RingClass& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, vars[v].pow(static_cast<unsigned>(e))).first;
        return it->second;
    };
    const int top = ring->dimension();
    const auto w = series.weights();
    RingClass out = zero(ring);
    for (const auto& [e, c] : series.poly().terms()) {
        int deg = 0;
        for (std::size_t v = 0; v < e.size(); ++v) deg += e[v] * w[v];
        if (deg > top) continue;
        RingClass term = one(ring);
        bool vanished = false;
        for (std::size_t v = 0; v < e.size() && !vanished; ++v) {
            if (e[v] == 0) continue;
            term *= power(v, e[v]);
            vanished = term.is_zero();
        }
        if (!vanished) out += term * c;
    }
    return out;
}

/// Graded pieces c_0, ..., c_dim of a total class.
inline std::vector<RingClass> graded_parts(const RingClass& total) {
    std::vector<RingClass> out;
    for (int k = 0; k <= total.ring()->dimension(); ++k) out.push_back(total.part(k));
    return out;
}

/// Total Chern class from its pieces c_0 + c_1 + ...
inline RingClass sum_classes(const RingPtr& ring, const std::vector<RingClass>& parts) {
    RingClass out = zero(ring);
    for (const auto& p : parts) out += p;
    return out;
}

/// c(T_G) for G(k,n), T_G = S^* (x) Q.
inline std::vector<RingClass> grassmann_tangent_chern(const RingPtr& ring) {
    if (ring->kind() != Ring::Kind::Grassmannian) fail(ErrorCode::RingMismatch, "expected a Grassmannian");
    const int k = ring->k(), q = ring->n() - ring->k();
    auto sub = taut_chern_all(ring, Taut::SubDual);
    auto quot = taut_chern_all(ring, Taut::Quot);
    sub.erase(sub.begin());
    quot.erase(quot.begin());
    return graded_parts(evaluate(chern_tensor(k, q), ring, {sub, quot}));
}

/// c(T_rel) for P(E) -> B from the Euler sequence 0 -> O -> pi^*E (H) -> T_rel -> 0.
inline std::vector<RingClass> relative_tangent_chern(const RingPtr& ring) {
    if (ring->kind() != Ring::Kind::ProjBundle) fail(ErrorCode::RingMismatch, "expected a projective bundle");
    const int r = ring->rank();
    std::vector<RingClass> ce;
    for (int i = 1; i <= r; ++i) ce.push_back(pullback(ring, ring->bundle_chern()[static_cast<std::size_t>(i)]));
    return graded_parts(evaluate(chern_twist(r), ring, {ce, {hyperplane(ring)}}));
}

/// c(T) of any supported ring, built layer by layer.
inline std::vector<RingClass> tangent_chern(const RingPtr& ring) {
    switch (ring->kind()) {
        case Ring::Kind::Point: return {one(ring)};
        case Ring::Kind::Grassmannian: return grassmann_tangent_chern(ring);
        case Ring::Kind::ProjBundle: {
            RingClass base_total = sum_classes(ring->base(), tangent_chern(ring->base()));
            RingClass total = sum_classes(ring, relative_tangent_chern(ring)) * pullback(ring, base_total);
            return graded_parts(total);
        }
    }
    fail(ErrorCode::Internal, "unknown ring kind");
}

}  // namespace cyv::chow

#endif  // CYV_CHOW_BUNDLES_HPP
