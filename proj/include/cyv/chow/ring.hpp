#ifndef CYV_CHOW_RING_HPP
#define CYV_CHOW_RING_HPP

// Chow rings in an explicit additive basis.
//
// Grassmannian G(k,n): Schubert classes sigma_lambda for partitions lambda in
// the k x (n-k) box (at most k parts, each at most n-k). Indexing follows
// the quotient convention sigma_i = c_i(Q) with Q the rank n-k universal
// quotient, and sigma_(1^i) = c_i(S^*) with S the rank k universal subbundle.
// On G(3,5) this means sigma_2 exists and sigma_3 does not, so that
// deg(sigma_2 sigma_1^4) = 2 there while the same expression on G(2,5) gives 3.
//
// Projective bundle P(E) -> B of rank r: points are lines in E and H is c_1 of
// the dual tautological line bundle. The ring is B[H] modulo
//   H^r + c_1(E) H^(r-1) + ... + c_r(E) = 0,
// and pushforward sends H^(r-1+j) to the degree-j part of c(E)^(-1).

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyv/error.hpp"
#include "cyv/rational.hpp"
#include "cyv/symfunc/littlewood_richardson.hpp"
#include "cyv/symfunc/partition.hpp"

namespace cyv::chow {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Basis monomial: a Schubert partition of the innermost Grassmannian (empty
/// over a point) and the H-powers of each projective-bundle layer, innermost
/// first.
struct BasisKey {
    Partition partition;
    std::vector<int> h;

    int degree() const {
        int d = partition.size();
        for (int x : h) d += x;
        return d;
    }
    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
    friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

class RingClass;

bool same_ring(const Ring& a, const Ring& b);

class RingClass {
   public:
    RingClass() = default;
    explicit RingClass(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const std::map<BasisKey, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const BasisKey& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    Rational coeff(const BasisKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Terms of codimension exactly k.
    RingClass part(int k) const {
        RingClass out(ring_);
        for (const auto& [key, c] : terms_)
            if (key.degree() == k) out.add_term(key, c);
        return out;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [key, c] : terms_) {
            if (d >= 0 && key.degree() != d) return false;
            d = key.degree();
        }
        return true;
    }
    /// Codimension of a nonzero homogeneous class; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    RingClass& operator+=(const RingClass& o);
    RingClass& operator-=(const RingClass& o);
    friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
    friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }
    friend RingClass operator-(RingClass a) {
        for (auto& [k, c] : a.terms_) c = -c;
        return a;
    }
    friend RingClass operator*(RingClass a, const Rational& s) {
        if (s == 0) return RingClass(a.ring_);
        for (auto& [k, c] : a.terms_) c *= s;
        return a;
    }
    friend RingClass operator*(const Rational& s, RingClass a) { return std::move(a) * s; }
    friend RingClass operator*(const RingClass& a, const RingClass& b);
    RingClass& operator*=(const RingClass& o) { return *this = *this * o; }
    friend bool operator==(const RingClass& a, const RingClass& b);

    RingClass pow(unsigned e) const;

    std::string to_string() const;

   private:
    RingPtr ring_;
    std::map<BasisKey, Rational> terms_;
};

class Ring : public std::enable_shared_from_this<Ring> {
   public:
    enum class Kind { Point, Grassmannian, ProjBundle };

    Kind kind() const noexcept { return kind_; }
    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    /// Rank of E for a projective bundle.
    int rank() const noexcept { return rank_; }
    const RingPtr& base() const noexcept { return base_; }
    /// c_0(E), ..., c_r(E) as base classes.
    const std::vector<RingClass>& bundle_chern() const noexcept { return chern_; }

    int dimension() const {
        switch (kind_) {
            case Kind::Point: return 0;
            case Kind::Grassmannian: return k_ * (n_ - k_);
            case Kind::ProjBundle: return base_->dimension() + rank_ - 1;
        }
        return 0;
    }
    /// Number of projective-bundle layers above the innermost ring.
    int depth() const { return kind_ == Kind::ProjBundle ? base_->depth() + 1 : 0; }

    std::vector<BasisKey> basis() const {
        std::vector<BasisKey> out;
        switch (kind_) {
            case Kind::Point: out.push_back({}); break;
            case Kind::Grassmannian:
                for (auto& p : partitions_in_box(k_, n_ - k_)) out.push_back({p, {}});
                break;
            case Kind::ProjBundle:
                for (int j = 0; j < rank_; ++j)
                    for (auto key : base_->basis()) {
                        key.h.push_back(j);
                        out.push_back(std::move(key));
                    }
                break;
        }
        return out;
    }

    /// The basis key of the point class.
    BasisKey point_key() const {
        switch (kind_) {
            case Kind::Point: return {};
            case Kind::Grassmannian: return {Partition(std::vector<int>(static_cast<std::size_t>(k_), n_ - k_)), {}};
            case Kind::ProjBundle: {
                auto key = base_->point_key();
                key.h.push_back(rank_ - 1);
                return key;
            }
        }
        return {};
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Point: return "pt";
            case Kind::Grassmannian: return "G(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
            case Kind::ProjBundle: return "P(E rank " + std::to_string(rank_) + ") over " + base_->describe();
        }
        return "?";
    }

    static RingPtr point() { return RingPtr(new Ring(Kind::Point, 0, 0)); }

    /// G(k,n), 0 < k < n <= 12.
    static RingPtr grassmannian(int k, int n) {
        if (!(0 < k && k < n && n <= 12))
            fail(ErrorCode::BadDimensions, "G(" + std::to_string(k) + "," + std::to_string(n) + ") requires 0 < k < n <= 12");
        return RingPtr(new Ring(Kind::Grassmannian, k, n));
    }

    /// P(E) over `base`, E of rank r with total Chern class c_0 + ... + c_r.
    static RingPtr proj_bundle(RingPtr base, std::vector<RingClass> chern, int r) {
        if (!base) fail(ErrorCode::BadDimensions, "projective bundle needs a base ring");
        if (r < 1) fail(ErrorCode::BadDimensions, "bundle rank must be positive");
        chern.resize(static_cast<std::size_t>(r) + 1, RingClass(base));
        for (std::size_t i = 0; i < chern.size(); ++i) {
            auto& c = chern[i];
            if (!c.ring()) c = RingClass(base);
            if (!same_ring(*c.ring(), *base)) fail(ErrorCode::RingMismatch, "Chern classes must live in the base ring");
            if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != static_cast<int>(i)))
                fail(ErrorCode::BadDimensions, "c_" + std::to_string(i) + "(E) must be homogeneous of degree " + std::to_string(i));
        }
        RingClass one(base);
        one.add_term(base->unit_key(), 1);
        if (!(chern[0] == one)) fail(ErrorCode::BadDimensions, "c_0(E) must be 1");
        auto ring = RingPtr(new Ring(Kind::ProjBundle, 0, 0));
        auto* mut = const_cast<Ring*>(ring.get());
        mut->base_ = std::move(base);
        mut->rank_ = r;
        mut->chern_ = std::move(chern);
        return ring;
    }

    BasisKey unit_key() const {
        if (kind_ == Kind::ProjBundle) {
            auto key = base_->unit_key();
            key.h.push_back(0);
            return key;
        }
        return {};
    }

    friend bool same_ring(const Ring& a, const Ring& b) {
        if (&a == &b) return true;
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Point: return true;
            case Kind::Grassmannian: return a.k_ == b.k_ && a.n_ == b.n_;
            case Kind::ProjBundle:
                if (a.rank_ != b.rank_ || !same_ring(*a.base_, *b.base_)) return false;
                for (std::size_t i = 0; i < a.chern_.size(); ++i)
                    if (a.chern_[i].terms() != b.chern_[i].terms()) return false;
                return true;
        }
        return false;
    }

   private:
    Ring(Kind kind, int k, int n) : kind_(kind), k_(k), n_(n) {}

    Kind kind_;
    int k_ = 0, n_ = 0;
    RingPtr base_;
    int rank_ = 0;
    std::vector<RingClass> chern_;
};

namespace detail {

inline void require_same(const RingClass& a, const RingClass& b) {
    if (!a.ring() || !b.ring() || !same_ring(*a.ring(), *b.ring()))
        fail(ErrorCode::RingMismatch, "classes live in different rings");
}

/// Splits a projective-bundle class into base coefficients of H^0 .. H^(r-1).
inline std::vector<RingClass> split(const RingClass& a) {
    const Ring& ring = *a.ring();
    std::vector<RingClass> out(static_cast<std::size_t>(ring.rank()), RingClass(ring.base()));
    for (const auto& [key, c] : a.terms()) {
        BasisKey base_key = key;
        int j = base_key.h.back();
        base_key.h.pop_back();
        out.at(static_cast<std::size_t>(j)).add_term(base_key, c);
    }
    return out;
}

/// Inverse of split for a coefficient list of any length: reduces powers
/// H^m with m >= r through the bundle relation.
inline RingClass join(const RingPtr& ring, std::vector<RingClass> coeffs) {
    const int r = ring->rank();
    const auto& chern = ring->bundle_chern();
    for (int m = static_cast<int>(coeffs.size()) - 1; m >= r; --m) {
        RingClass top = coeffs[static_cast<std::size_t>(m)];
        if (top.is_zero()) continue;
        // H^m = -sum_{i=1..r} c_i H^(m-i)
        for (int i = 1; i <= r; ++i) {
            const auto& ci = chern[static_cast<std::size_t>(i)];
            if (ci.is_zero()) continue;
            coeffs[static_cast<std::size_t>(m - i)] -= ci * top;
        }
        coeffs[static_cast<std::size_t>(m)] = RingClass(ring->base());
    }
    RingClass out(ring);
    for (int j = 0; j < std::min<int>(r, static_cast<int>(coeffs.size())); ++j)
        for (const auto& [key, c] : coeffs[static_cast<std::size_t>(j)].terms()) {
            BasisKey k = key;
            k.h.push_back(j);
            out.add_term(k, c);
        }
    return out;
}

}  // namespace detail

inline RingClass& RingClass::operator+=(const RingClass& o) {
    if (o.is_zero() && o.ring_ && ring_ && same_ring(*ring_, *o.ring_)) return *this;
    detail::require_same(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

inline RingClass& RingClass::operator-=(const RingClass& o) {
    detail::require_same(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

inline bool operator==(const RingClass& a, const RingClass& b) {
    if (!a.ring_ || !b.ring_ || !same_ring(*a.ring_, *b.ring_)) return false;
    return a.terms_ == b.terms_;
}

inline RingClass operator*(const RingClass& a, const RingClass& b) {
    detail::require_same(a, b);
    const RingPtr& ring = a.ring();
    switch (ring->kind()) {
        case Ring::Kind::Point: {
            RingClass out(ring);
            out.add_term({}, a.coeff({}) * b.coeff({}));
            return out;
        }
        case Ring::Kind::Grassmannian: {
            RingClass out(ring);
            const int rows = ring->k(), cols = ring->n() - ring->k();
            for (const auto& [ka, ca] : a.terms())
                for (const auto& [kb, cb] : b.terms())
                    for (const auto& [nu, mult] : lr_coefficients_cached(ka.partition, kb.partition))
                        if (nu.fits_box(rows, cols)) out.add_term({nu, {}}, ca * cb * mult);
            return out;
        }
        case Ring::Kind::ProjBundle: {
            auto sa = detail::split(a), sb = detail::split(b);
            std::vector<RingClass> prod(sa.size() + sb.size() - 1, RingClass(ring->base()));
            for (std::size_t i = 0; i < sa.size(); ++i) {
                if (sa[i].is_zero()) continue;
                for (std::size_t j = 0; j < sb.size(); ++j) {
                    if (sb[j].is_zero()) continue;
                    prod[i + j] += sa[i] * sb[j];
                }
            }
            return detail::join(ring, std::move(prod));
        }
    }
    fail(ErrorCode::Internal, "unknown ring kind");
}

inline RingClass RingClass::pow(unsigned e) const {
    RingClass r(ring_);
    r.add_term(ring_->unit_key(), 1);
    RingClass base = *this;
    while (e) {
        if (e & 1U) r *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return r;
}

inline std::string RingClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        std::string mono;
        if (!key.partition.empty()) {
            mono = "s";
            for (std::size_t i = 0; i < key.partition.parts().size(); ++i)
                mono += (i ? "_" : "") + std::to_string(key.partition.parts()[i]);
        }
        for (std::size_t layer = 0; layer < key.h.size(); ++layer) {
            if (key.h[layer] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "H" + (key.h.size() > 1 ? std::to_string(layer + 1) : std::string());
            if (key.h[layer] > 1) mono += "^" + std::to_string(key.h[layer]);
        }
        Rational a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono.empty())
            out += cyv::to_string(a);
        else
            out += (a == 1 ? "" : cyv::to_string(a) + "*") + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constructors and basic operations.

inline RingPtr grassmann_ring(int k, int n) { return Ring::grassmannian(k, n); }

inline RingPtr proj_bundle_ring(RingPtr base, std::vector<RingClass> chern, int r) {
    return Ring::proj_bundle(std::move(base), std::move(chern), r);
}

inline RingClass zero(const RingPtr& ring) { return RingClass(ring); }

inline RingClass one(const RingPtr& ring) {
    RingClass c(ring);
    c.add_term(ring->unit_key(), 1);
    return c;
}

/// sigma_lambda on a Grassmannian (zero when lambda leaves the box).
inline RingClass schubert(const RingPtr& ring, const Partition& lambda) {
    if (ring->kind() != Ring::Kind::Grassmannian) fail(ErrorCode::RingMismatch, "Schubert classes need a Grassmannian");
    RingClass c(ring);
    if (lambda.fits_box(ring->k(), ring->n() - ring->k())) c.add_term({lambda, {}}, 1);
    return c;
}

/// Tautological class H of a projective bundle ring.
inline RingClass hyperplane(const RingPtr& ring) {
    if (ring->kind() != Ring::Kind::ProjBundle) fail(ErrorCode::RingMismatch, "H exists only on projective bundles");
    if (ring->rank() == 1) {
        // P(L) = B and H = -c_1(L).
        RingClass out(ring);
        for (const auto& [key, c] : ring->bundle_chern()[1].terms()) {
            BasisKey k = key;
            k.h.push_back(0);
            out.add_term(k, -c);
        }
        return out;
    }
    auto key = ring->base()->unit_key();
    key.h.push_back(1);
    RingClass c(ring);
    c.add_term(key, 1);
    return c;
}

/// pi^* of a base class.
inline RingClass pullback(const RingPtr& ring, const RingClass& base_class) {
    if (ring->kind() != Ring::Kind::ProjBundle) fail(ErrorCode::RingMismatch, "pullback needs a projective bundle");
    if (!same_ring(*base_class.ring(), *ring->base())) fail(ErrorCode::RingMismatch, "class is not on the base ring");
    RingClass out(ring);
    for (const auto& [key, c] : base_class.terms()) {
        BasisKey k = key;
        k.h.push_back(0);
        out.add_term(k, c);
    }
    return out;
}

inline RingClass multiply(const RingClass& a, const RingClass& b) { return a * b; }

/// pi_*: coefficient of H^(r-1) in the normal form; lower powers push to 0.
inline RingClass pushforward_to_base(const RingPtr& ring, const RingClass& a) {
    if (ring->kind() != Ring::Kind::ProjBundle) fail(ErrorCode::RingMismatch, "pushforward needs a projective bundle");
    if (!a.ring() || !same_ring(*a.ring(), *ring)) fail(ErrorCode::RingMismatch, "class is not on this bundle");
    return detail::split(a).back();
}

/// Degree of a top-dimensional class.
inline Rational integrate(const RingClass& a) {
    const RingPtr& ring = a.ring();
    if (!ring) fail(ErrorCode::RingMismatch, "class without a ring");
    const int top = ring->dimension();
    for (const auto& [key, c] : a.terms())
        if (key.degree() != top)
            fail(ErrorCode::NotTopDegree, "term of codimension " + std::to_string(key.degree()) + " on a ring of dimension " +
                                              std::to_string(top));
    return a.coeff(ring->point_key());
}

/// integrate() for results that must be integers.
inline Integer integrate_integral(const RingClass& a) {
    Rational v = integrate(a);
    if (!is_integer(v)) fail(ErrorCode::NonIntegral, "degree " + cyv::to_string(v) + " is not an integer");
    return v.get_num();
}

/// Multiplicative inverse of a class 1 + (nilpotent).
inline RingClass inverse_total(const RingClass& c) {
    const RingPtr& ring = c.ring();
    RingClass unit = one(ring);
    if (!(c.part(0) == unit)) fail(ErrorCode::BadDimensions, "class must have degree-0 part 1");
    RingClass nil = unit - c;
    RingClass out = unit, power = unit;
    for (int j = 1; j <= ring->dimension(); ++j) {
        power *= nil;
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

}  // namespace cyv::chow

#endif  // CYV_CHOW_RING_HPP
