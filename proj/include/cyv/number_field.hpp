#ifndef CYV_NUMBER_FIELD_HPP
#define CYV_NUMBER_FIELD_HPP

#include <string>
#include <vector>

#include "cyv/field.hpp"
#include "cyv/linalg.hpp"
#include "cyv/upoly.hpp"

namespace cyv {

using QPoly = UPoly<RationalField>;

/// Q[a]/(m) for an irreducible m. Irreducibility is the caller's contract;
/// the factorization routines are the only producers of minimal polynomials
/// in this library. Elements are coefficient vectors of length deg m in the
/// power basis 1, a, ..., a^(d-1).
class NumberField {
   public:
    using Element = std::vector<Rational>;

    explicit NumberField(const QPoly& minimal_polynomial) {
        RationalField q;
        if (minimal_polynomial.degree() < 1) fail(ErrorCode::Internal, "minimal polynomial must have degree >= 1");
        modulus_ = upoly::monic(q, minimal_polynomial);
    }

    const QPoly& modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return modulus_.degree(); }

    Element zero() const { return Element(static_cast<std::size_t>(degree()), Rational(0)); }
    Element one() const { return from_rational(1); }
    /// The generator a.
    Element generator() const {
        if (degree() == 1) return from_rational(-modulus_.coeffs[0]);
        auto e = zero();
        e[1] = 1;
        return e;
    }
    Element from_rational(const Rational& r) const {
        auto e = zero();
        e[0] = r;
        return e;
    }
    Element add(const Element& a, const Element& b) const {
        Element c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
        return c;
    }
    Element sub(const Element& a, const Element& b) const {
        Element c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
        return c;
    }
    Element neg(const Element& a) const {
        Element c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
        return c;
    }
    Element mul(const Element& a, const Element& b) const {
        RationalField q;
        return from_poly(upoly::mul(q, to_poly(a), to_poly(b)));
    }
    Element inv(const Element& a) const {
        RationalField q;
        auto [g, s, t] = upoly::xgcd(q, to_poly(a), modulus_);
        if (g.degree() != 0) fail(ErrorCode::Internal, "element is not invertible in the number field");
        return from_poly(s);
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    QPoly to_poly(const Element& a) const {
        RationalField q;
        return upoly::trimmed(q, a);
    }
    Element from_poly(const QPoly& p) const {
        RationalField q;
        auto r = p.degree() >= degree() ? upoly::rem(q, p, modulus_) : p;
        auto e = zero();
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) e[i] = r.coeffs[i];
        return e;
    }
    /// Evaluates a rational polynomial at an element.
    Element eval(const QPoly& p, const Element& x) const {
        auto acc = zero();
        for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = add(mul(acc, x), from_rational(*it));
        return acc;
    }

    /// Matrix of multiplication by a in the power basis (column j = a * a^j).
    Matrix<RationalField> multiplication_matrix(const Element& a) const {
        RationalField q;
        const auto d = static_cast<std::size_t>(degree());
        auto m = zero_matrix(q, d, d);
        auto basis = one();
        auto gen = generator();
        for (std::size_t j = 0; j < d; ++j) {
            auto col = mul(a, basis);
            for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
            basis = mul(basis, gen);
        }
        return m;
    }

    /// Minimal polynomial of an element over Q (monic), found as the first
    /// linear dependency among its powers.
    QPoly minimal_polynomial_of(const Element& a) const {
        RationalField q;
        const auto d = static_cast<std::size_t>(degree());
        std::vector<Element> powers{one()};
        for (std::size_t k = 1; k <= d; ++k) {
            powers.push_back(mul(powers.back(), a));
            // Solve sum_{i<k} c_i a^i = a^k.
            auto m = zero_matrix(q, d, k);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < k; ++j) m[i][j] = powers[j][i];
            auto sol = solve_unique(q, m, powers[k]);
            if (sol) {
                std::vector<Rational> c(k + 1);
                for (std::size_t j = 0; j < k; ++j) c[j] = -(*sol)[j];
                c[k] = 1;
                return upoly::trimmed(q, std::move(c));
            }
        }
        fail(ErrorCode::Internal, "minimal polynomial search exceeded field degree");
    }

    std::string format(const Element& a) const {
        RationalField q;
        return upoly::format(q, to_poly(a), "a");
    }

    bool operator==(const NumberField& other) const {
        RationalField q;
        return upoly::equal(q, modulus_, other.modulus_);
    }

   private:
    QPoly modulus_;
};

}  // namespace cyv

#endif  // CYV_NUMBER_FIELD_HPP
