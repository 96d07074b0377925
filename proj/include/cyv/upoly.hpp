#ifndef CYV_UPOLY_HPP
#define CYV_UPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cyv/field.hpp"
#include "cyv/linalg.hpp"

namespace cyv {

/// Dense univariate polynomial over a field; coeffs[i] multiplies x^i.
/// The zero polynomial has no coefficients, otherwise the last one is nonzero.
template <Field F>
struct UPoly {
    std::vector<typename F::Element> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const typename F::Element& lead() const { return coeffs.back(); }
};

namespace upoly {

template <Field F>
UPoly<F> trimmed(const F& f, std::vector<typename F::Element> c) {
    while (!c.empty() && f.is_zero(c.back())) c.pop_back();
    return UPoly<F>{std::move(c)};
}

template <Field F>
UPoly<F> constant(const F& f, const typename F::Element& c) {
    return trimmed(f, {c});
}

/// x - a
template <Field F>
UPoly<F> linear(const F& f, const typename F::Element& a) {
    return UPoly<F>{{f.neg(a), f.one()}};
}

template <Field F>
UPoly<F> from_rationals(const F& f, const std::vector<Rational>& c) {
    std::vector<typename F::Element> out;
    out.reserve(c.size());
    for (const auto& q : c) out.push_back(f.from_rational(q));
    return trimmed(f, std::move(out));
}

template <Field F>
bool equal(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (!f.equal(a.coeffs[i], b.coeffs[i])) return false;
    return true;
}

template <Field F>
UPoly<F> add(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.add(c[i], b.coeffs[i]);
    return trimmed(f, std::move(c));
}

template <Field F>
UPoly<F> scale(const F& f, const UPoly<F>& a, const typename F::Element& s) {
    std::vector<typename F::Element> c;
    c.reserve(a.coeffs.size());
    for (const auto& x : a.coeffs) c.push_back(f.mul(x, s));
    return trimmed(f, std::move(c));
}

template <Field F>
UPoly<F> sub(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    return add(f, a, scale(f, b, f.neg(f.one())));
}

template <Field F>
UPoly<F> mul(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<typename F::Element> c(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (f.is_zero(a.coeffs[i])) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    return trimmed(f, std::move(c));
}

template <Field F>
UPoly<F> pow(const F& f, UPoly<F> a, unsigned e) {
    UPoly<F> r = constant(f, f.one());
    while (e) {
        if (e & 1U) r = mul(f, r, a);
        a = mul(f, a, a);
        e >>= 1U;
    }
    return r;
}

template <Field F>
std::pair<UPoly<F>, UPoly<F>> divmod(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    if (b.is_zero()) fail(ErrorCode::Internal, "polynomial division by zero");
    auto rem = a.coeffs;
    const int db = b.degree();
    if (a.degree() < db) return {UPoly<F>{}, a};
    std::vector<typename F::Element> quo(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
    auto inv_lead = f.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        auto c = f.mul(rem[static_cast<std::size_t>(i)], inv_lead);
        quo[static_cast<std::size_t>(i - db)] = c;
        if (f.is_zero(c)) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = f.sub(slot, f.mul(c, b.coeffs[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {trimmed(f, std::move(quo)), trimmed(f, std::move(rem))};
}

template <Field F>
UPoly<F> rem(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    return divmod(f, a, b).second;
}

template <Field F>
UPoly<F> monic(const F& f, const UPoly<F>& a) {
    if (a.is_zero()) return a;
    return scale(f, a, f.inv(a.lead()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
UPoly<F> gcd(const F& f, UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g monic.
template <Field F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(const F& f, UPoly<F> a, UPoly<F> b) {
    UPoly<F> s0 = constant(f, f.one()), s1{}, t0{}, t1 = constant(f, f.one());
    while (!b.is_zero()) {
        auto [q, r] = divmod(f, a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = sub(f, s0, mul(f, q, s1));
        auto t2 = sub(f, t0, mul(f, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    auto inv = f.inv(a.lead());
    return {scale(f, a, inv), scale(f, s0, inv), scale(f, t0, inv)};
}

template <Field F>
UPoly<F> derivative(const F& f, const UPoly<F>& a) {
    if (a.coeffs.size() <= 1) return {};
    std::vector<typename F::Element> c;
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        c.push_back(f.mul(f.from_rational(Rational(static_cast<long>(i))), a.coeffs[i]));
    return trimmed(f, std::move(c));
}

template <Field F>
typename F::Element eval(const F& f, const UPoly<F>& a, const typename F::Element& x) {
    auto acc = f.zero();
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

/// Product of the distinct irreducible factors (characteristic zero, or
/// degree below the characteristic).
template <Field F>
UPoly<F> squarefree_part(const F& f, const UPoly<F>& a) {
    if (a.degree() <= 0) return monic(f, a);
    auto g = gcd(f, a, derivative(f, a));
    return monic(f, divmod(f, a, g).first);
}

/// Resultant through the Sylvester matrix built from the formal degrees
/// da >= deg a and db >= deg b, so it specializes coefficientwise.
template <Field F>
typename F::Element sylvester_resultant(const F& f, const UPoly<F>& a, const UPoly<F>& b, int da, int db) {
    if (da == 0 && db == 0) return f.one();
    const std::size_t n = static_cast<std::size_t>(da + db);
    auto m = zero_matrix(f, n, n);
    auto coeff = [&](const UPoly<F>& p, int i) {
        return i < static_cast<int>(p.coeffs.size()) ? p.coeffs[static_cast<std::size_t>(i)] : f.zero();
    };
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + da - i)] = coeff(a, i);
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i)
            m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + db - i)] = coeff(b, i);
    return determinant(f, std::move(m));
}

template <Field F>
std::string format(const F& f, const UPoly<F>& a, const std::string& var = "x") {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const auto& c = a.coeffs[static_cast<std::size_t>(i)];
        if (f.is_zero(c)) continue;
        std::string cs = f.format(c);
        const bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
        if (neg) cs.erase(0, 1);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace upoly
}  // namespace cyv

#endif  // CYV_UPOLY_HPP
