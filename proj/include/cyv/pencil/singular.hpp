#ifndef CYV_PENCIL_SINGULAR_HPP
#define CYV_PENCIL_SINGULAR_HPP

// Singular points of a reduced plane curve C(x0, x1, x2) = 0, exactly.
//
// In the chart x_c = 1 the partials become bivariate in (x_a, x_b). Their
// common zeros project to roots of resultants in x_a; each irreducible factor
// m(x_a) of the gcd of those resultants is handled over K = Q[x]/(m): the
// partials restricted to x_a = theta have a gcd in K[x_b] whose linear part
// gives the point. When that gcd has degree >= 2 several points share the
// same x_a, and the chart is sheared x_a -> x_a + s x_b before retrying.
// Points on the line x_c = 0 come from a univariate gcd plus one vertex.
// Every point found is checked exactly against all three partials.
//
// A point over K stands for its [K:Q] conjugates (one Galois orbit).

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cyv/error.hpp"
#include "cyv/factor.hpp"
#include "cyv/linalg.hpp"
#include "cyv/mpoly.hpp"
#include "cyv/number_field.hpp"
#include "cyv/upoly.hpp"

namespace cyv::pencil {

using KPoly = UPoly<NumberField>;

struct SingularPoint {
    std::shared_ptr<const NumberField> field;
    std::vector<NumberField::Element> coords;  // projective, first nonzero coordinate 1
    int multiplicity = 0;
    bool node = false;
    std::optional<std::vector<NumberField::Element>> ambient_lambda;

    /// Number of geometric points this orbit stands for.
    int orbit_size() const { return field->degree(); }

    std::string format() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? " : " : "") + field->format(coords[i]);
        out += "]";
        if (field->degree() > 1) out += " over Q[a]/(" + upoly::format(RationalField{}, field->modulus(), "a") + ")";
        return out;
    }
};

struct SingularOptions {
    /// {c, a, b}: dehomogenize x_c = 1 and eliminate x_b.
    std::array<int, 3> chart{0, 1, 2};
};

namespace detail {

/// Bivariate polynomial in (x_a, x_b) from a ternary form with x_c = 1.
inline MPoly dehomogenize(const MPoly& f, int a, int b) {
    MPoly out(2);
    for (const auto& [e, coef] : f.terms()) out.add_term({e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]}, coef);
    return out;
}

/// Coefficients in x_b of P(v, x_b) for a rational v.
inline QPoly specialize_first(const MPoly& p, const Rational& v) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(1)) + 1));
    for (const auto& [e, coef] : p.terms()) {
        Rational t = coef;
        for (int i = 0; i < e[0]; ++i) t *= v;
        c[static_cast<std::size_t>(e[1])] += t;
    }
    return upoly::trimmed(RationalField{}, std::move(c));
}

/// P(theta, x_b) over K.
inline KPoly specialize_first(const NumberField& k, const MPoly& p, const NumberField::Element& theta) {
    std::vector<NumberField::Element> c(static_cast<std::size_t>(std::max(0, p.degree_in(1)) + 1), k.zero());
    std::vector<NumberField::Element> powers{k.one()};
    for (const auto& [e, coef] : p.terms()) {
        while (static_cast<int>(powers.size()) <= e[0]) powers.push_back(k.mul(powers.back(), theta));
        c[static_cast<std::size_t>(e[1])] = k.add(c[static_cast<std::size_t>(e[1])], k.mul(k.from_rational(coef), powers[static_cast<std::size_t>(e[0])]));
    }
    return upoly::trimmed(k, std::move(c));
}

/// Univariate in x_a, for bivariate polys free of x_b.
inline QPoly as_univariate_first(const MPoly& p) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(0)) + 1));
    for (const auto& [e, coef] : p.terms()) c[static_cast<std::size_t>(e[0])] += coef;
    return upoly::trimmed(RationalField{}, std::move(c));
}

/// Newton interpolation through (xs[i], ys[i]).
inline QPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    RationalField f;
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    QPoly out = upoly::constant(f, ys[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) out = upoly::add(f, upoly::mul(f, out, upoly::linear(f, xs[i])), upoly::constant(f, ys[i]));
    return out;
}

/// Res_{x_b}(P, Q) as a polynomial in x_a, by evaluation at deg P * deg Q + 1
/// points with formal x_b-degrees. Two x_b-free inputs give their gcd instead.
inline QPoly resultant_in_second(const MPoly& p, const MPoly& q) {
    const int da = std::max(0, p.degree_in(1)), db = std::max(0, q.degree_in(1));
    if (da == 0 && db == 0) return upoly::gcd(RationalField{}, as_univariate_first(p), as_univariate_first(q));
    const int bound = std::max(1, p.total_degree()) * std::max(1, q.total_degree());
    std::vector<Rational> xs, ys;
    for (int v = 0; v <= bound; ++v) {
        xs.emplace_back(v);
        ys.push_back(upoly::sylvester_resultant(RationalField{}, specialize_first(p, v), specialize_first(q, v), da, db));
    }
    return interpolate(xs, ys);
}

/// A polynomial in x_a vanishing at the x_a-coordinate of every common zero.
inline QPoly eliminant(const std::vector<MPoly>& polys) {
    RationalField f;
    std::vector<MPoly> nz;
    for (const auto& p : polys)
        if (!p.is_zero()) nz.push_back(p);
    if (nz.empty()) fail(ErrorCode::NonReducedCurve, "all partial derivatives vanish");
    if (nz.size() == 1) {
        if (nz[0].total_degree() == 0) return upoly::constant(f, Rational(1));
        fail(ErrorCode::NonReducedCurve, "only one partial derivative survives in this chart");
    }
    std::vector<std::pair<MPoly, MPoly>> pairs;
    for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = i + 1; j < nz.size(); ++j) pairs.emplace_back(nz[i], nz[j]);
    QPoly r;
    for (const auto& [a, b] : pairs) {
        QPoly res = resultant_in_second(a, b);
        if (!res.is_zero()) r = r.is_zero() ? upoly::monic(f, res) : upoly::gcd(f, r, res);
    }
    if (r.is_zero() && nz.size() >= 3) {
        // Pairwise common factors; generic combinations separate them.
        for (long k = 2; k <= 6 && r.is_zero(); ++k) {
            MPoly l1 = nz[0] + nz[1] * Rational(k) + nz[2] * Rational(k * k);
            MPoly l2 = nz[0] * Rational(k) + nz[1] * Rational(-1) + nz[2] * Rational(k + 1);
            QPoly res = resultant_in_second(l1, l2);
            if (!res.is_zero()) r = upoly::monic(f, res);
        }
    }
    if (r.is_zero()) fail(ErrorCode::NonReducedCurve, "the partial derivatives share a curve component");
    return r;
}

/// F with x_a replaced by x_a + s x_b.
inline MPoly shear(const MPoly& f, int a, int b, long s) {
    if (s == 0) return f;
    std::vector<MPoly> images;
    for (std::size_t v = 0; v < 3; ++v) images.push_back(MPoly::variable(3, v));
    images[static_cast<std::size_t>(a)] = images[static_cast<std::size_t>(a)] + images[static_cast<std::size_t>(b)] * Rational(s);
    return f.substitute(images);
}

struct RawPoint {
    std::shared_ptr<const NumberField> field;
    std::vector<NumberField::Element> coords;
};

inline std::vector<NumberField::Element> normalized(const NumberField& k, std::vector<NumberField::Element> x) {
    for (const auto& v : x)
        if (!k.is_zero(v)) {
            auto inv = k.inv(v);
            for (auto& y : x) y = k.mul(y, inv);
            break;
        }
    return x;
}

inline std::vector<MPoly> gradient(const MPoly& f) { return {f.derivative(0), f.derivative(1), f.derivative(2)}; }

inline bool vanishes_at(const NumberField& k, const std::vector<MPoly>& polys, const std::vector<NumberField::Element>& x) {
    for (const auto& p : polys)
        if (!k.is_zero(p.eval(k, x))) return false;
    return true;
}

/// Singular points with x_c != 0.
inline std::vector<RawPoint> affine_singular(const MPoly& f, int c, int a, int b) {
    static constexpr long shears[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7, 11, -13, 17, 19, -23, 29};
    for (long s : shears) {
        const MPoly g = shear(f, a, b, s);
        std::vector<MPoly> parts;
        for (const auto& d : gradient(g)) parts.push_back(dehomogenize(d, a, b));
        const QPoly r = eliminant(parts);
        const RationalField q;
        std::vector<RawPoint> found;
        bool collided = false;
        for (const auto& [m, mult] : factor(upoly::squarefree_part(q, r)).factors) {
            (void)mult;
            auto k = std::make_shared<const NumberField>(m);
            const auto theta = k->generator();
            KPoly gcd_b;
            bool any = false;
            for (const auto& p : parts) {
                KPoly u = specialize_first(*k, p, theta);
                if (u.is_zero()) continue;
                gcd_b = any ? upoly::gcd(*k, gcd_b, u) : upoly::monic(*k, u);
                any = true;
            }
            if (!any) fail(ErrorCode::ResultantDegenerate, "all partials vanish on a whole line of the chart");
            gcd_b = upoly::squarefree_part(*k, gcd_b);
            if (gcd_b.degree() <= 0) continue;  // projection artefact, no point above this root
            if (gcd_b.degree() >= 2) {
                collided = true;
                break;
            }
            const auto xb = k->neg(gcd_b.coeffs[0]);
            std::vector<NumberField::Element> x(3, k->zero());
            x[static_cast<std::size_t>(c)] = k->one();
            x[static_cast<std::size_t>(b)] = xb;
            x[static_cast<std::size_t>(a)] = k->add(theta, k->mul(k->from_rational(Rational(s)), xb));
            found.push_back({k, std::move(x)});
        }
        if (!collided) return found;
    }
    fail(ErrorCode::Internal, "no shear separated the singular points");
}

/// Singular points on the line x_c = 0.
inline std::vector<RawPoint> singular_at_infinity(const MPoly& f, int c, int a, int b) {
    const RationalField q;
    const auto grad = gradient(f);
    // Points [x_a : 1 : 0] (in a, b, c order).
    QPoly g;
    bool any = false;
    for (const auto& d : grad) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(d.total_degree() + 1));
        for (const auto& [e, coef] : d.terms())
            if (e[static_cast<std::size_t>(c)] == 0) coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(a)])] += coef;
        QPoly u = upoly::trimmed(q, std::move(coeffs));
        if (u.is_zero()) continue;
        g = any ? upoly::gcd(q, g, u) : upoly::monic(q, u);
        any = true;
    }
    if (!any) fail(ErrorCode::NonReducedCurve, "the whole line at infinity is singular");
    std::vector<RawPoint> out;
    if (g.degree() >= 1)
        for (const auto& [m, mult] : factor(upoly::squarefree_part(q, g)).factors) {
            (void)mult;
            auto k = std::make_shared<const NumberField>(m);
            std::vector<NumberField::Element> x(3, k->zero());
            x[static_cast<std::size_t>(a)] = k->generator();
            x[static_cast<std::size_t>(b)] = k->one();
            out.push_back({k, std::move(x)});
        }
    // The vertex e_a.
    auto k = std::make_shared<const NumberField>(upoly::linear(q, Rational(0)));
    std::vector<NumberField::Element> x(3, k->zero());
    x[static_cast<std::size_t>(a)] = k->one();
    if (vanishes_at(*k, grad, x)) out.push_back({k, std::move(x)});
    return out;
}

}  // namespace detail

struct SingularityType {
    int multiplicity = 0;
    bool node = false;
};

/// Multiplicity from the Taylor expansion in an affine chart around pt, and
/// whether the quadratic part is a nondegenerate binary form.
inline SingularityType classify_singularity(const MPoly& c, const SingularPoint& pt) {
    const NumberField& k = *pt.field;
    std::size_t i0 = 0;
    while (i0 < 3 && k.is_zero(pt.coords[i0])) ++i0;
    if (i0 == 3) fail(ErrorCode::BadDimensions, "the zero vector is not a projective point");
    std::array<std::size_t, 2> dir{};
    for (std::size_t v = 0, n = 0; v < 3; ++v)
        if (v != i0) dir[n++] = v;

    SingularityType out;
    const int d = c.total_degree();
    NumberField::Element fjj = k.zero(), fjk = k.zero(), fkk = k.zero();
    for (int m = 0; m <= d; ++m) {
        bool nonzero = false;
        for (int a = 0; a <= m; ++a) {
            MPoly der = c;
            for (int i = 0; i < a; ++i) der = der.derivative(dir[0]);
            for (int i = 0; i < m - a; ++i) der = der.derivative(dir[1]);
            auto v = der.eval(k, pt.coords);
            if (m == 2) {
                if (a == 2) fjj = v;
                if (a == 1) fjk = v;
                if (a == 0) fkk = v;
            }
            nonzero = nonzero || !k.is_zero(v);
        }
        if (nonzero) {
            out.multiplicity = m;
            break;
        }
    }
    if (out.multiplicity < 2) fail(ErrorCode::NotSingular, "the point is not a singular point of the curve");
    if (out.multiplicity == 2) {
        // discriminant of (fjj/2) y^2 + fjk y z + (fkk/2) z^2, up to the factor 4
        auto disc = k.sub(k.mul(fjk, fjk), k.mul(fjj, fkk));
        out.node = !k.is_zero(disc);
    }
    return out;
}

/// All singular points of the plane curve c = 0, one entry per Galois orbit.
inline std::vector<SingularPoint> singular_points(const MPoly& c, const SingularOptions& opts = {}) {
    if (c.nvars() != 3) fail(ErrorCode::BadDimensions, "expected a ternary form");
    if (c.is_zero() || !c.is_homogeneous()) fail(ErrorCode::BadDimensions, "expected a nonzero homogeneous form");
    auto [cc, a, b] = opts.chart;
    {
        std::array<int, 3> sorted = opts.chart;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2}) fail(ErrorCode::BadDimensions, "chart must be a permutation of 0,1,2");
    }
    auto raw = detail::affine_singular(c, cc, a, b);
    for (auto& p : detail::singular_at_infinity(c, cc, a, b)) raw.push_back(std::move(p));

    const auto grad = detail::gradient(c);
    std::vector<SingularPoint> out;
    int count = 0;
    for (auto& r : raw) {
        if (!detail::vanishes_at(*r.field, grad, r.coords))
            fail(ErrorCode::Internal, "candidate singular point failed exact verification");
        SingularPoint p;
        p.field = r.field;
        p.coords = detail::normalized(*r.field, std::move(r.coords));
        auto type = classify_singularity(c, p);
        p.multiplicity = type.multiplicity;
        p.node = type.node;
        count += p.orbit_size();
        out.push_back(std::move(p));
    }
    const int d = c.total_degree();
    if (count > (d - 1) * (d - 1)) fail(ErrorCode::Internal, "more singular points than Bezout allows");
    return out;
}

/// Total number of geometric points.
inline int point_count(const std::vector<SingularPoint>& pts) {
    int n = 0;
    for (const auto& p : pts) n += p.orbit_size();
    return n;
}

/// Representation-independent description of an orbit: the minimal
/// polynomial of a primitive linear form l and each coordinate written as a
/// polynomial in l.
struct OrbitKey {
    QPoly minpoly;
    std::vector<std::vector<Rational>> coords;
    friend bool operator==(const OrbitKey& a, const OrbitKey& b) {
        return a.minpoly.coeffs == b.minpoly.coeffs && a.coords == b.coords;
    }
    friend bool operator<(const OrbitKey& a, const OrbitKey& b) {
        if (a.minpoly.coeffs != b.minpoly.coeffs) return a.minpoly.coeffs < b.minpoly.coeffs;
        return a.coords < b.coords;
    }
};

inline OrbitKey orbit_key(const NumberField& k, const std::vector<NumberField::Element>& x) {
    const RationalField q;
    const auto d = static_cast<std::size_t>(k.degree());
    for (long c1 = 0; c1 <= 6; ++c1)
        for (long c2 = 0; c2 <= 6; ++c2) {
            std::vector<NumberField::Element> pt = x;
            NumberField::Element l = k.zero();
            const long cs[] = {1, c1, c2};
            for (std::size_t i = 0; i < pt.size() && i < 3; ++i) l = k.add(l, k.mul(k.from_rational(Rational(cs[i])), pt[i]));
            QPoly mp = k.minimal_polynomial_of(l);
            if (static_cast<std::size_t>(mp.degree()) != d) continue;
            Matrix<RationalField> basis(d, std::vector<Rational>(d));
            NumberField::Element pw = k.one();
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t r = 0; r < d; ++r) basis[r][j] = pw[r];
                pw = k.mul(pw, l);
            }
            OrbitKey key{mp, {}};
            for (const auto& v : pt) {
                auto sol = solve_unique(q, basis, v);
                if (!sol) fail(ErrorCode::Internal, "primitive element does not span the field");
                key.coords.push_back(*sol);
            }
            return key;
        }
    fail(ErrorCode::Internal, "no primitive linear form found");
}

namespace detail {

/// Largest coefficient of the primitive integer multiple of p.
inline Integer height(const QPoly& p) {
    Integer l = 1, g = 0, h = 0;
    for (const auto& c : p.coeffs) l = lcm(l, Integer(c.get_den()));
    for (const auto& c : p.coeffs) g = gcd(g, Integer(c * l));
    for (const auto& c : p.coeffs) {
        Integer v = abs(Integer(c * l) / g);
        if (v > h) h = v;
    }
    return h;
}

}  // namespace detail

/// The same orbit over Q(x_i), where x_i is the coordinate generating the
/// field whose minimal polynomial has the smallest integer height. The other
/// coordinates then read as polynomials in x_i.
inline std::pair<std::shared_ptr<const NumberField>, std::vector<NumberField::Element>> rebase_on_coordinate(
    const std::shared_ptr<const NumberField>& k, const std::vector<NumberField::Element>& x) {
    const RationalField q;
    const auto d = static_cast<std::size_t>(k->degree());
    if (d == 1) return {k, x};
    std::optional<std::size_t> best;
    Integer best_height;
    for (std::size_t i = 0; i < x.size(); ++i) {
        QPoly mp = k->minimal_polynomial_of(x[i]);
        if (static_cast<std::size_t>(mp.degree()) != d) continue;
        Integer h = detail::height(mp);
        if (!best || h < best_height) {
            best = i;
            best_height = h;
        }
    }
    if (!best) return {k, x};
    const auto& g = x[*best];
    Matrix<RationalField> basis(d, std::vector<Rational>(d));
    NumberField::Element pw = k->one();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < d; ++r) basis[r][j] = pw[r];
        pw = k->mul(pw, g);
    }
    auto field = std::make_shared<const NumberField>(k->minimal_polynomial_of(g));
    std::vector<NumberField::Element> out;
    for (const auto& v : x) {
        auto sol = solve_unique(q, basis, v);
        if (!sol) fail(ErrorCode::Internal, "primitive coordinate does not span the field");
        out.push_back(*sol);
    }
    return {field, out};
}

inline OrbitKey orbit_key(const SingularPoint& p) { return orbit_key(*p.field, p.coords); }

/// True when two lists describe the same set of points.
inline bool same_point_set(const std::vector<SingularPoint>& a, const std::vector<SingularPoint>& b) {
    std::vector<OrbitKey> ka, kb;
    for (const auto& p : a) ka.push_back(orbit_key(p));
    for (const auto& p : b) kb.push_back(orbit_key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

struct GenusReport {
    int degree = 0;
    int arithmetic_genus = 0;
    int geometric_genus = 0;
};

/// Genus bookkeeping for a plane curve whose singular set is `nodes`.
inline GenusReport curve_genus_report(const MPoly& c, const std::vector<SingularPoint>& nodes) {
    for (const auto& p : nodes)
        if (!p.node) fail(ErrorCode::NonNodalSingularity, "singular point " + p.format() + " is not a node");
    GenusReport r;
    r.degree = c.total_degree();
    r.arithmetic_genus = (r.degree - 1) * (r.degree - 2) / 2;
    r.geometric_genus = r.arithmetic_genus - point_count(nodes);
    return r;
}

}  // namespace cyv::pencil

#endif  // CYV_PENCIL_SINGULAR_HPP
