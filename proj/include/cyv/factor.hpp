#ifndef CYV_FACTOR_HPP
#define CYV_FACTOR_HPP

// Factorization in Q[x]: squarefree decomposition followed by the classical
// Zassenhaus scheme (Cantor-Zassenhaus modulo a small prime, linear Hensel
// lifting, exhaustive subset recombination). Sized for the low degrees that
// plane-curve elimination produces.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cyv/field.hpp"
#include "cyv/upoly.hpp"

namespace cyv {

using QPoly = UPoly<RationalField>;

struct QFactorization {
    Rational unit;                            // leading coefficient of the input
    std::vector<std::pair<QPoly, int>> factors;  // monic irreducibles with multiplicity
};

namespace detail {

using ZPoly = std::vector<Integer>;  // coefficient i multiplies x^i

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    ztrim(c);
    return c;
}

inline Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline ZPoly zmod(const ZPoly& a, const Integer& m) {
    ZPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_pos(a[i], m);
    ztrim(c);
    return c;
}

inline ZPoly zsymmetric(const ZPoly& a, const Integer& m) {
    ZPoly c = zmod(a, m);
    Integer half = m / 2;
    for (auto& x : c)
        if (x > half) x -= m;
    ztrim(c);
    return c;
}

inline UPoly<PrimeField> to_fp(const PrimeField& fp, const ZPoly& a) {
    std::vector<std::uint64_t> c;
    Integer q = static_cast<unsigned long>(fp.modulus());
    for (const auto& x : a) c.push_back(mod_pos(x, q).get_ui());
    return upoly::trimmed(fp, std::move(c));
}

inline ZPoly from_fp(const UPoly<PrimeField>& a) {
    ZPoly c;
    for (auto x : a.coeffs) c.emplace_back(static_cast<unsigned long>(x));
    return c;
}

/// Clears denominators and content; returns a primitive integer polynomial
/// with positive leading coefficient.
inline ZPoly primitive_integer(const QPoly& f) {
    Integer den = 1;
    for (const auto& c : f.coeffs) den = lcm(den, Integer(c.get_den()));
    ZPoly z;
    for (const auto& c : f.coeffs) z.push_back(Integer(c * den));
    Integer g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g != 0)
        for (auto& c : z) c /= g;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

inline QPoly to_q(const ZPoly& z) {
    RationalField q;
    std::vector<Rational> c;
    for (const auto& x : z) c.emplace_back(x);
    return upoly::trimmed(q, std::move(c));
}

using FpPoly = UPoly<PrimeField>;

inline FpPoly powmod(const PrimeField& fp, FpPoly base, Integer e, const FpPoly& mod) {
    FpPoly r = upoly::constant(fp, fp.one());
    base = upoly::rem(fp, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = upoly::rem(fp, upoly::mul(fp, r, base), mod);
        base = upoly::rem(fp, upoly::mul(fp, base, base), mod);
        e >>= 1;
    }
    return r;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& fp, FpPoly f) {
    std::vector<std::pair<FpPoly, int>> out;
    const FpPoly x{{0, 1}};
    FpPoly h = x;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(fp, h, Integer(static_cast<unsigned long>(fp.modulus())), f);
        auto g = upoly::gcd(fp, upoly::sub(fp, h, x), f);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = upoly::divmod(fp, f, g).first;
            h = upoly::rem(fp, h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(upoly::monic(fp, f), f.degree());
    return out;
}

inline void equal_degree(const PrimeField& fp, const FpPoly& g, int d, std::mt19937_64& rng,
                         std::vector<FpPoly>& out) {
    if (g.degree() == d) {
        out.push_back(upoly::monic(fp, g));
        return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), fp.modulus(), static_cast<unsigned long>(d));
    Integer e = (pd - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coin(0, fp.modulus() - 1);
    while (true) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
        for (auto& x : c) x = coin(rng);
        auto a = upoly::trimmed(fp, std::move(c));
        if (a.degree() < 1) continue;
        auto b = upoly::sub(fp, powmod(fp, a, e, g), upoly::constant(fp, fp.one()));
        auto h = upoly::gcd(fp, b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(fp, h, d, rng, out);
            equal_degree(fp, upoly::divmod(fp, g, h).first, d, rng, out);
            return;
        }
    }
}

inline std::vector<FpPoly> factor_mod_p(const PrimeField& fp, const FpPoly& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FpPoly> out;
    for (auto& [g, d] : distinct_degree(fp, upoly::monic(fp, f))) equal_degree(fp, g, d, rng, out);
    return out;
}

/// Lifts g = lc * a * b (mod p), a monic, to the same identity mod p^k.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& g, const FpPoly& a, const FpPoly& b,
                                           const PrimeField& fp, int k) {
    auto [one, s, t] = upoly::xgcd(fp, a, b);
    if (one.degree() != 0) fail(ErrorCode::Internal, "Hensel lifting needs coprime modular factors");
    ZPoly A = from_fp(a), B = from_fp(b);
    const Integer p = static_cast<unsigned long>(fp.modulus());
    Integer m = p;
    for (int j = 1; j < k; ++j) {
        ZPoly err = zsub(g, zmul(A, B));
        for (auto& c : err) {
            if (c % m != 0) fail(ErrorCode::Internal, "Hensel invariant violated");
            c /= m;
        }
        auto e = to_fp(fp, err);
        auto te = upoly::mul(fp, t, e);
        auto [qq, dA] = upoly::divmod(fp, te, a);
        auto dB = upoly::add(fp, upoly::mul(fp, s, e), upoly::mul(fp, qq, b));
        ZPoly DA = from_fp(dA), DB = from_fp(dB);
        ZPoly nA(std::max(A.size(), DA.size()), Integer(0)), nB(std::max(B.size(), DB.size()), Integer(0));
        for (std::size_t i = 0; i < A.size(); ++i) nA[i] += A[i];
        for (std::size_t i = 0; i < DA.size(); ++i) nA[i] += m * DA[i];
        for (std::size_t i = 0; i < B.size(); ++i) nB[i] += B[i];
        for (std::size_t i = 0; i < DB.size(); ++i) nB[i] += m * DB[i];
        m *= p;
        A = zmod(nA, m);
        B = zmod(nB, m);
    }
    return {A, B};
}

/// Exact division in Z[x]; empty optional when b does not divide a.
inline std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
    RationalField q;
    auto [quo, r] = upoly::divmod(q, to_q(a), to_q(b));
    if (!r.is_zero()) return std::nullopt;
    ZPoly out;
    for (const auto& c : quo.coeffs) {
        if (!is_integer(c)) return std::nullopt;
        out.push_back(Integer(c));
    }
    return out;
}

inline Integer coefficient_bound(const ZPoly& g) {
    Integer norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    Integer root = sqrt(norm2) + 1;
    Integer two_n = 1;
    two_n <<= static_cast<unsigned long>(g.size());
    return two_n * root * abs(g.back());
}

/// Irreducible factors of a squarefree primitive integer polynomial of
/// positive degree with positive leading coefficient.
inline std::vector<ZPoly> zassenhaus(const ZPoly& g) {
    const int n = static_cast<int>(g.size()) - 1;
    if (n <= 1) return {g};

    // Pick the admissible prime (among the first few) with fewest modular factors.
    std::uint64_t best_p = 0;
    std::vector<FpPoly> best;
    int admissible = 0;
    for (std::uint64_t p = 3; admissible < 6 && p < 5000; p += 2) {
        if (!is_prime(p)) continue;
        PrimeField fp(p);
        if (mod_pos(g.back(), Integer(static_cast<unsigned long>(p))) == 0) continue;
        auto gp = to_fp(fp, g);
        if (upoly::gcd(fp, gp, upoly::derivative(fp, gp)).degree() != 0) continue;
        ++admissible;
        auto fac = factor_mod_p(fp, gp, 0x5eed0000ULL + p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) fail(ErrorCode::Internal, "no admissible prime for factorization");
    if (best.size() == 1) return {g};

    PrimeField fp(best_p);
    const Integer p = static_cast<unsigned long>(best_p);
    Integer bound = 2 * coefficient_bound(g);
    int k = 1;
    Integer pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }

    // Peel off one modular factor at a time.
    std::vector<ZPoly> lifted;
    ZPoly rest = g;
    std::vector<FpPoly> remaining = best;
    while (remaining.size() > 1) {
        FpPoly a = remaining.front();
        FpPoly b = upoly::constant(fp, fp.from_rational(Rational(rest.back())));
        for (std::size_t i = 1; i < remaining.size(); ++i) b = upoly::mul(fp, b, remaining[i]);
        auto [A, B] = hensel_pair(rest, a, b, fp, k);
        lifted.push_back(A);
        rest = B;
        remaining.erase(remaining.begin());
    }
    {
        // Last factor: monic representative of rest / lc mod p^k.
        Integer inv;
        Integer lc = mod_pos(rest.back(), pk);
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
        ZPoly last = rest;
        for (auto& c : last) c = mod_pos(c * inv, pk);
        lifted.push_back(last);
    }

    std::vector<ZPoly> factors;
    ZPoly current = g;
    std::vector<ZPoly> pool = lifted;
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{current.back()};
            for (auto i : idx) cand = zmod(zmul(cand, pool[i]), pk);
            cand = zsymmetric(cand, pk);
            Integer content = 0;
            for (const auto& c : cand) content = gcd(content, c);
            if (content != 0) {
                for (auto& c : cand) c /= content;
                if (cand.back() < 0)
                    for (auto& c : cand) c = -c;
                if (auto quo = zdivide(current, cand)) {
                    factors.push_back(cand);
                    current = *quo;
                    for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + static_cast<long>(*it));
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == pool.size() - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (current.size() > 1) factors.push_back(current);
    return factors;
}

}  // namespace detail

/// Squarefree decomposition (Yun): f = lc * prod g_i^i with g_i monic,
/// squarefree, pairwise coprime. Only nonconstant g_i are returned.
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
    RationalField q;
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() < 1) return out;
    auto a = upoly::monic(q, f);
    auto da = upoly::derivative(q, a);
    auto b = upoly::gcd(q, a, da);
    auto c = upoly::divmod(q, a, b).first;
    auto d = upoly::sub(q, upoly::divmod(q, da, b).first, upoly::derivative(q, c));
    for (int i = 1; c.degree() > 0; ++i) {
        auto g = upoly::gcd(q, c, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        c = upoly::divmod(q, c, g).first;
        d = upoly::sub(q, upoly::divmod(q, d, g).first, upoly::derivative(q, c));
    }
    return out;
}

/// Complete factorization over Q into monic irreducibles.
inline QFactorization factor(const QPoly& f) {
    RationalField q;
    QFactorization out;
    if (f.is_zero()) fail(ErrorCode::Internal, "cannot factor the zero polynomial");
    out.unit = f.lead();
    for (auto& [g, mult] : squarefree_decomposition(f)) {
        for (auto& z : detail::zassenhaus(detail::primitive_integer(g)))
            out.factors.emplace_back(upoly::monic(q, detail::to_q(z)), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs < b.first.coeffs;
    });
    return out;
}

inline bool is_irreducible(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace cyv

#endif  // CYV_FACTOR_HPP
