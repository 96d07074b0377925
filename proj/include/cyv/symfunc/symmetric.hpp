#ifndef CYV_SYMFUNC_SYMMETRIC_HPP
#define CYV_SYMFUNC_SYMMETRIC_HPP

#include <vector>

#include "cyv/error.hpp"
#include "cyv/mpoly.hpp"

namespace cyv {

/// A contiguous run of variables forming one alphabet of formal roots.
struct Alphabet {
    std::size_t offset;
    std::size_t size;
};

/// e_k in the variables of one alphabet (embedded in nvars variables).
inline MPoly elementary_symmetric(std::size_t nvars, Alphabet a, int k) {
    MPoly out(nvars);
    if (k < 0 || k > static_cast<int>(a.size)) return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        Exponents e(nvars, 0);
        for (auto i : idx) e[a.offset + i] = 1;
        out.add_term(e, 1);
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] == a.size - idx.size() + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// True when p is invariant under every permutation of the alphabet's
/// variables (checked on the adjacent transpositions, which generate).
inline bool is_symmetric_in(const MPoly& p, Alphabet a) {
    for (std::size_t i = 0; i + 1 < a.size; ++i) {
        std::vector<std::size_t> perm(p.nvars());
        for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = v;
        std::swap(perm[a.offset + i], perm[a.offset + i + 1]);
        if (!(p.permuted(perm) == p)) return false;
    }
    return true;
}

/// Rewrites a polynomial symmetric in the roots of `a` in terms of the
/// elementary symmetric functions of `a`. In the result the same variable
/// slots hold e_1, ..., e_r instead of x_1, ..., x_r; variables outside the
/// alphabet are carried along as coefficients.
inline MPoly roots_to_e_basis(const MPoly& p, Alphabet a) {
    if (!is_symmetric_in(p, a)) fail(ErrorCode::NotSymmetric, "polynomial is not symmetric in the requested roots");
    const std::size_t n = p.nvars();
    auto root_part = [&](const Exponents& e) {
        return Exponents(e.begin() + static_cast<long>(a.offset), e.begin() + static_cast<long>(a.offset + a.size));
    };

    std::vector<MPoly> e_in_roots;
    for (int k = 0; k <= static_cast<int>(a.size); ++k) e_in_roots.push_back(elementary_symmetric(n, a, k));

    MPoly rest = p;
    MPoly out(n);
    while (true) {
        // Lexicographically largest root exponent still present.
        const Exponents* lead = nullptr;
        Exponents lead_roots;
        for (const auto& [e, c] : rest.terms()) {
            auto r = root_part(e);
            bool zero = true;
            for (int x : r) zero = zero && x == 0;
            if (zero) continue;
            if (!lead || r > lead_roots) {
                lead = &e;
                lead_roots = r;
            }
        }
        if (!lead) break;

        // Coefficient (in the other variables) of that root monomial.
        MPoly coeff(n);
        for (const auto& [e, c] : rest.terms()) {
            if (root_part(e) != lead_roots) continue;
            Exponents other = e;
            for (std::size_t i = 0; i < a.size; ++i) other[a.offset + i] = 0;
            coeff.add_term(other, c);
        }
        for (std::size_t i = 1; i < a.size; ++i)
            if (lead_roots[i] > lead_roots[i - 1]) fail(ErrorCode::NotSymmetric, "leading root exponent not dominant");

        // x^lead = e_1^(l1-l2) e_2^(l2-l3) ... e_r^(lr) + lower terms.
        MPoly in_roots = coeff;
        Exponents e_exp(n, 0);
        for (std::size_t k = 0; k < a.size; ++k) {
            int m = lead_roots[k] - (k + 1 < a.size ? lead_roots[k + 1] : 0);
            if (m > 0) in_roots *= e_in_roots[k + 1].pow(static_cast<unsigned>(m));
            e_exp[a.offset + k] = m;
        }
        rest -= in_roots;
        out += coeff * MPoly::monomial(e_exp, 1);
    }
    out += rest;
    return out;
}

/// Inverse direction: substitute e_k := elementary symmetric polynomial of
/// the alphabet's roots.
inline MPoly e_basis_to_roots(const MPoly& p, Alphabet a) {
    const std::size_t n = p.nvars();
    std::vector<MPoly> images;
    for (std::size_t v = 0; v < n; ++v) {
        if (v >= a.offset && v < a.offset + a.size)
            images.push_back(elementary_symmetric(n, a, static_cast<int>(v - a.offset + 1)));
        else
            images.push_back(MPoly::variable(n, v));
    }
    return p.substitute(images);
}

}  // namespace cyv

#endif  // CYV_SYMFUNC_SYMMETRIC_HPP
