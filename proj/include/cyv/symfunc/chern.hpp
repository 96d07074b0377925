#ifndef CYV_SYMFUNC_CHERN_HPP
#define CYV_SYMFUNC_CHERN_HPP

// Universal Chern-class polynomials via the splitting principle. A
// ChernSeries is a graded polynomial in the Chern classes of one or more
// "alphabets" (bundles); variable c_{a,i} has degree i.

#include <numeric>
#include <string>
#include <vector>

#include "cyv/error.hpp"
#include "cyv/mpoly.hpp"
#include "cyv/symfunc/symmetric.hpp"

namespace cyv {

class ChernSeries {
   public:
    ChernSeries(std::vector<int> ranks, MPoly poly, int truncation)
        : ranks_(std::move(ranks)), poly_(std::move(poly)), truncation_(truncation) {
        for (int r : ranks_)
            if (r <= 0) fail(ErrorCode::BadDimensions, "alphabet ranks must be positive");
        if (truncation_ < 0) fail(ErrorCode::BadDimensions, "truncation degree must be nonnegative");
        if (poly_.nvars() != nvars()) fail(ErrorCode::Internal, "ChernSeries arity mismatch");
        poly_ = poly_.truncated(weights(), truncation_);
    }

    /// c(E) = 1 + c_1 + ... + c_r for alphabet `which`, truncated at `truncation`.
    static ChernSeries total(std::vector<int> ranks, std::size_t which, int truncation) {
        std::size_t n = std::accumulate(ranks.begin(), ranks.end(), std::size_t{0},
                                        [](std::size_t s, int r) { return s + static_cast<std::size_t>(r); });
        MPoly p = MPoly::constant(n, 1);
        std::size_t off = 0;
        for (std::size_t a = 0; a < which; ++a) off += static_cast<std::size_t>(ranks[a]);
        for (int i = 0; i < ranks.at(which); ++i) p += MPoly::variable(n, off + static_cast<std::size_t>(i));
        return ChernSeries(std::move(ranks), std::move(p), truncation);
    }

    const std::vector<int>& ranks() const noexcept { return ranks_; }
    const MPoly& poly() const noexcept { return poly_; }
    int truncation() const noexcept { return truncation_; }

    std::size_t nvars() const {
        return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0},
                               [](std::size_t s, int r) { return s + static_cast<std::size_t>(r); });
    }
    /// Variable index of c_{alphabet,i}, i >= 1.
    std::size_t var(std::size_t alphabet, int i) const {
        if (i < 1 || i > ranks_.at(alphabet)) fail(ErrorCode::IndexOutOfRange, "Chern index out of range");
        std::size_t off = 0;
        for (std::size_t a = 0; a < alphabet; ++a) off += static_cast<std::size_t>(ranks_[a]);
        return off + static_cast<std::size_t>(i - 1);
    }
    /// Grading: c_{a,i} has weight i.
    std::vector<int> weights() const {
        std::vector<int> w;
        for (int r : ranks_)
            for (int i = 1; i <= r; ++i) w.push_back(i);
        return w;
    }

    /// Graded piece of degree k (zero beyond the truncation).
    MPoly part(int k) const {
        if (k > truncation_) return MPoly(nvars());
        return poly_.weighted_part(weights(), k);
    }

    ChernSeries truncated(int d) const { return ChernSeries(ranks_, poly_, std::min(d, truncation_)); }

    friend ChernSeries operator*(const ChernSeries& a, const ChernSeries& b) {
        if (a.ranks_ != b.ranks_) fail(ErrorCode::RingMismatch, "ChernSeries alphabets differ");
        int t = std::min(a.truncation_, b.truncation_);
        return ChernSeries(a.ranks_, (a.poly_.truncated(a.weights(), t) * b.poly_.truncated(b.weights(), t)), t);
    }
    friend bool operator==(const ChernSeries& a, const ChernSeries& b) {
        return a.ranks_ == b.ranks_ && a.truncation_ == b.truncation_ && a.poly_ == b.poly_;
    }

    std::vector<std::string> default_names() const {
        std::vector<std::string> names;
        for (std::size_t a = 0; a < ranks_.size(); ++a)
            for (int i = 1; i <= ranks_[a]; ++i) names.push_back("c" + std::string(a, '\'') + std::to_string(i));
        return names;
    }
    std::string format() const { return poly_.format(default_names()); }
    std::string format(const std::vector<std::string>& names) const { return poly_.format(names); }

   private:
    std::vector<int> ranks_;
    MPoly poly_;
    int truncation_;
};

/// Total Chern class prod_j (1 + root_j), where each root is a linear form in
/// the formal roots of the alphabets (same variable layout as the series),
/// rewritten in the Chern classes of those alphabets.
inline ChernSeries chern_from_roots(const std::vector<int>& ranks, const std::vector<MPoly>& roots, int truncation) {
    std::size_t n = 0;
    for (int r : ranks) n += static_cast<std::size_t>(r);
    std::vector<int> w(n, 1);
    MPoly prod = MPoly::constant(n, 1);
    for (const auto& x : roots) prod = (prod * (MPoly::constant(n, 1) + x)).truncated(w, truncation);
    std::size_t off = 0;
    for (int r : ranks) {
        prod = roots_to_e_basis(prod, Alphabet{off, static_cast<std::size_t>(r)});
        off += static_cast<std::size_t>(r);
    }
    return ChernSeries(ranks, prod, truncation);
}

/// c(Sym^2 E) for E of rank r, roots x_i + x_j (i <= j).
inline ChernSeries chern_sym2(int r) {
    if (r < 1) fail(ErrorCode::BadDimensions, "rank must be positive");
    const auto n = static_cast<std::size_t>(r);
    std::vector<MPoly> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) roots.push_back(MPoly::variable(n, i) + MPoly::variable(n, j));
    return chern_from_roots({r}, roots, r * (r + 1) / 2);
}

/// c(Lambda^2 E) for E of rank r, roots x_i + x_j (i < j).
inline ChernSeries chern_wedge2(int r) {
    if (r < 1) fail(ErrorCode::BadDimensions, "rank must be positive");
    const auto n = static_cast<std::size_t>(r);
    std::vector<MPoly> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) roots.push_back(MPoly::variable(n, i) + MPoly::variable(n, j));
    if (roots.empty()) return ChernSeries({r}, MPoly::constant(n, 1), 0);
    return chern_from_roots({r}, roots, r * (r - 1) / 2);
}

/// c(E (x) F) for ranks r1, r2, roots x_i + y_j; alphabets (E, F).
inline ChernSeries chern_tensor(int r1, int r2) {
    if (r1 < 1 || r2 < 1) fail(ErrorCode::BadDimensions, "ranks must be positive");
    const auto n = static_cast<std::size_t>(r1 + r2);
    std::vector<MPoly> roots;
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < r2; ++j)
            roots.push_back(MPoly::variable(n, static_cast<std::size_t>(i)) +
                            MPoly::variable(n, static_cast<std::size_t>(r1 + j)));
    return chern_from_roots({r1, r2}, roots, r1 * r2);
}

/// c(E (x) L) for E of rank r and a line bundle L with c_1(L) = t; alphabets
/// (E, L). Uses c_k(E (x) L) = sum_i binom(r - i, k - i) c_i(E) t^(k - i).
inline ChernSeries chern_twist(int r) {
    if (r < 1) fail(ErrorCode::BadDimensions, "rank must be positive");
    const auto n = static_cast<std::size_t>(r + 1);
    const auto t = MPoly::variable(n, static_cast<std::size_t>(r));
    MPoly total = MPoly::constant(n, 1);
    for (int k = 1; k <= r; ++k) {
        for (int i = 0; i <= k; ++i) {
            MPoly ci = i == 0 ? MPoly::constant(n, 1) : MPoly::variable(n, static_cast<std::size_t>(i - 1));
            total += ci * t.pow(static_cast<unsigned>(k - i)) * Rational(binomial(r - i, k - i));
        }
    }
    return ChernSeries({r, 1}, total, r);
}

/// Chern series of the dual bundle: degree-k part times (-1)^k.
inline ChernSeries dual(const ChernSeries& c) {
    MPoly out(c.nvars());
    const auto w = c.weights();
    for (const auto& [e, coef] : c.poly().terms()) {
        int deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * w[i];
        out.add_term(e, deg % 2 ? -coef : coef);
    }
    return ChernSeries(c.ranks(), out, c.truncation());
}

/// Segre series: the formal inverse of a total Chern class, up to degree d.
/// s_0 = 1 and s_k = -sum_{i=1..k} c_i s_{k-i}.
inline ChernSeries segre_from_chern(const ChernSeries& c, int d) {
    const std::size_t n = c.nvars();
    const MPoly c0 = c.part(0);
    if (!(c0 == MPoly::constant(n, 1))) fail(ErrorCode::BadDimensions, "total Chern class must start with 1");
    std::vector<MPoly> s{MPoly::constant(n, 1)};
    for (int k = 1; k <= d; ++k) {
        MPoly sk(n);
        for (int i = 1; i <= k; ++i) {
            MPoly ci = c.part(i);
            if (!ci.is_zero()) sk -= ci * s[static_cast<std::size_t>(k - i)];
        }
        s.push_back(std::move(sk));
    }
    MPoly total(n);
    for (const auto& sk : s) total += sk;
    return ChernSeries(c.ranks(), total, d);
}

}  // namespace cyv

#endif  // CYV_SYMFUNC_CHERN_HPP
