#ifndef CYV_MPOLY_HPP
#define CYV_MPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyv/error.hpp"
#include "cyv/field.hpp"
#include "cyv/rational.hpp"

namespace cyv {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored.
class MPoly {
   public:
    MPoly() = default;
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c) {
        MPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static MPoly variable(std::size_t nvars, std::size_t i) {
        MPoly p(nvars);
        Exponents e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, 1);
        return p;
    }
    static MPoly monomial(const Exponents& e, const Rational& c) {
        MPoly p(e.size());
        p.add_term(e, c);
        return p;
    }
    /// sum_i coeffs[i] * x_i
    static MPoly linear(const std::vector<Rational>& coeffs) {
        MPoly p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) p += variable(coeffs.size(), i) * coeffs[i];
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != nvars_) fail(ErrorCode::Internal, "monomial arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend MPoly operator*(MPoly a, const Rational& s) {
        if (s == 0) return MPoly(a.nvars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly out(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    MPoly pow(unsigned k) const {
        MPoly r = constant(nvars_, 1), base = *this;
        while (k) {
            if (k & 1U) r *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return r;
    }

    /// Largest total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, sum(e));
        return d;
    }
    /// Largest degree with variable i carrying weight w[i].
    int weighted_degree(const std::vector<int>& w) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, weighted(e, w));
        return d;
    }
    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int s = sum(e);
            if (d != -2 && s != d) return false;
            d = s;
        }
        return true;
    }
    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    /// Terms of weighted degree exactly k.
    MPoly weighted_part(const std::vector<int>& w, int k) const {
        MPoly out(nvars_);
        for (const auto& [e, c] : terms_)
            if (weighted(e, w) == k) out.add_term(e, c);
        return out;
    }
    /// Terms of weighted degree at most k.
    MPoly truncated(const std::vector<int>& w, int k) const {
        MPoly out(nvars_);
        for (const auto& [e, c] : terms_)
            if (weighted(e, w) <= k) out.add_term(e, c);
        return out;
    }

    MPoly derivative(std::size_t var) const {
        MPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            --d[var];
            out.add_term(d, c * e[var]);
        }
        return out;
    }

    /// Exponent permutation: variable i of the result is variable perm[i] here.
    MPoly permuted(const std::vector<std::size_t>& perm) const {
        MPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents d(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) d[i] = e[perm[i]];
            out.add_term(d, c);
        }
        return out;
    }

    /// Substitutes x_i -> images[i] (all images share one arity).
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (images.size() != nvars_) fail(ErrorCode::Internal, "substitution arity mismatch");
        const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
        MPoly out(out_vars);
        std::vector<std::vector<MPoly>> powers(nvars_);
        for (const auto& [e, c] : terms_) {
            MPoly term = constant(out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(out_vars, 1));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
                if (e[i] > 0) term *= pw[static_cast<std::size_t>(e[i])];
            }
            out += term;
        }
        return out;
    }

    /// Evaluation in any field; rational coefficients are mapped in.
    template <Field F>
    typename F::Element eval(const F& f, const std::vector<typename F::Element>& point) const {
        if (point.size() != nvars_) fail(ErrorCode::Internal, "evaluation arity mismatch");
        std::vector<std::vector<typename F::Element>> powers(nvars_);
        auto acc = f.zero();
        for (const auto& [e, c] : terms_) {
            auto term = f.from_rational(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(f.one());
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(f.mul(pw.back(), point[i]));
                if (e[i] > 0) term = f.mul(term, pw[static_cast<std::size_t>(e[i])]);
            }
            acc = f.add(acc, term);
        }
        return acc;
    }

    Rational eval(const std::vector<Rational>& point) const { return eval(RationalField{}, point); }

    std::string format(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names.at(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            Rational a = abs(c);
            std::string coef = to_string(a);
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (mono.empty())
                out += coef;
            else
                out += (a == 1 ? "" : coef + "*") + mono;
        }
        return out;
    }

   private:
    static int sum(const Exponents& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    static int weighted(const Exponents& e, const std::vector<int>& w) {
        int s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * w[i];
        return s;
    }
    void check(const MPoly& o) const {
        if (o.nvars_ != nvars_) fail(ErrorCode::Internal, "polynomial arity mismatch");
    }

    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace cyv

#endif  // CYV_MPOLY_HPP
