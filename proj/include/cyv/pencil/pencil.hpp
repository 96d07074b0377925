#ifndef CYV_PENCIL_PENCIL_HPP
#define CYV_PENCIL_PENCIL_HPP

// A linear system of quadrics A_lambda = sum_k lambda_k A_k given by symmetric
// rational matrices, and the linear algebra around it: the symmetroid
// det A_lambda, lines l = <z, w> with z^t A_lambda w = 0, the plane
// P_x = { z^t A z = w^t A w = 0 } and restriction of forms to that plane.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyv/error.hpp"
#include "cyv/field.hpp"
#include "cyv/linalg.hpp"
#include "cyv/mpoly.hpp"
#include "cyv/rational.hpp"

namespace cyv::pencil {

using QVector = std::vector<Rational>;

class Pencil {
   public:
    /// Builds from matrices[k][i][j] = (A_k)_{ij}; n matrices of size n x n.
    static Pencil from_matrices(std::vector<Matrix<RationalField>> mats) {
        std::vector<std::vector<std::vector<std::string>>> raw;
        for (const auto& m : mats) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : m) {
                std::vector<std::string> r;
                for (const auto& x : row) r.push_back(to_string(x));
                rows.push_back(std::move(r));
            }
            raw.push_back(std::move(rows));
        }
        return from_strings(raw);
    }

    static Pencil from_json(const nlohmann::json& doc) {
        if (!doc.is_object() || !doc.contains("matrices") || !doc["matrices"].is_array())
            fail(ErrorCode::WrongShape, "pencil document needs a \"matrices\" array");
        const auto& mats = doc["matrices"];
        const std::size_t n = mats.size();
        if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<long>() != static_cast<long>(n)))
            fail(ErrorCode::WrongShape, "\"n\" does not match the number of matrices");
        std::vector<std::vector<std::vector<std::string>>> raw;
        for (const auto& m : mats) {
            if (!m.is_array() || m.size() != n) fail(ErrorCode::WrongShape, "each matrix must have n rows");
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : m) {
                if (!row.is_array() || row.size() != n) fail(ErrorCode::WrongShape, "each row must have n entries");
                std::vector<std::string> r;
                for (const auto& x : row) {
                    if (!x.is_string()) fail(ErrorCode::BadRational, "entries must be strings \"p/q\"; got " + x.dump());
                    r.push_back(x.get<std::string>());
                }
                rows.push_back(std::move(r));
            }
            raw.push_back(std::move(rows));
        }
        return from_strings(raw);
    }

    static Pencil load(const std::string& path) {
        std::ifstream in(path);
        if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::WrongShape, "'" + path + "' is not valid JSON: " + e.what());
        }
        return from_json(doc);
    }

    /// The document this pencil was read from, entry strings untouched.
    nlohmann::json to_json() const {
        return {{"n", static_cast<long>(size())}, {"matrices", raw_}};
    }

    std::size_t size() const noexcept { return mats_.size(); }
    const std::vector<Matrix<RationalField>>& matrices() const noexcept { return mats_; }
    /// t[i][j][k] = (A_k)_{ij}.
    const Rational& entry(std::size_t i, std::size_t j, std::size_t k) const { return mats_.at(k).at(i).at(j); }

    /// A_lambda over any field, lambda given in that field.
    template <Field F>
    Matrix<F> at(const F& f, const std::vector<typename F::Element>& lambda) const {
        const std::size_t n = size();
        if (lambda.size() != n) fail(ErrorCode::BadDimensions, "lambda has the wrong length");
        auto m = zero_matrix(f, n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if (f.is_zero(lambda[k])) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Rational& t = mats_[k][i][j];
                    if (t != 0) m[i][j] = f.add(m[i][j], f.mul(f.from_rational(t), lambda[k]));
                }
        }
        return m;
    }

    /// A_lambda with entries linear forms in lambda_1..lambda_n.
    std::vector<std::vector<MPoly>> symbolic() const {
        const std::size_t n = size();
        std::vector<std::vector<MPoly>> out(n, std::vector<MPoly>(n, MPoly(n)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QVector c(n);
                for (std::size_t k = 0; k < n; ++k) c[k] = mats_[k][i][j];
                out[i][j] = MPoly::linear(c);
            }
        return out;
    }

    /// Coefficients in lambda of the bilinear form x^t A_lambda y.
    QVector bilinear(const QVector& x, const QVector& y) const {
        QVector out(size());
        for (std::size_t k = 0; k < size(); ++k)
            for (std::size_t i = 0; i < size(); ++i)
                for (std::size_t j = 0; j < size(); ++j) out[k] += x[i] * mats_[k][i][j] * y[j];
        return out;
    }

   private:
    static Pencil from_strings(std::vector<std::vector<std::vector<std::string>>> raw) {
        const std::size_t n = raw.size();
        if (n == 0) fail(ErrorCode::WrongShape, "pencil has no matrices");
        Pencil p;
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (raw[k].size() != n) fail(ErrorCode::WrongShape, "each matrix must have n rows");
            Matrix<RationalField> m;
            for (const auto& row : raw[k]) {
                if (row.size() != n) fail(ErrorCode::WrongShape, "each row must have n entries");
                std::vector<Rational> r;
                for (const auto& s : row) {
                    r.push_back(parse_rational(s));
                    nonzero = nonzero || r.back() != 0;
                }
                m.push_back(std::move(r));
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != m[j][i])
                        fail(ErrorCode::NotSymmetric, "matrix " + std::to_string(k + 1) + " differs at (" + std::to_string(i + 1) +
                                                          "," + std::to_string(j + 1) + ") and (" + std::to_string(j + 1) + "," +
                                                          std::to_string(i + 1) + ")");
            p.mats_.push_back(std::move(m));
        }
        if (!nonzero) fail(ErrorCode::WrongShape, "all entries are zero");
        p.raw_ = std::move(raw);
        return p;
    }

    std::vector<Matrix<RationalField>> mats_;
    std::vector<std::vector<std::vector<std::string>>> raw_;
};

inline Pencil load_pencil(const nlohmann::json& doc) { return Pencil::from_json(doc); }

/// det A_lambda as a form in lambda, by Laplace expansion.
inline MPoly symmetroid(const Pencil& p) {
    const auto a = p.symbolic();
    const std::size_t n = p.size();
    std::map<unsigned, MPoly> memo;  // minor on rows depth.., columns in mask
    auto minor = [&](auto&& self, std::size_t row, unsigned mask) -> MPoly {
        if (row == n) return MPoly::constant(n, 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MPoly out(n);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1U << c))) continue;
            if (!a[row][c].is_zero()) {
                MPoly term = a[row][c] * self(self, row + 1, mask & ~(1U << c));
                out += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        memo.emplace(mask, out);
        return out;
    };
    MPoly det = minor(minor, 0, (1U << n) - 1);
    if (det.is_zero()) fail(ErrorCode::IdenticallyZero, "det A_lambda vanishes identically");
    return det;
}

namespace detail {

inline void require_independent(const QVector& z, const QVector& w) {
    RationalField f;
    if (rank(f, Matrix<RationalField>{z, w}) < 2) fail(ErrorCode::DependentVectors, "z and w are linearly dependent");
}

inline bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Scales a rational vector to a primitive integer vector with positive
/// first nonzero entry.
inline QVector primitive(QVector v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
    for (auto& x : v) {
        x *= l;
        g = gcd(g, Integer(x.get_num()));
    }
    Rational s = g == 0 ? Rational(1) : Rational(1) / Rational(g);
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0) s = -s;
            break;
        }
    for (auto& x : v) x *= s;
    return v;
}

}  // namespace detail

/// True iff z^t A_k w = 0 for every k.
inline bool line_in_X(const Pencil& p, const QVector& z, const QVector& w) {
    if (z.size() != p.size() || w.size() != p.size()) fail(ErrorCode::BadDimensions, "z and w need n entries");
    detail::require_independent(z, w);
    return detail::is_zero(p.bilinear(z, w));
}

struct Plane {
    QVector form_z;                 // coefficients of z^t A_lambda z
    QVector form_w;                 // coefficients of w^t A_lambda w
    std::vector<QVector> basis;     // lambda = s basis[0] + t basis[1] + u basis[2]

    /// lambda for plane coordinates (s, t, u) over any field.
    template <Field F>
    std::vector<typename F::Element> lambda(const F& f, const std::vector<typename F::Element>& stu) const {
        std::vector<typename F::Element> out(basis.at(0).size(), f.zero());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t k = 0; k < out.size(); ++k)
                if (basis[j][k] != 0) out[k] = f.add(out[k], f.mul(f.from_rational(basis[j][k]), stu[j]));
        return out;
    }
};

inline Plane plane_Px(const Pencil& p, const QVector& z, const QVector& w) {
    if (!line_in_X(p, z, w)) fail(ErrorCode::DegenerateSystem, "z^t A_lambda w does not vanish identically");
    Plane out{p.bilinear(z, z), p.bilinear(w, w), {}};
    RationalField f;
    Matrix<RationalField> forms{out.form_z, out.form_w};
    if (rank(f, forms) < 2) fail(ErrorCode::DegenerateSystem, "the two forms defining P_x are dependent");
    for (auto& v : nullspace(f, forms, p.size())) out.basis.push_back(detail::primitive(v));
    return out;
}

/// True when two pairs of linear forms span the same space.
inline bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b) {
    RationalField f;
    Matrix<RationalField> ma(a.begin(), a.end()), mb(b.begin(), b.end()), both = ma;
    both.insert(both.end(), mb.begin(), mb.end());
    const auto ra = rank(f, ma);
    return ra == rank(f, mb) && ra == rank(f, both);
}

/// Substitutes lambda = sum_j x_j basis[j]; the result is a form in (s,t,u).
inline MPoly restrict_to_plane(const MPoly& q, const Plane& plane) {
    const std::size_t m = plane.basis.size();
    std::vector<MPoly> images;
    for (std::size_t k = 0; k < q.nvars(); ++k) {
        QVector c(m);
        for (std::size_t j = 0; j < m; ++j) c[j] = plane.basis[j].at(k);
        images.push_back(MPoly::linear(c));
    }
    MPoly out = q.substitute(images);
    if (out.is_zero()) fail(ErrorCode::PlaneInsideHypersurface, "the plane lies inside the hypersurface");
    return out;
}

}  // namespace cyv::pencil

#endif  // CYV_PENCIL_PENCIL_HPP
