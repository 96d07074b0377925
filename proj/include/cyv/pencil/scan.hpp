#ifndef CYV_PENCIL_SCAN_HPP
#define CYV_PENCIL_SCAN_HPP

// Rank computations at exact points and exhaustive scans over F_q.
// Scan results are evidence only: an empty locus over F_q says nothing
// certain about the locus over the algebraic closure of Q.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "cyv/field.hpp"
#include "cyv/linalg.hpp"
#include "cyv/number_field.hpp"
#include "cyv/pencil/pencil.hpp"

namespace cyv::pencil {

inline std::size_t rank_at(const Pencil& p, const NumberField& k, const std::vector<NumberField::Element>& lambda) {
    return rank(k, p.at(k, lambda));
}

/// True iff ker A_lambda meets span{z, w}, i.e. A z and A w are dependent.
inline bool kernel_in_line(const Pencil& p, const NumberField& k, const std::vector<NumberField::Element>& lambda,
                           const QVector& z, const QVector& w) {
    detail::require_independent(z, w);
    const auto a = p.at(k, lambda);
    const std::size_t n = p.size();
    Matrix<NumberField> cols(2, std::vector<NumberField::Element>(n, k.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cols[0][i] = k.add(cols[0][i], k.mul(a[i][j], k.from_rational(z[j])));
            cols[1][i] = k.add(cols[1][i], k.mul(a[i][j], k.from_rational(w[j])));
        }
    return rank(k, cols) < 2;
}

namespace detail {

/// Calls visit(x) for one representative of every point of P^(dim-1)(F_q):
/// the first nonzero coordinate is 1. Points are split by the position of
/// that coordinate and the next one's value so workers share nothing.
template <class Visit>
std::uint64_t count_projective(const PrimeField& f, std::size_t dim, Visit visit) {
    const std::uint64_t q = f.modulus();
    struct Slice {
        std::size_t lead;
        std::uint64_t next;
    };
    std::vector<Slice> slices;
    for (std::size_t lead = 0; lead < dim; ++lead) {
        if (lead + 1 == dim) slices.push_back({lead, 0});
        else
            for (std::uint64_t v = 0; v < q; ++v) slices.push_back({lead, v});
    }
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::uint64_t> total{0};
    auto worker = [&] {
        std::vector<std::uint64_t> x(dim);
        std::uint64_t local = 0;
        for (std::size_t s; (s = cursor.fetch_add(1)) < slices.size();) {
            const auto [lead, next] = slices[s];
            std::fill(x.begin(), x.end(), 0);
            x[lead] = 1;
            if (lead + 1 == dim) {
                local += visit(x) ? 1 : 0;
                continue;
            }
            x[lead + 1] = next;
            const std::size_t free = dim - lead - 2;
            std::uint64_t combos = 1;
            for (std::size_t i = 0; i < free; ++i) combos *= q;
            for (std::uint64_t c = 0; c < combos; ++c) {
                std::uint64_t r = c;
                for (std::size_t i = 0; i < free; ++i) {
                    x[lead + 2 + i] = r % q;
                    r /= q;
                }
                local += visit(x) ? 1 : 0;
            }
        }
        total += local;
    };
    const unsigned threads = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return total;
}

inline std::vector<Matrix<PrimeField>> reduce(const Pencil& p, const PrimeField& f) {
    std::vector<Matrix<PrimeField>> out;
    for (const auto& m : p.matrices()) {
        Matrix<PrimeField> r;
        for (const auto& row : m) {
            std::vector<std::uint64_t> rr;
            for (const auto& x : row) rr.push_back(f.from_rational(x));
            r.push_back(std::move(rr));
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

/// Points of P^(n-1)(F_q) where every quadric x^t A_k x vanishes.
inline std::uint64_t base_locus_count(const Pencil& p, std::uint64_t q) {
    const PrimeField f(q);
    const auto mats = detail::reduce(p, f);
    const std::size_t n = p.size();
    return detail::count_projective(f, n, [&](const std::vector<std::uint64_t>& x) {
        for (const auto& a : mats) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!x[i]) continue;
                std::uint64_t row = 0;
                for (std::size_t j = 0; j < n; ++j) row = (row + a[i][j] * x[j]) % q;
                acc = (acc + row * x[i]) % q;
            }
            if (acc) return false;
        }
        return true;
    });
}

/// Points of the plane P^2(F_q) where A_lambda(s,t,u) has rank <= 3.
inline std::uint64_t rank3_on_plane_count(const Pencil& p, const Plane& plane, std::uint64_t q) {
    const PrimeField f(q);
    const auto mats = detail::reduce(p, f);
    std::vector<std::vector<std::uint64_t>> basis;
    for (const auto& b : plane.basis) {
        std::vector<std::uint64_t> r;
        for (const auto& x : b) r.push_back(f.from_rational(x));
        basis.push_back(std::move(r));
    }
    const std::size_t n = p.size();
    return detail::count_projective(f, basis.size(), [&](const std::vector<std::uint64_t>& stu) {
        std::vector<std::uint64_t> lambda(n, 0);
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) lambda[k] = f.add(lambda[k], f.mul(basis[j][k], stu[j]));
        auto m = zero_matrix(f, n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m[i][j] = f.add(m[i][j], f.mul(mats[k][i][j], lambda[k]));
        return rank(f, m) <= 3;
    });
}

}  // namespace cyv::pencil

#endif  // CYV_PENCIL_SCAN_HPP
