#ifndef CYV_SYMFUNC_LITTLEWOOD_RICHARDSON_HPP
#define CYV_SYMFUNC_LITTLEWOOD_RICHARDSON_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cyv/symfunc/partition.hpp"

namespace cyv {

using LRMap = std::map<Partition, long>;

namespace detail {

// Skew filling of nu/lambda, built one letter at a time. Row r holds the
// letters placed to the right of lambda_r, left to right.
struct LRFilling {
    std::vector<int> shape;
    std::vector<std::vector<int>> rows;
};

// Reverse reading word (rows top to bottom, each right to left) must be a
// lattice word: every prefix has at least as many i's as (i+1)'s.
inline bool is_lattice(const LRFilling& f, int letters) {
    std::vector<int> count(static_cast<std::size_t>(letters) + 1, 0);
    for (const auto& row : f.rows) {
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int v = *it;
            ++count[static_cast<std::size_t>(v)];
            if (v > 0 && count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(v - 1)]) return false;
        }
    }
    return true;
}

// Adds a horizontal strip of `remaining` copies of `letter`, deciding row by
// row (top to bottom) how many boxes go in each row.
inline void add_strip(LRFilling& f, const std::vector<int>& old_shape, std::size_t row, int remaining, int letter,
                      const Partition& mu, LRMap& out) {
    if (remaining == 0) {
        if (!is_lattice(f, static_cast<int>(mu.length()))) return;
        int next = letter + 1;
        if (next == mu.length()) {
            out[Partition(f.shape)] += 1;
            return;
        }
        std::vector<int> snapshot = f.shape;
        add_strip(f, snapshot, 0, mu[static_cast<std::size_t>(next)], next, mu, out);
        return;
    }
    if (row >= f.shape.size()) return;
    const int current = old_shape[row];
    const int cap = row == 0 ? current + remaining : old_shape[row - 1];
    for (int add = std::min(remaining, cap - current); add >= 0; --add) {
        f.shape[row] = current + add;
        for (int i = 0; i < add; ++i) f.rows[row].push_back(letter);
        add_strip(f, old_shape, row + 1, remaining - add, letter, mu, out);
        for (int i = 0; i < add; ++i) f.rows[row].pop_back();
        f.shape[row] = current;
    }
}

}  // namespace detail

/// Littlewood-Richardson coefficients c^nu_{lambda,mu}, by enumerating the
/// LR skew tableaux of shape nu/lambda and content mu.
inline LRMap lr_coefficients(const Partition& lambda, const Partition& mu) {
    LRMap out;
    if (mu.empty()) {
        out[lambda] = 1;
        return out;
    }
    detail::LRFilling f;
    const std::size_t rows = static_cast<std::size_t>(lambda.length() + mu.length());
    f.shape.assign(rows, 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i) f.shape[i] = lambda[i];
    f.rows.assign(rows, {});
    std::vector<int> snapshot = f.shape;
    detail::add_strip(f, snapshot, 0, mu[0], 0, mu, out);
    return out;
}

/// Memoized lr_coefficients; safe to call from several threads.
inline const LRMap& lr_coefficients_cached(const Partition& lambda, const Partition& mu) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, LRMap> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, lr_coefficients(lambda, mu)).first;
    return it->second;
}

}  // namespace cyv

#endif  // CYV_SYMFUNC_LITTLEWOOD_RICHARDSON_HPP
