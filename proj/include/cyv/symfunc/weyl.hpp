#ifndef CYV_SYMFUNC_WEYL_HPP
#define CYV_SYMFUNC_WEYL_HPP

#include <string>
#include <vector>

#include "cyv/error.hpp"
#include "cyv/rational.hpp"

namespace cyv {

/// Integer GL(n) weight. Entries are meant to be weakly decreasing inside
/// each block a caller declares; the type itself does not enforce it.
struct Weight {
    std::vector<int> entries;

    bool is_dominant() const {
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (entries[i] > entries[i - 1]) return false;
        return true;
    }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
        return s + ")";
    }
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Dimension of the irreducible GL(n) representation with highest weight w
/// (padded with zeros to length n):
///   prod_{i<j} (w_i - w_j + j - i) / (j - i).
inline Integer weyl_dimension(const Weight& w, int n) {
    if (static_cast<int>(w.entries.size()) > n) fail(ErrorCode::BadDimensions, "weight longer than n");
    std::vector<long> e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < w.entries.size(); ++i) e[i] = w.entries[i];
    Rational dim = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dim *= ratio(e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(j)] + j - i, j - i);
    if (dim < 0 || !is_integer(dim)) fail(ErrorCode::NotDominantInBlock, "weight " + w.to_string() + " is not dominant");
    return dim.get_num();
}

}  // namespace cyv

#endif  // CYV_SYMFUNC_WEYL_HPP
