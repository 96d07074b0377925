#ifndef CYV_SYMFUNC_PARTITION_HPP
#define CYV_SYMFUNC_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "cyv/error.hpp"

namespace cyv {

/// Weakly decreasing sequence of positive integers (trailing zeros dropped).
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                fail(ErrorCode::WrongShape, "not a partition: " + to_string());
        }
    }

    /// (1^k)
    static Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }
    /// (k)
    static Partition row(int k) { return k == 0 ? Partition{} : Partition{k}; }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    int size() const noexcept {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// At most `rows` parts, each at most `cols`.
    bool fits_box(int rows, int cols) const noexcept { return length() <= rows && (empty() || parts_[0] <= cols); }

    /// Complement in the rows x cols box, rotated by 180 degrees.
    Partition complement(int rows, int cols) const {
        if (!fits_box(rows, cols)) fail(ErrorCode::WrongShape, "partition outside box");
        std::vector<int> out(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - (*this)[static_cast<std::size_t>(rows - 1 - i)];
        return Partition(std::move(out));
    }

    Partition conjugate() const {
        std::vector<int> out(empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
        return Partition(std::move(out));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

   private:
    std::vector<int> parts_;
};

/// All partitions fitting in a rows x cols box, ordered by size then
/// reverse-lexicographically within a size.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(cur);
        if (row == rows) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;
    });
    return out;
}

/// All partitions of n.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace cyv

#endif  // CYV_SYMFUNC_PARTITION_HPP
