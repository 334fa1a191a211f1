#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/*
 * Integer partitions, Young diagrams, hook lengths and beta-sets.
 *
 * A partition is a weakly decreasing sequence of positive parts (the empty
 * partition is allowed). Its beta-set is the set of first-column hook
 * lengths, {lambda_i + m - i : 1 <= i <= m}; beta-sets are exactly the
 * nonempty finite sets of distinct positive integers, and the map is a
 * bijection onto nonempty partitions (partition_from_beta inverts beta_set).
 */

namespace hookset {

class Partition {
public:
    Partition() = default;

    /// Validates weak decrease and positivity; the empty sequence is allowed.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition: part at index " + std::to_string(i) +
                                            " is " + std::to_string(parts_[i]) + ", parts must be >= 1");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: not weakly decreasing at index " +
                                            std::to_string(i));
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Number of rows of the Young diagram.
    int rows() const { return static_cast<int>(parts_.size()); }

    /// Part size of 1-based row i.
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }

    /// Total number of boxes.
    long long boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

class BetaSet {
public:
    /// Accepts elements in any order; stores them strictly increasing.
    /// Rejects empty input, duplicates and values < 1.
    explicit BetaSet(std::vector<int> elements) : elems_(std::move(elements)) {
        if (elems_.empty())
            throw std::invalid_argument("beta-set: must be nonempty");
        std::sort(elems_.begin(), elems_.end());
        if (elems_.front() < 1)
            throw std::invalid_argument("beta-set: element " + std::to_string(elems_.front()) +
                                        " is not a positive integer");
        for (std::size_t i = 1; i < elems_.size(); ++i)
            if (elems_[i] == elems_[i - 1])
                throw std::invalid_argument("beta-set: duplicate element " +
                                            std::to_string(elems_[i]));
    }

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }

    /// The maximum element n; equals the (1,1)-box hook length of the partition.
    int max() const { return elems_.back(); }

    bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

    auto operator<=>(const BetaSet&) const = default;

private:
    std::vector<int> elems_;
};

/// Hook lengths of every box, row by row; row i holds lambda_i entries.
/// Entries strictly decrease along each row and down each column.
struct HookGrid {
    std::vector<std::vector<int>> rows;

    long long box_count() const {
        long long total = 0;
        for (const auto& row : rows) total += static_cast<long long>(row.size());
        return total;
    }

    bool operator==(const HookGrid&) const = default;
};

/// Conjugate partition, lambda'_i = #{j : lambda_j >= i}, by the counting
/// formula rather than diagram reflection.
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    const auto& parts = p.parts();
    std::vector<int> conj(static_cast<std::size_t>(parts.front()));
    std::size_t rows = parts.size();
    for (int i = 1; i <= parts.front(); ++i) {
        while (rows > 0 && parts[rows - 1] < i) --rows;
        conj[static_cast<std::size_t>(i) - 1] = static_cast<int>(rows);
    }
    return Partition(std::move(conj));
}

/// Beta-set {lambda_i + m - i : 1 <= i <= m}. The empty partition has none.
inline BetaSet beta_set(const Partition& p) {
    if (p.empty())
        throw std::domain_error("beta_set: the empty partition has no beta-set");
    const auto& parts = p.parts();
    const int m = p.rows();
    std::vector<int> elems;
    elems.reserve(parts.size());
    for (int i = m; i >= 1; --i)
        elems.push_back(parts[static_cast<std::size_t>(i) - 1] + m - i);
    return BetaSet(std::move(elems));
}

/// Inverse of beta_set: with elements a_1 > ... > a_m, the partition is
/// (a_1 - (m-1), a_2 - (m-2), ..., a_m).
inline Partition partition_from_beta(const BetaSet& a) {
    const auto& elems = a.elements();
    const int m = a.size();
    std::vector<int> parts;
    parts.reserve(elems.size());
    for (int i = m - 1; i >= 0; --i)
        parts.push_back(elems[static_cast<std::size_t>(i)] - i);
    return Partition(std::move(parts));
}

/// Hook length of the (i, j)-box (1-based): lambda_i - j + lambda'_j - i + 1.
inline int hook_length(const Partition& p, int i, int j) {
    if (i < 1 || i > p.rows())
        throw std::out_of_range("hook_length: row " + std::to_string(i) + " outside diagram");
    const auto& parts = p.parts();
    const int row_len = parts[static_cast<std::size_t>(i) - 1];
    if (j < 1 || j > row_len)
        throw std::out_of_range("hook_length: column " + std::to_string(j) +
                                " outside row " + std::to_string(i));
    int col_len = 0;  // lambda'_j
    for (int part : parts)
        if (part >= j) ++col_len;
    return row_len - j + col_len - i + 1;
}

/// All hook lengths at once; one conjugate computation instead of one per box.
inline HookGrid hook_grid(const Partition& p) {
    HookGrid grid;
    if (p.empty()) return grid;
    const auto& parts = p.parts();
    const std::vector<int> conj = conjugate(p).parts();
    grid.rows.reserve(parts.size());
    for (int i = 1; i <= p.rows(); ++i) {
        std::vector<int> row(static_cast<std::size_t>(parts[static_cast<std::size_t>(i) - 1]));
        for (int j = 1; j <= parts[static_cast<std::size_t>(i) - 1]; ++j)
            row[static_cast<std::size_t>(j) - 1] =
                parts[static_cast<std::size_t>(i) - 1] - j + conj[static_cast<std::size_t>(j) - 1] - i + 1;
        grid.rows.push_back(std::move(row));
    }
    return grid;
}

}  // namespace hookset
