#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

/*
 * Multisets over the integers with the sum/difference calculus used by the
 * conjugacy proof: M_k (multiplicity of k), M+N = {x+y} and M-N = {x-y}
 * counted with multiplicity. Values may be zero or negative; only the
 * hook-multiset producers restrict to positive values.
 */

namespace hookset {

class IntMultiset {
public:
    IntMultiset() = default;

    IntMultiset(std::initializer_list<int> values) {
        for (int v : values) insert(v);
    }

    explicit IntMultiset(const std::vector<int>& values) {
        for (int v : values) insert(v);
    }

    void insert(int value, long long count = 1) {
        if (count < 1)
            throw std::invalid_argument("multiset: insert count must be >= 1");
        counts_[value] += count;
        size_ += count;
    }

    /// M_k; 0 when k is absent.
    long long multiplicity(int k) const {
        auto it = counts_.find(k);
        return it == counts_.end() ? 0 : it->second;
    }

    long long size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// Value -> multiplicity, ascending by value; multiplicities all positive.
    const std::map<int, long long>& counts() const { return counts_; }

    /// Ascending values with repetition.
    std::vector<int> values() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (const auto& [value, count] : counts_)
            for (long long c = 0; c < count; ++c) out.push_back(value);
        return out;
    }

    /// Canonical serialization, e.g. "[1,1,2,2,2,3,5,6]". Used verbatim as the
    /// grouping key in the search module and as the CLI's JSON field value.
    std::string to_string() const {
        std::string out = "[";
        bool first = true;
        for (const auto& [value, count] : counts_) {
            for (long long c = 0; c < count; ++c) {
                if (!first) out += ',';
                out += std::to_string(value);
                first = false;
            }
        }
        out += ']';
        return out;
    }

    bool operator==(const IntMultiset&) const = default;

private:
    std::map<int, long long> counts_;
    long long size_ = 0;
};

/// M+N: all pairwise sums; |M+N| = |M|*|N|.
inline IntMultiset msum(const IntMultiset& m, const IntMultiset& n) {
    IntMultiset out;
    for (const auto& [x, cx] : m.counts())
        for (const auto& [y, cy] : n.counts())
            out.insert(x + y, cx * cy);
    return out;
}

/// M-N: all pairwise differences; values may be <= 0.
inline IntMultiset mdiff(const IntMultiset& m, const IntMultiset& n) {
    IntMultiset out;
    for (const auto& [x, cx] : m.counts())
        for (const auto& [y, cy] : n.counts())
            out.insert(x - y, cx * cy);
    return out;
}

}  // namespace hookset
