#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hookset/multiset.hpp"
#include "hookset/partition.hpp"

/*
 * Hook multisets by two independent routes: directly from the Young diagram,
 * and as the positive difference set A - A' of a beta-set against its
 * complement in I_n = {0,...,n}. The equality of the two routes is the
 * content of the beta-set lemma and is what the test suite checks
 * exhaustively; neither function may be implemented in terms of the other.
 */

namespace hookset {

/// A multiset of hook lengths; all values >= 1, size = box count.
using HookMultiset = IntMultiset;

/// H(lambda) read off the hook grid of the diagram.
inline HookMultiset hooks_direct(const Partition& p) {
    HookMultiset hooks;
    for (const auto& row : hook_grid(p).rows)
        for (int h : row) hooks.insert(h);
    return hooks;
}

/// A' = I_n \ A for n = max(A); contains 0, never contains n.
inline std::vector<int> complement_in(const BetaSet& a, int n) {
    if (n != a.max())
        throw std::invalid_argument("complement_in: n = " + std::to_string(n) +
                                    " differs from max(A) = " + std::to_string(a.max()));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n + 1) - a.elements().size());
    for (int x = 0; x <= n; ++x)
        if (!a.contains(x)) out.push_back(x);
    return out;
}

/// H(lambda_A) = {a - a' : a in A, a' in A', a > a'}, by the literal double loop.
inline HookMultiset hooks_via_beta(const BetaSet& a) {
    const std::vector<int> comp = complement_in(a, a.max());
    HookMultiset hooks;
    for (int x : a.elements())
        for (int y : comp)
            if (x > y) hooks.insert(x - y);
    return hooks;
}

/// Beta-set of the conjugate partition: n - A' = {n - x : x in A'}.
inline BetaSet conjugate_beta(const BetaSet& a) {
    const int n = a.max();
    std::vector<int> elems;
    for (int x : complement_in(a, n)) elems.push_back(n - x);
    return BetaSet(std::move(elems));
}

}  // namespace hookset
