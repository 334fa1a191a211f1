#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hookset/criterion.hpp"
#include "hookset/hooks.hpp"
#include "hookset/partition.hpp"

/*
 * Exhaustive validation domain: for each n, every subset of {1,...,n} that
 * contains n (2^(n-1) beta-sets), grouped into hook-multiset equivalence
 * classes. Within each class every distinct pair is checked: the symmetry
 * criterion against the direct conjugacy oracle, and for criterion-positive
 * pairs the two proof-artifact identities as well.
 *
 * Grouping and per-class checking may run on several threads; the report is
 * required to be identical to the sequential one except for elapsed time,
 * which the deterministic merge below guarantees.
 */

namespace hookset {

struct EquivClass {
    int n = 0;
    std::string key;               // canonical hook-multiset serialization
    std::vector<BetaSet> members;  // lexicographic on ascending element lists
};

struct ClassifiedPair {
    BetaSet a;
    BetaSet b;
    bool conjugate = false;
};

/// A pair failing one of the cross-validations; `check` names which one
/// (criterion_vs_direct, step1_symmetry or identity_residual).
struct TheoremMismatch {
    int n = 0;
    std::vector<int> a;
    std::vector<int> b;
    bool criterion = false;
    bool direct = false;
    std::string check;

    bool operator==(const TheoremMismatch&) const = default;
};

struct SearchReport {
    int n_max = 0;
    long long class_count = 0;
    long long conjugate_pairs = 0;
    long long non_conjugate_pairs = 0;
    std::vector<TheoremMismatch> mismatches;
    double elapsed_ms = 0.0;
};

namespace detail {

inline BetaSet beta_from_mask(std::uint64_t mask, int n) {
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(std::popcount(mask)) + 1);
    for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1) elems.push_back(i);
    elems.push_back(n);
    return BetaSet(std::move(elems));
}

inline void check_enumeration_bound(int n, const char* where) {
    if (n < 1)
        throw std::invalid_argument(std::string(where) + ": n must be >= 1");
    if (n > 32)
        throw std::invalid_argument(std::string(where) + ": n > 32 exceeds the mask width");
}

/// Hook-multiset key (expanded ascending values) -> members, via hooks_via_beta.
/// The map order and the final per-class sort make the result independent of
/// the thread count.
inline std::map<std::vector<int>, std::vector<BetaSet>> hook_classes(int n, int threads) {
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    using ClassMap = std::map<std::vector<int>, std::vector<BetaSet>>;

    auto scan = [n](std::uint64_t begin, std::uint64_t end, ClassMap& into) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            BetaSet b = beta_from_mask(mask, n);
            into[hooks_via_beta(b).values()].push_back(std::move(b));
        }
    };

    ClassMap classes;
    if (threads <= 1 || total < 2) {
        scan(0, total, classes);
    } else {
        const std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
        std::vector<ClassMap> local(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w)
            pool.emplace_back(scan, w * chunk, std::min(total, (w + 1) * chunk), std::ref(local[w]));
        for (auto& t : pool) t.join();
        for (auto& part : local)
            for (auto& [key, members] : part) {
                auto& dst = classes[key];
                dst.insert(dst.end(), std::make_move_iterator(members.begin()),
                           std::make_move_iterator(members.end()));
            }
    }
    for (auto& [key, members] : classes)
        std::sort(members.begin(), members.end());
    return classes;
}

struct ClassOutcome {
    long long conjugate = 0;
    long long non_conjugate = 0;
    std::vector<TheoremMismatch> mismatches;
};

/// Checks every distinct pair of one class; fills the outcome slot.
inline void validate_class(int n, const std::vector<BetaSet>& members, ClassOutcome& out) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const BetaSet& a = members[i];
            const BetaSet& b = members[j];
            const CriterionResult crit = theorem_criterion(a, b);
            const bool direct = is_conjugate_direct(a, b);
            direct ? ++out.conjugate : ++out.non_conjugate;
            if (crit.conjugate != direct)
                out.mismatches.push_back({n, a.elements(), b.elements(), crit.conjugate, direct,
                                          "criterion_vs_direct"});
            if (!crit.conjugate) continue;
            const Step1Sets s1 = step1_derived_sets(a, b);
            if (!s1.conj_minus_b_sym || !s1.b_minus_conj_sym)
                out.mismatches.push_back({n, a.elements(), b.elements(), crit.conjugate, direct,
                                          "step1_symmetry"});
            for (int k = 1; k <= n; ++k)
                if (proof_identity_residual(a, b, k) != 0) {
                    out.mismatches.push_back({n, a.elements(), b.elements(), crit.conjugate, direct,
                                              "identity_residual"});
                    break;
                }
        }
    }
}

}  // namespace detail

/// Every subset of {1,...,n} containing n, by increasing characteristic mask
/// of the part below n; 2^(n-1) sets.
inline std::vector<BetaSet> enumerate_beta_sets(int n) {
    detail::check_enumeration_bound(n, "enumerate_beta_sets");
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    std::vector<BetaSet> out;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        out.push_back(detail::beta_from_mask(mask, n));
    return out;
}

/// Classes in ascending key order, members in ascending-list order.
inline std::vector<EquivClass> group_by_hook_multiset(int n) {
    detail::check_enumeration_bound(n, "group_by_hook_multiset");
    std::vector<EquivClass> out;
    for (auto& [key, members] : detail::hook_classes(n, 1))
        out.push_back({n, IntMultiset(key).to_string(), std::move(members)});
    return out;
}

/// All distinct unordered pairs within each class, tagged by the direct
/// conjugacy oracle; class order, then (i, j) member order.
inline std::vector<ClassifiedPair> find_hook_equivalent_pairs(int n) {
    detail::check_enumeration_bound(n, "find_hook_equivalent_pairs");
    std::vector<ClassifiedPair> out;
    for (const auto& [key, members] : detail::hook_classes(n, 1))
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                out.push_back({members[i], members[j], is_conjugate_direct(members[i], members[j])});
    return out;
}

/// Runs the full cross-validation for every n <= n_max. Mismatches land in
/// the report instead of being thrown; the report is the test artifact.
inline SearchReport validate_theorem(int n_max, int threads = 1) {
    detail::check_enumeration_bound(n_max, "validate_theorem");
    if (threads < 1) threads = 1;
    const auto start = std::chrono::steady_clock::now();

    SearchReport report;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        auto class_map = detail::hook_classes(n, threads);
        report.class_count += static_cast<long long>(class_map.size());

        std::vector<const std::vector<BetaSet>*> classes;
        classes.reserve(class_map.size());
        for (const auto& [key, members] : class_map) classes.push_back(&members);

        std::vector<detail::ClassOutcome> outcomes(classes.size());
        if (threads == 1) {
            for (std::size_t c = 0; c < classes.size(); ++c)
                detail::validate_class(n, *classes[c], outcomes[c]);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t c = next.fetch_add(1); c < classes.size(); c = next.fetch_add(1))
                    detail::validate_class(n, *classes[c], outcomes[c]);
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        for (auto& outcome : outcomes) {
            report.conjugate_pairs += outcome.conjugate;
            report.non_conjugate_pairs += outcome.non_conjugate;
            report.mismatches.insert(report.mismatches.end(),
                                     std::make_move_iterator(outcome.mismatches.begin()),
                                     std::make_move_iterator(outcome.mismatches.end()));
        }
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hookset
