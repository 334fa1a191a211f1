#pragma once

#include <random>
#include <string>
#include <vector>

#include "hookset/criterion.hpp"
#include "hookset/format.hpp"
#include "hookset/hooks.hpp"
#include "hookset/multiset.hpp"
#include "hookset/partition.hpp"
#include "test_support.hpp"

/*
 * The randomized property suite shared by the unit tests and the acceptance
 * runner: five invariant families, one deterministic seed, every case
 * counted. A failure records the offending input instead of aborting.
 */

namespace testsupport {

struct PropertyOutcome {
    long long cases = 0;
    std::vector<std::string> failures;
};

inline PropertyOutcome run_property_suite(unsigned seed = 0) {
    std::mt19937 rng(seed);
    PropertyOutcome out;
    auto expect = [&out](bool ok, const std::string& what) {
        ++out.cases;
        if (!ok) out.failures.push_back(what);
    };

    // Conjugation is an involution and preserves the box count.
    for (int i = 0; i < 2500; ++i) {
        const hookset::Partition p = random_partition(rng);
        const hookset::Partition q = hookset::conjugate(p);
        expect(hookset::conjugate(q) == p && q.boxes() == p.boxes(),
               "conjugate involution failed for " + hookset::to_text(p));
    }

    // The beta-set maps invert each other in both directions.
    for (int i = 0; i < 1250; ++i) {
        hookset::Partition p = random_partition(rng);
        while (p.empty()) p = random_partition(rng);
        expect(hookset::partition_from_beta(hookset::beta_set(p)) == p,
               "beta round trip failed for partition " + hookset::to_text(p));
    }
    for (int i = 0; i < 1250; ++i) {
        const hookset::BetaSet b = random_beta_set(rng);
        expect(hookset::beta_set(hookset::partition_from_beta(b)) == b,
               "beta round trip failed for beta-set " + hookset::to_text(b));
    }

    // Conjugation leaves the hook multiset unchanged.
    for (int i = 0; i < 2500; ++i) {
        const hookset::Partition p = random_partition(rng);
        expect(hookset::hooks_direct(p) == hookset::hooks_direct(hookset::conjugate(p)),
               "hook multiset changed under conjugation for " + hookset::to_text(p));
    }

    // |M+N| and |M-N| both equal |M| * |N|.
    for (int i = 0; i < 1500; ++i) {
        const hookset::IntMultiset m(random_values(rng));
        const hookset::IntMultiset n(random_values(rng));
        const long long want = m.size() * n.size();
        expect(msum(m, n).size() == want && mdiff(m, n).size() == want,
               "sum/difference size law failed for " + m.to_string() + " and " + n.to_string());
    }

    // The empty set is n-symmetric for every n, and {n/2} for every even n.
    for (int n = 0; n < 1500; ++n) {
        if (n % 2 == 0)
            expect(hookset::is_n_symmetric({}, n) && hookset::is_n_symmetric({n / 2}, n),
                   "symmetry of {} or {n/2} failed for n = " + std::to_string(n));
        else
            expect(hookset::is_n_symmetric({}, n) && !hookset::is_n_symmetric({n / 2}, n),
                   "symmetry of {} or asymmetry of {n/2} failed for n = " + std::to_string(n));
    }

    return out;
}

}  // namespace testsupport
