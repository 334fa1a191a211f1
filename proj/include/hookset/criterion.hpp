#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hookset/hooks.hpp"
#include "hookset/multiset.hpp"
#include "hookset/partition.hpp"

/*
 * The conjugacy criterion: two different beta-sets A, B with common maximum
 * n and equal hook multisets describe conjugate partitions exactly when the
 * symmetric differences A\B and B\A are n-symmetric (S = {n - x : x in S}).
 * Also here: the direct conjugacy oracle the criterion is validated against,
 * the two proof-artifact checks (derived-set symmetry and the four-term
 * multiplicity identity), and the Herman-Chung family of hook-equivalent
 * non-conjugate pairs.
 */

namespace hookset {

/// The symmetric differences C = A\B and D = B\A with their n-symmetry flags.
struct SymmetricDiffWitness {
    int n = 0;
    std::vector<int> a_minus_b;  // ascending
    std::vector<int> b_minus_a;  // ascending
    bool a_sym = false;
    bool b_sym = false;

    bool operator==(const SymmetricDiffWitness&) const = default;
};

enum class ConjugacyStatus { Identical, HooksDiffer, Conjugate, NotConjugate };

/// Total outcome of deciding conjugacy; the witness is present exactly for
/// the Conjugate/NotConjugate cases (distinct sets, equal hook multisets).
struct ConjugacyVerdict {
    ConjugacyStatus status = ConjugacyStatus::Identical;
    std::optional<SymmetricDiffWitness> witness;

    bool operator==(const ConjugacyVerdict&) const = default;
};

struct CriterionResult {
    bool conjugate = false;  // witness.a_sym && witness.b_sym
    SymmetricDiffWitness witness;
};

/// (n - A') \ B and B \ (n - A') with their n-symmetry flags; the proof's
/// Step 1 asserts both flags hold whenever A\B and B\A are n-symmetric.
struct Step1Sets {
    std::vector<int> conj_minus_b;  // (n - A') \ B
    std::vector<int> b_minus_conj;  // B \ (n - A')
    bool conj_minus_b_sym = false;
    bool b_minus_conj_sym = false;
};

/// S == {n - x : x in S}. Duplicates in the input are ignored.
inline bool is_n_symmetric(const std::vector<int>& s, int n) {
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t len = sorted.size();
    for (std::size_t i = 0; i < len; ++i)
        if (sorted[i] + sorted[len - 1 - i] != n) return false;
    return true;
}

namespace detail {

inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline void require_equal_maxima(const BetaSet& a, const BetaSet& b, const char* where) {
    if (a.max() != b.max())
        throw std::invalid_argument(std::string(where) + ": maxima differ (" +
                                    std::to_string(a.max()) + " vs " + std::to_string(b.max()) + ")");
}

inline void require_symmetric_differences(const BetaSet& a, const BetaSet& b, const char* where) {
    const int n = a.max();
    if (!is_n_symmetric(set_difference(a.elements(), b.elements()), n))
        throw std::invalid_argument(std::string(where) + ": A\\B is not n-symmetric");
    if (!is_n_symmetric(set_difference(b.elements(), a.elements()), n))
        throw std::invalid_argument(std::string(where) + ": B\\A is not n-symmetric");
}

}  // namespace detail

/// The criterion itself. Requires a != b, max(a) == max(b) and equal hook
/// multisets; each violation is rejected with its own message.
inline CriterionResult theorem_criterion(const BetaSet& a, const BetaSet& b) {
    if (a == b)
        throw std::invalid_argument("theorem_criterion: beta-sets must differ");
    detail::require_equal_maxima(a, b, "theorem_criterion");
    if (hooks_via_beta(a) != hooks_via_beta(b))
        throw std::invalid_argument("theorem_criterion: hook multisets differ");

    const int n = a.max();
    CriterionResult result;
    result.witness.n = n;
    result.witness.a_minus_b = detail::set_difference(a.elements(), b.elements());
    result.witness.b_minus_a = detail::set_difference(b.elements(), a.elements());
    result.witness.a_sym = is_n_symmetric(result.witness.a_minus_b, n);
    result.witness.b_sym = is_n_symmetric(result.witness.b_minus_a, n);
    result.conjugate = result.witness.a_sym && result.witness.b_sym;
    return result;
}

/// Oracle: lambda_A and lambda_B are conjugate iff B = n - A'.
inline bool is_conjugate_direct(const BetaSet& a, const BetaSet& b) {
    return conjugate_beta(a) == b;
}

/// Total wrapper: Identical and HooksDiffer are separated out before the
/// criterion applies. Equal hook multisets force equal maxima (the largest
/// hook is n), so theorem_criterion's preconditions hold on the last path.
inline ConjugacyVerdict decide_conjugacy(const BetaSet& a, const BetaSet& b) {
    if (a == b) return {ConjugacyStatus::Identical, std::nullopt};
    if (hooks_via_beta(a) != hooks_via_beta(b)) return {ConjugacyStatus::HooksDiffer, std::nullopt};
    CriterionResult result = theorem_criterion(a, b);
    return {result.conjugate ? ConjugacyStatus::Conjugate : ConjugacyStatus::NotConjugate,
            std::move(result.witness)};
}

/// The hook-equivalent but never conjugate family
/// (n+6, n+3, n+3, 2) and (n+5, n+5, n+2, 1, 1).
inline std::pair<Partition, Partition> herman_chung_pair(int n) {
    if (n < 0)
        throw std::out_of_range("herman_chung_pair: index must be >= 0, got " + std::to_string(n));
    return {Partition({n + 6, n + 3, n + 3, 2}), Partition({n + 5, n + 5, n + 2, 1, 1})};
}

/// Step 1 of the proof. Requires max(a) == max(b) and n-symmetric A\B, B\A.
inline Step1Sets step1_derived_sets(const BetaSet& a, const BetaSet& b) {
    detail::require_equal_maxima(a, b, "step1_derived_sets");
    detail::require_symmetric_differences(a, b, "step1_derived_sets");

    const int n = a.max();
    const std::vector<int> conj = conjugate_beta(a).elements();  // n - A'
    Step1Sets out;
    out.conj_minus_b = detail::set_difference(conj, b.elements());
    out.b_minus_conj = detail::set_difference(b.elements(), conj);
    out.conj_minus_b_sym = is_n_symmetric(out.conj_minus_b, n);
    out.b_minus_conj_sym = is_n_symmetric(out.b_minus_conj, n);
    return out;
}

/// Step 2 of the proof: the difference of hook multiplicities at k equals
///   (C + n-A')_{n+k} - (B + C)_{n+k} - (D + n-A')_{n+k} + (D + B)_{n+k}
/// with C = A\B, D = B\A coerced to multiplicity-1 multisets. Returns the
/// left side minus the right side, which is zero whenever the preconditions
/// (equal maxima, n-symmetric C and D) hold. k must lie in 1..n.
inline long long proof_identity_residual(const BetaSet& a, const BetaSet& b, int k) {
    detail::require_equal_maxima(a, b, "proof_identity_residual");
    detail::require_symmetric_differences(a, b, "proof_identity_residual");
    const int n = a.max();
    if (k < 1 || k > n)
        throw std::out_of_range("proof_identity_residual: k = " + std::to_string(k) +
                                " outside 1.." + std::to_string(n));

    const long long lhs = hooks_direct(partition_from_beta(a)).multiplicity(k) -
                          hooks_direct(partition_from_beta(b)).multiplicity(k);

    const IntMultiset c(detail::set_difference(a.elements(), b.elements()));
    const IntMultiset d(detail::set_difference(b.elements(), a.elements()));
    const IntMultiset bset(b.elements());
    const IntMultiset conj(conjugate_beta(a).elements());  // n - A'
    const long long rhs = msum(c, conj).multiplicity(n + k) - msum(bset, c).multiplicity(n + k) -
                          msum(d, conj).multiplicity(n + k) + msum(d, bset).multiplicity(n + k);

    return lhs - rhs;
}

}  // namespace hookset
