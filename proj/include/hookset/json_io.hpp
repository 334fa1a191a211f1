#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "hookset/criterion.hpp"
#include "hookset/multiset.hpp"
#include "hookset/partition.hpp"
#include "hookset/search.hpp"

/*
 * JSON bindings (nlohmann). Multisets and beta-sets serialize as ascending
 * arrays with repetition, so the multiset form coincides with the canonical
 * text serialization. Every document parses back to an equal value.
 */

namespace hookset {

inline void to_json(nlohmann::json& j, const IntMultiset& m) { j = m.values(); }

inline void from_json(const nlohmann::json& j, IntMultiset& m) {
    m = IntMultiset(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

inline void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

inline std::string to_string(ConjugacyStatus status) {
    switch (status) {
        case ConjugacyStatus::Identical: return "Identical";
        case ConjugacyStatus::HooksDiffer: return "HooksDiffer";
        case ConjugacyStatus::Conjugate: return "Conjugate";
        case ConjugacyStatus::NotConjugate: return "NotConjugate";
    }
    throw std::logic_error("unknown ConjugacyStatus");
}

inline ConjugacyStatus status_from_string(const std::string& s) {
    if (s == "Identical") return ConjugacyStatus::Identical;
    if (s == "HooksDiffer") return ConjugacyStatus::HooksDiffer;
    if (s == "Conjugate") return ConjugacyStatus::Conjugate;
    if (s == "NotConjugate") return ConjugacyStatus::NotConjugate;
    throw std::invalid_argument("unknown conjugacy status '" + s + "'");
}

inline void to_json(nlohmann::json& j, const SymmetricDiffWitness& w) {
    j = {{"n", w.n},
         {"a_minus_b", w.a_minus_b},
         {"b_minus_a", w.b_minus_a},
         {"a_sym", w.a_sym},
         {"b_sym", w.b_sym}};
}

inline void from_json(const nlohmann::json& j, SymmetricDiffWitness& w) {
    j.at("n").get_to(w.n);
    j.at("a_minus_b").get_to(w.a_minus_b);
    j.at("b_minus_a").get_to(w.b_minus_a);
    j.at("a_sym").get_to(w.a_sym);
    j.at("b_sym").get_to(w.b_sym);
}

inline void to_json(nlohmann::json& j, const ConjugacyVerdict& v) {
    j = {{"status", to_string(v.status)}};
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, ConjugacyVerdict& v) {
    v.status = status_from_string(j.at("status").get<std::string>());
    const auto& w = j.at("witness");
    v.witness = w.is_null() ? std::nullopt
                            : std::optional<SymmetricDiffWitness>(w.get<SymmetricDiffWitness>());
}

inline void to_json(nlohmann::json& j, const TheoremMismatch& m) {
    j = {{"n", m.n},
         {"a", m.a},
         {"b", m.b},
         {"criterion", m.criterion},
         {"direct", m.direct},
         {"check", m.check}};
}

inline void from_json(const nlohmann::json& j, TheoremMismatch& m) {
    j.at("n").get_to(m.n);
    j.at("a").get_to(m.a);
    j.at("b").get_to(m.b);
    j.at("criterion").get_to(m.criterion);
    j.at("direct").get_to(m.direct);
    j.at("check").get_to(m.check);
}

inline void to_json(nlohmann::json& j, const SearchReport& r) {
    j = {{"n_max", r.n_max},
         {"class_count", r.class_count},
         {"pairs", {{"conjugate", r.conjugate_pairs}, {"non_conjugate", r.non_conjugate_pairs}}},
         {"mismatches", r.mismatches},
         {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const nlohmann::json& j, SearchReport& r) {
    j.at("n_max").get_to(r.n_max);
    j.at("class_count").get_to(r.class_count);
    j.at("pairs").at("conjugate").get_to(r.conjugate_pairs);
    j.at("pairs").at("non_conjugate").get_to(r.non_conjugate_pairs);
    j.at("mismatches").get_to(r.mismatches);
    j.at("elapsed_ms").get_to(r.elapsed_ms);
}

}  // namespace hookset

namespace nlohmann {

template <>
struct adl_serializer<hookset::BetaSet> {
    static void to_json(json& j, const hookset::BetaSet& b) { j = b.elements(); }
    static hookset::BetaSet from_json(const json& j) {
        return hookset::BetaSet(j.get<std::vector<int>>());
    }
};

}  // namespace nlohmann
