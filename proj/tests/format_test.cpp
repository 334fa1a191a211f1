#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "hookset/format.hpp"
#include "hookset/json_io.hpp"
#include "test_support.hpp"

using hookset::BetaSet;
using hookset::Partition;
using nlohmann::json;

TEST_CASE("to_text writes the comma and brace forms", "[format]") {
    CHECK(hookset::to_text(Partition({4, 2, 2})) == "4,2,2");
    CHECK(hookset::to_text(Partition({7})) == "7");
    CHECK(hookset::to_text(Partition{}).empty());

    CHECK(hookset::to_text(BetaSet({6, 2, 3})) == "{2,3,6}");
    CHECK(hookset::to_text(BetaSet({1})) == "{1}");

    CHECK(hookset::set_text({}) == "{}");
    CHECK(hookset::set_text({1, 5}) == "{1,5}");
}

TEST_CASE("parse_partition accepts the comma form", "[format]") {
    CHECK(hookset::parse_partition("4,2,2") == Partition({4, 2, 2}));
    CHECK(hookset::parse_partition(" 4 , 2 ,\t2 ") == Partition({4, 2, 2}));
    CHECK(hookset::parse_partition("") == Partition{});
    CHECK(hookset::parse_partition("  ") == Partition{});

    CHECK_THROWS_AS(hookset::parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_partition("4,0"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_partition("4,,2"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_partition("4 2"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_partition("4,2,"), std::invalid_argument);
}

TEST_CASE("parse_beta_set accepts braces and any order", "[format]") {
    CHECK(hookset::parse_beta_set("{2,3,6}") == BetaSet({2, 3, 6}));
    CHECK(hookset::parse_beta_set("2,3,6") == BetaSet({2, 3, 6}));
    CHECK(hookset::parse_beta_set("{6,2,3}") == BetaSet({2, 3, 6}));
    CHECK(hookset::parse_beta_set("  { 2 , 3 , 6 }  ") == BetaSet({2, 3, 6}));
    CHECK(hookset::parse_beta_set("9") == BetaSet({9}));

    CHECK_THROWS_AS(hookset::parse_beta_set("{}"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_beta_set(""), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_beta_set("{2,3"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_beta_set("0,3"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_beta_set("{2,2,3}"), std::invalid_argument);
    CHECK_THROWS_AS(hookset::parse_beta_set("{2,x}"), std::invalid_argument);
}

TEST_CASE("render_hook_diagram lays hooks out row by row", "[format]") {
    const auto wide = hookset::render_hook_diagram(Partition({4, 2, 2}));
    CHECK(wide.lines == std::vector<std::string>{"6 5 2 1", "3 2", "2 1"});

    const auto tall = hookset::render_hook_diagram(Partition({3, 3, 1, 1}));
    CHECK(tall.lines == std::vector<std::string>{"6 3 2", "5 2 1", "2", "1"});

    CHECK(hookset::render_hook_diagram(Partition{}).lines.empty());
    CHECK(hookset::render_hook_diagram(Partition({1})).lines ==
          std::vector<std::string>{"1"});
}

TEST_CASE("rendered tokens align into fixed-width columns", "[format]") {
    const Partition p({7, 4, 4, 2});
    const auto rendered = hookset::render_hook_diagram(p);
    CHECK(rendered.lines.front() == "10 9  7  6  3  2  1");

    const auto grid = hookset::hook_grid(p);
    REQUIRE(rendered.lines.size() == grid.rows.size());
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        std::istringstream in(rendered.lines[r]);
        std::vector<int> tokens;
        for (int value; in >> value;) tokens.push_back(value);
        CHECK(tokens == grid.rows[r]);
        CHECK(rendered.lines[r].back() != ' ');
    }
}

TEST_CASE("partitions and beta-sets round trip through json", "[format]") {
    const Partition p({4, 2, 2});
    CHECK(json(p).dump() == "[4,2,2]");
    CHECK(json(p).get<Partition>() == p);
    CHECK(json(Partition{}).get<Partition>() == Partition{});

    const BetaSet b({2, 3, 6});
    CHECK(json(b).dump() == "[2,3,6]");
    CHECK(json(b).get<BetaSet>() == b);

    CHECK_THROWS_AS(json::parse("[2,3]").get<Partition>(), std::invalid_argument);
    CHECK_THROWS_AS(json::parse("[]").get<BetaSet>(), std::invalid_argument);
}

TEST_CASE("multisets serialize as their ascending expansion", "[format]") {
    const hookset::IntMultiset m{1, 1, 2, 2, 2, 3, 5, 6};
    CHECK(json(m).dump() == "[1,1,2,2,2,3,5,6]");
    CHECK(json(m).dump() == m.to_string());
    CHECK(json(m).get<hookset::IntMultiset>() == m);
    CHECK(json(hookset::IntMultiset{}).dump() == "[]");
}

TEST_CASE("verdicts round trip through json", "[format]") {
    for (const auto status :
         {hookset::ConjugacyStatus::Identical, hookset::ConjugacyStatus::HooksDiffer,
          hookset::ConjugacyStatus::Conjugate, hookset::ConjugacyStatus::NotConjugate})
        CHECK(hookset::status_from_string(hookset::to_string(status)) == status);
    CHECK_THROWS_AS(hookset::status_from_string("Sideways"), std::invalid_argument);

    const auto verdict = hookset::decide_conjugacy(BetaSet({2, 3, 6}), BetaSet({1, 2, 5, 6}));
    const json j(verdict);
    CHECK(j.at("status") == "Conjugate");
    CHECK(j.at("witness").at("n") == 6);
    CHECK(j.at("witness").at("a_minus_b") == json::array({3}));
    CHECK(j.at("witness").at("b_minus_a") == json::array({1, 5}));
    CHECK(j.get<hookset::ConjugacyVerdict>() == verdict);

    const auto identical = hookset::decide_conjugacy(BetaSet({1}), BetaSet({1}));
    const json ji(identical);
    CHECK(ji.at("status") == "Identical");
    CHECK(ji.at("witness").is_null());
    CHECK(ji.get<hookset::ConjugacyVerdict>() == identical);
}

TEST_CASE("search reports round trip through json", "[format]") {
    hookset::SearchReport report;
    report.n_max = 9;
    report.class_count = 270;
    report.conjugate_pairs = 240;
    report.non_conjugate_pairs = 4;
    report.mismatches.push_back(
        {9, {2, 4, 5, 9}, {1, 2, 4, 8, 9}, false, false, "criterion_vs_direct"});
    report.elapsed_ms = 12.5;

    const json j(report);
    CHECK(j.at("n_max") == 9);
    CHECK(j.at("class_count") == 270);
    CHECK(j.at("pairs").at("conjugate") == 240);
    CHECK(j.at("pairs").at("non_conjugate") == 4);
    CHECK(j.at("elapsed_ms") == 12.5);
    REQUIRE(j.at("mismatches").size() == 1);
    CHECK(j.at("mismatches").front().at("check") == "criterion_vs_direct");
    CHECK(j.at("mismatches").front().at("a") == json::array({2, 4, 5, 9}));

    const auto back = j.get<hookset::SearchReport>();
    CHECK(back.n_max == report.n_max);
    CHECK(back.class_count == report.class_count);
    CHECK(back.conjugate_pairs == report.conjugate_pairs);
    CHECK(back.non_conjugate_pairs == report.non_conjugate_pairs);
    CHECK(back.mismatches == report.mismatches);
    CHECK(back.elapsed_ms == report.elapsed_ms);

    const auto live = hookset::validate_theorem(6);
    const json jl(live);
    CHECK(jl.at("mismatches").is_array());
    CHECK(jl.at("mismatches").empty());
    CHECK(jl.at("pairs").at("conjugate") == 28);
}
