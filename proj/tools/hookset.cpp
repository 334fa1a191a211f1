#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "hookset/hookset.hpp"
#include "hookset/json_io.hpp"

/*
 * hookset -- hook multisets, beta-sets and the conjugacy criterion.
 *
 * Exit codes: 0 success (criterion: Conjugate/Identical; search: no
 * mismatches), 1 negative result (NotConjugate, mismatches, nonzero
 * residual), 2 HooksDiffer, 3 invalid input.
 */

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitHooksDiffer = 2;
constexpr int kExitBadInput = 3;

using nlohmann::json;

long long parse_integer_arg(const std::string& text, const std::string& what) {
    long long value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument(what + ": '" + text + "' is not an integer");
    return value;
}

std::vector<int> reflect(const std::vector<int>& s, int n) {
    std::vector<int> out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(n - *it);
    return out;
}

int resolve_threads(int requested) {
    if (requested < 0) throw std::invalid_argument("threads: must be >= 0");
    int threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    if (const char* env = std::getenv("HOOKSET_THREADS")) {
        const std::string text(env);
        long long cap = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc{} && end == text.data() + text.size() && cap >= 1)
            threads = std::min<long long>(threads, cap);
    }
    return threads;
}

int cmd_hooks(const std::string& text, bool as_json) {
    const hookset::Partition p = hookset::parse_partition(text);
    const hookset::HookMultiset hooks = hookset::hooks_direct(p);
    if (as_json) {
        json doc{{"partition", p}, {"hooks", hooks}};
        doc["beta_set"] = p.empty() ? json(nullptr) : json(hookset::beta_set(p));
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    for (const auto& line : hookset::render_hook_diagram(p).lines) std::cout << line << '\n';
    std::cout << "hooks: " << hooks.to_string() << '\n';
    return 0;
}

int cmd_beta(const std::string& text, bool inverse, bool as_json) {
    if (inverse) {
        const hookset::BetaSet b = hookset::parse_beta_set(text);
        const hookset::Partition p = hookset::partition_from_beta(b);
        if (as_json)
            std::cout << json{{"beta_set", b}, {"partition", p}}.dump(2) << '\n';
        else
            std::cout << hookset::to_text(p) << '\n';
        return 0;
    }
    const hookset::Partition p = hookset::parse_partition(text);
    const hookset::BetaSet b = hookset::beta_set(p);
    if (as_json)
        std::cout << json{{"partition", p}, {"beta_set", b}}.dump(2) << '\n';
    else
        std::cout << hookset::to_text(b) << '\n';
    return 0;
}

int cmd_conjugate(const std::string& text, bool as_json) {
    const hookset::Partition p = hookset::parse_partition(text);
    const hookset::Partition c = hookset::conjugate(p);
    if (as_json)
        std::cout << json{{"partition", p}, {"conjugate", c}}.dump(2) << '\n';
    else
        std::cout << hookset::to_text(c) << '\n';
    return 0;
}

void print_witness_line(const char* label, const std::vector<int>& s, int n, bool sym) {
    std::cout << label << " = " << hookset::set_text(s) << "  reflection "
              << hookset::set_text(reflect(s, n)) << "  " << n << "-symmetric: "
              << (sym ? "yes" : "no") << '\n';
}

int cmd_criterion(const std::string& a_text, const std::string& b_text, bool as_json) {
    const hookset::BetaSet a = hookset::parse_beta_set(a_text);
    const hookset::BetaSet b = hookset::parse_beta_set(b_text);
    const hookset::ConjugacyVerdict verdict = hookset::decide_conjugacy(a, b);

    if (as_json) {
        std::cout << json{{"a", a}, {"b", b}, {"verdict", verdict}}.dump(2) << '\n';
    } else {
        std::cout << "A = " << hookset::to_text(a)
                  << "  (lambda_A = " << hookset::to_text(hookset::partition_from_beta(a)) << ")\n";
        std::cout << "B = " << hookset::to_text(b)
                  << "  (lambda_B = " << hookset::to_text(hookset::partition_from_beta(b)) << ")\n";
        std::cout << "verdict: " << hookset::to_string(verdict.status) << '\n';
        if (verdict.witness) {
            const auto& w = *verdict.witness;
            print_witness_line("A\\B", w.a_minus_b, w.n, w.a_sym);
            print_witness_line("B\\A", w.b_minus_a, w.n, w.b_sym);
        } else if (verdict.status == hookset::ConjugacyStatus::HooksDiffer) {
            std::cout << "H(lambda_A) = " << hookset::hooks_via_beta(a).to_string() << '\n';
            std::cout << "H(lambda_B) = " << hookset::hooks_via_beta(b).to_string() << '\n';
        }
    }

    switch (verdict.status) {
        case hookset::ConjugacyStatus::NotConjugate: return kExitNegative;
        case hookset::ConjugacyStatus::HooksDiffer: return kExitHooksDiffer;
        default: return 0;
    }
}

int cmd_herman_chung(const std::string& n_text, bool as_json) {
    const long long n = parse_integer_arg(n_text, "herman-chung");
    if (n < 0) throw std::out_of_range("herman-chung: index must be >= 0");
    if (n > 1000000) throw std::out_of_range("herman-chung: index too large");
    const auto [lambda, mu] = hookset::herman_chung_pair(static_cast<int>(n));
    const hookset::HookMultiset hl = hookset::hooks_direct(lambda);
    const hookset::HookMultiset hm = hookset::hooks_direct(mu);
    const bool equal_hooks = hl == hm;
    const bool conj = hookset::is_conjugate_direct(hookset::beta_set(lambda), hookset::beta_set(mu));

    if (as_json) {
        json doc{{"n", n},          {"lambda", lambda},          {"mu", mu},
                 {"hooks", hl},     {"equal_hooks", equal_hooks}, {"conjugate", conj}};
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    std::cout << "lambda = " << hookset::to_text(lambda) << '\n';
    std::cout << "mu     = " << hookset::to_text(mu) << '\n';
    if (equal_hooks) {
        std::cout << "hooks  = " << hl.to_string() << '\n';
    } else {
        std::cout << "hooks(lambda) = " << hl.to_string() << '\n';
        std::cout << "hooks(mu)     = " << hm.to_string() << '\n';
    }
    std::cout << "equal hook multisets: " << (equal_hooks ? "yes" : "no") << '\n';
    std::cout << "conjugate: " << (conj ? "yes" : "no") << '\n';
    return 0;
}

int cmd_search(const std::string& bound_text, bool pairs, int threads_requested, bool as_json) {
    const long long bound = parse_integer_arg(bound_text, "search");
    if (bound < 1 || bound > 32) throw std::out_of_range("search: bound must be in 1..32");
    const int n_max = static_cast<int>(bound);
    const int threads = resolve_threads(threads_requested);

    if (pairs) {
        for (int n = 1; n <= n_max; ++n) {
            for (const auto& pair : hookset::find_hook_equivalent_pairs(n)) {
                if (as_json)
                    std::cout << json{{"n", n},
                                      {"a", pair.a},
                                      {"b", pair.b},
                                      {"conjugate", pair.conjugate}}
                                     .dump()
                              << '\n';
                else
                    std::cout << (pair.conjugate ? "conjugate     " : "non-conjugate ")
                              << hookset::to_text(pair.a) << ' ' << hookset::to_text(pair.b) << '\n';
            }
        }
    }

    const hookset::SearchReport report = hookset::validate_theorem(n_max, threads);
    std::cout << json(report).dump(2) << '\n';
    return report.mismatches.empty() ? 0 : kExitNegative;
}

int cmd_identity_check(const std::string& a_text, const std::string& b_text, int k_option,
                       bool as_json) {
    const hookset::BetaSet a = hookset::parse_beta_set(a_text);
    const hookset::BetaSet b = hookset::parse_beta_set(b_text);
    const int n = a.max();

    std::vector<int> ks;
    if (k_option != 0)
        ks.push_back(k_option);
    else
        for (int k = 1; k <= n; ++k) ks.push_back(k);

    std::vector<long long> residuals;
    residuals.reserve(ks.size());
    for (int k : ks) residuals.push_back(hookset::proof_identity_residual(a, b, k));
    const bool all_zero = std::all_of(residuals.begin(), residuals.end(),
                                      [](long long r) { return r == 0; });

    if (as_json) {
        json doc{{"a", a}, {"b", b}, {"n", n}, {"residuals", residuals}, {"all_zero", all_zero}};
        if (k_option != 0) doc["k"] = k_option;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "n = " << n << '\n';
        for (std::size_t i = 0; i < ks.size(); ++i)
            std::cout << "k=" << ks[i] << ": residual " << residuals[i] << '\n';
        std::cout << "all residuals zero: " << (all_zero ? "yes" : "no") << '\n';
    }
    return all_zero ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hook multisets, beta-sets and the partition conjugacy criterion"};
    app.require_subcommand(1);

    std::string partition_text, beta_a, beta_b, count_text;
    bool as_json = false, inverse = false, pairs = false;
    int threads = 1, k_option = 0;

    auto* hooks_cmd = app.add_subcommand("hooks", "hook-length diagram and hook multiset");
    hooks_cmd->add_option("partition", partition_text, "partition, e.g. 4,2,2")->required();
    hooks_cmd->add_flag("--json", as_json, "JSON output");

    auto* beta_cmd = app.add_subcommand("beta", "beta-set of a partition (or the inverse map)");
    beta_cmd->add_option("input", partition_text, "partition, e.g. 4,2,2 (beta-set with --inverse)")
        ->required();
    beta_cmd->add_flag("--inverse", inverse, "treat input as a beta-set, print its partition");
    beta_cmd->add_flag("--json", as_json, "JSON output");

    auto* conj_cmd = app.add_subcommand("conjugate", "conjugate partition");
    conj_cmd->add_option("partition", partition_text, "partition, e.g. 4,2,2")->required();
    conj_cmd->add_flag("--json", as_json, "JSON output");

    auto* crit_cmd = app.add_subcommand("criterion", "decide conjugacy of two beta-sets");
    crit_cmd->add_option("A", beta_a, "first beta-set, e.g. {2,3,6}")->required();
    crit_cmd->add_option("B", beta_b, "second beta-set")->required();
    crit_cmd->add_flag("--json", as_json, "JSON output");

    auto* hc_cmd = app.add_subcommand("herman-chung", "the hook-equivalent non-conjugate family");
    hc_cmd->add_option("n", count_text, "family index, n >= 0")->required();
    hc_cmd->add_flag("--json", as_json, "JSON output");

    auto* search_cmd = app.add_subcommand("search", "exhaustive criterion validation up to a bound");
    search_cmd->add_option("n_max", count_text, "largest maximum element to scan")->required();
    search_cmd->add_flag("--pairs", pairs, "also list every hook-equivalent pair");
    search_cmd->add_option("--threads", threads, "worker threads (0 = hardware)")
        ->default_val(1);
    search_cmd->add_flag("--json", as_json, "JSON output for the pair listing");

    auto* ident_cmd = app.add_subcommand("identity-check", "multiplicity identity residuals");
    ident_cmd->add_option("A", beta_a, "first beta-set")->required();
    ident_cmd->add_option("B", beta_b, "second beta-set")->required();
    ident_cmd->add_option("--k", k_option, "check a single k instead of all of 1..n");
    ident_cmd->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (hooks_cmd->parsed()) return cmd_hooks(partition_text, as_json);
        if (beta_cmd->parsed()) return cmd_beta(partition_text, inverse, as_json);
        if (conj_cmd->parsed()) return cmd_conjugate(partition_text, as_json);
        if (crit_cmd->parsed()) return cmd_criterion(beta_a, beta_b, as_json);
        if (hc_cmd->parsed()) return cmd_herman_chung(count_text, as_json);
        if (search_cmd->parsed()) return cmd_search(count_text, pairs, threads, as_json);
        if (ident_cmd->parsed()) return cmd_identity_check(beta_a, beta_b, k_option, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return 0;
}
