/**
 * @file hypsum.cpp
 * @brief Command-line front end: evaluate identities at a point, run
 *        verification sweeps, audit the special-case catalog, expand the
 *        confluent product series.
 *
 * Exit codes: 0 pass, 1 identity failure, 2 pole/excluded domain,
 * 3 skip-budget overflow, 64 usage error.
 */

#include "hypsum/catalog.hpp"
#include "hypsum/closed_forms.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/report.hpp"
#include "hypsum/series_oracle.hpp"
#include "hypsum/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace hypsum;

constexpr int kExitPass = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitPole = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitUsage);
}

class Params {
public:
    explicit Params(const std::vector<std::string>& tokens) {
        for (const auto& tok : tokens) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                usage_error("expected key=value, got '" + tok + "'");
            map_[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }

    Rational rational(const std::string& key) const {
        auto r = parse_rational(raw(key));
        if (!r) usage_error("parameter " + key + " is not a rational: " + raw(key));
        return *r;
    }

    long integer(const std::string& key) const {
        Rational r = rational(key);
        if (!r.is_integer()) usage_error("parameter " + key + " must be an integer");
        return static_cast<long>(r.to_integer().get_si());
    }

    long nonnegative(const std::string& key) const {
        long v = integer(key);
        if (v < 0) usage_error("parameter " + key + " must be nonnegative");
        return v;
    }

    SignVariant sign(const std::string& key) const {
        const std::string& s = raw(key);
        if (s == "+" || s == "upper") return SignVariant::Upper;
        if (s == "-" || s == "lower") return SignVariant::Lower;
        usage_error("parameter " + key + " must be + or -");
    }

    std::vector<Rational> rational_list(const std::string& key) const {
        std::vector<Rational> out;
        std::string s = raw(key);
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string item =
                s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto r = parse_rational(item);
            if (!r) usage_error("parameter " + key + " has a bad element: " + item);
            out.push_back(*r);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }

    bool has(const std::string& key) const { return map_.count(key) != 0; }

    std::optional<long> optional_integer(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return integer(key);
    }

private:
    const std::string& raw(const std::string& key) const {
        auto it = map_.find(key);
        if (it == map_.end()) usage_error("missing parameter " + key);
        return it->second;
    }

    std::map<std::string, std::string> map_;
};

int print_normal_form(const NormalForm& nf, const std::string& what) {
    if (nf.is_pole()) {
        std::cerr << "error: " << what << " has a gamma pole at this point\n";
        return kExitPole;
    }
    std::cout << nf.str() << "\n";
    return kExitPass;
}

int cmd_eval(const std::string& identity, const Params& p) {
    try {
        if (identity == "t1-even") {
            std::cout << f21_2apj_even(p.nonnegative("n"), p.rational("a"),
                                       p.nonnegative("j"), p.sign("sign"))
                             .str()
                      << "\n";
        } else if (identity == "t1-odd") {
            std::cout << f21_2apj_odd(p.nonnegative("n"), p.rational("a"),
                                      p.nonnegative("j"), p.sign("sign"))
                             .str()
                      << "\n";
        } else if (identity == "t2-plus") {
            std::cout << f21_m2n_plus(p.nonnegative("n"), p.rational("a"),
                                      p.nonnegative("j"))
                             .str()
                      << "\n";
        } else if (identity == "t2-minus") {
            std::cout << f21_m2n_minus(p.nonnegative("n"), p.rational("a"),
                                       p.nonnegative("j"))
                             .str()
                      << "\n";
        } else if (identity == "alt-plus") {
            std::cout << f21_alt_plus(p.nonnegative("n"), p.rational("a"),
                                      p.nonnegative("j"))
                             .str()
                      << "\n";
        } else if (identity == "alt-minus") {
            std::cout << f21_alt_minus(p.nonnegative("n"), p.rational("a"),
                                       p.nonnegative("j"))
                             .str()
                      << "\n";
        } else if (identity == "k2gen") {
            return print_normal_form(kummer2_generalized(p.rational("alpha"),
                                                         p.rational("beta"),
                                                         p.nonnegative("j"), p.sign("sign")),
                                     "k2gen");
        } else if (identity == "k3gen") {
            return print_normal_form(kummer3_generalized(p.rational("alpha"),
                                                         p.rational("gamma"),
                                                         p.nonnegative("j"), p.sign("sign")),
                                     "k3gen");
        } else if (identity == "transform") {
            auto [lhs, rhs] =
                transform_2_to_half(p.nonnegative("n"), p.rational("beta"),
                                    p.rational("gamma"));
            std::cout << lhs.str() << " " << rhs.str() << "\n";
        } else if (identity == "samoletov") {
            long n = p.nonnegative("n");
            auto [s, h, f] = samoletov_check(n);
            std::cout << s.str() << " " << h.str() << " " << f.str() << "\n";
        } else if (identity == "f21-2a") {
            return print_normal_form(f21_2a_closed(p.nonnegative("n"), p.rational("a")),
                                     "f21-2a");
        } else if (identity == "confluent") {
            long order = p.optional_integer("order").value_or(40);
            if (order < 0) usage_error("order must be nonnegative");
            SeriesPoly s = confluent_expansion_coeffs(
                p.rational("a"), p.nonnegative("j"), p.sign("sign"),
                static_cast<std::size_t>(order));
            for (std::size_t k = 0; k < s.coefficients.size(); ++k)
                std::cout << (k ? " " : "") << s[k].str();
            std::cout << "\n";
        } else if (identity.rfind("catalog:", 0) == 0) {
            std::cout << catalog_entry_eval(identity.substr(8), p.nonnegative("n"),
                                            p.rational("a"))
                             .str()
                      << "\n";
        } else if (identity == "oracle") {
            HypSeriesSpec spec;
            spec.upper = p.rational_list("upper");
            spec.lower = p.rational_list("lower");
            spec.argument = p.rational("z");
            if (p.has("n")) {
                spec.terminate_at = Int(p.nonnegative("n"));
            } else {
                // smallest n >= 0 with -n among the upper parameters
                bool found = false;
                Int best;
                for (const auto& u : spec.upper) {
                    if (!u.is_nonpositive_integer()) continue;
                    Int cand = -u.to_integer();
                    if (!found || cand < best) { best = cand; found = true; }
                }
                if (!found)
                    usage_error("oracle: no nonpositive-integer upper parameter; "
                                "pass n=<terminate>");
                spec.terminate_at = best;
            }
            std::cout << hyp_terminating_sum(spec).str() << "\n";
        } else {
            usage_error("unknown identity: " + identity);
        }
    } catch (const EvalError& e) {
        switch (e.kind()) {
            case ErrorKind::Usage:
            case ErrorKind::UnknownEntry:
                usage_error(e.what());
            default:
                std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what()
                          << "\n";
                return kExitPole;
        }
    } catch (const std::invalid_argument& e) {
        usage_error(e.what());
    }
    return kExitPass;
}

void print_human_summary(const SuiteReport& rep) {
    for (const auto& row : rep.results) {
        std::cout << row.identity_id << " " << verdict_name(row.verdict);
        if (!row.detail.empty()) std::cout << " (" << row.detail << ")";
        std::cout << "\n";
    }
    std::cout << rep.suite << ": equal=" << rep.summary.equal
              << " unequal=" << rep.summary.unequal << " skipped=" << rep.summary.skipped
              << (rep.budget_exceeded ? " [skip budget exceeded]" : "") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of closed-form terminating 2F1 summations"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one identity at a parameter point");
    std::string identity;
    std::vector<std::string> eval_params;
    eval->add_option("identity", identity,
                     "t1-even|t1-odd|t2-plus|t2-minus|alt-plus|alt-minus|k2gen|k3gen|"
                     "transform|samoletov|f21-2a|confluent|catalog:<id>|oracle")
        ->required();
    eval->add_option("params", eval_params, "key=value parameters");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    verify->add_option("suite", suite, "theorem1|theorem2|altforms|kummer2|kummer3|transform|confluent|samoletov|all")
        ->required();
    long n_max = -1, j_max = -1, points = -1, samples = -1, order = -1;
    std::uint64_t seed = 7;
    std::string skip_budget = "1/20", a_list;
    bool as_json = false;
    verify->add_option("--n-max", n_max, "grid bound for n");
    verify->add_option("--j-max", j_max, "grid bound for j");
    verify->add_option("--points", points, "random points (transform suite)");
    verify->add_option("--samples", samples, "seeded draws per grid point");
    verify->add_option("--order", order, "series truncation order (confluent suite)");
    verify->add_option("--seed", seed, "PCG32 seed");
    verify->add_option("--skip-budget", skip_budget, "allowed skip fraction as p/q");
    verify->add_option("--a", a_list, "explicit comma-separated parameter list");
    verify->add_flag("--json", as_json, "emit the JSON report on stdout");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "audit the special-case table");
    long cat_n_max = 25;
    std::string cat_a_list;
    bool cat_json = false;
    catalog->add_option("--n-max", cat_n_max, "audit n range upper bound");
    catalog->add_option("--a", cat_a_list, "explicit comma-separated a samples");
    catalog->add_flag("--json", cat_json, "emit the JSON report on stdout");

    // expand
    auto* expand = app.add_subcommand("expand", "print confluent product coefficients");
    std::vector<std::string> expand_params;
    long expand_order = 40;
    expand->add_option("params", expand_params, "a=<rat> j=<int> sign=<+|->");
    expand->add_option("--order", expand_order, "truncation order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    auto parse_a_list = [](const std::string& s) {
        std::vector<hypsum::Rational> out;
        std::size_t pos = 0;
        while (pos <= s.size() && !s.empty()) {
            std::size_t comma = s.find(',', pos);
            std::string item =
                s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto r = hypsum::parse_rational(item);
            if (!r) usage_error("bad rational in --a list: " + item);
            out.push_back(*r);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };

    if (eval->parsed()) return cmd_eval(identity, Params(eval_params));

    if (verify->parsed()) {
        hypsum::SweepConfig cfg;
        if (n_max >= 0) cfg.n_max = n_max;
        if (j_max >= 0) cfg.j_max = j_max;
        if (points >= 0) cfg.points = points;
        if (samples >= 0) cfg.samples = samples;
        if (order >= 0) cfg.order = static_cast<std::size_t>(order);
        cfg.seed = seed;
        auto budget = hypsum::parse_rational(skip_budget);
        if (!budget) usage_error("bad --skip-budget value: " + skip_budget);
        cfg.skip_budget = *budget;
        if (!a_list.empty()) cfg.a_explicit = parse_a_list(a_list);
        try {
            hypsum::SuiteReport rep = hypsum::run_sweep(suite, cfg);
            if (as_json) std::cout << rep.to_json_string();
            else print_human_summary(rep);
            return rep.exit_code();
        } catch (const hypsum::EvalError& e) {
            if (e.kind() == hypsum::ErrorKind::Usage) usage_error(e.what());
            std::cerr << "error: " << e.what() << "\n";
            return kExitPole;
        }
    }

    if (catalog->parsed()) {
        std::vector<hypsum::Rational> samples_list =
            cat_a_list.empty() ? hypsum::default_catalog_samples() : parse_a_list(cat_a_list);
        try {
            auto audit = hypsum::catalog_audit(cat_n_max, samples_list);
            hypsum::SuiteReport rep =
                hypsum::catalog_report_from_audit(cat_n_max, samples_list, audit);
            if (cat_json) std::cout << rep.to_json_string();
            else print_human_summary(rep);
            return hypsum::catalog_matches_expected_findings(audit) ? kExitPass
                                                                    : kExitUnequal;
        } catch (const std::invalid_argument& e) {
            usage_error(e.what());
        }
    }

    if (expand->parsed()) {
        if (expand_order < 0) usage_error("--order must be nonnegative");
        Params p(expand_params);
        try {
            hypsum::SeriesPoly s = hypsum::confluent_expansion_coeffs(
                p.rational("a"), p.nonnegative("j"), p.sign("sign"),
                static_cast<std::size_t>(expand_order));
            for (std::size_t k = 0; k < s.coefficients.size(); ++k)
                std::cout << (k ? " " : "") << s[k].str();
            std::cout << "\n";
        } catch (const hypsum::EvalError& e) {
            std::cerr << "error [" << hypsum::error_kind_name(e.kind()) << "]: " << e.what()
                      << "\n";
            return kExitPole;
        }
        return kExitPass;
    }

    return kExitUsage;
}
