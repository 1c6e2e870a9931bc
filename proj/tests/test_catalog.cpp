#include "hypsum/catalog.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/series_oracle.hpp"
#include "hypsum/sweep.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hypsum;

TEST_CASE("catalog holds every displayed instance exactly once") {
    std::set<std::string> ids;
    std::map<CatalogFamily, int> per_family;
    for (const auto& e : catalog_entries()) {
        CHECK(ids.insert(e.id).second);
        ++per_family[e.family];
    }
    // ids 3.1-3.26 all present; the table carries one extra id because the
    // shared first display splits into two instances
    for (int i = 1; i <= 26; ++i)
        CHECK(ids.count("3." + std::to_string(i)) == 1);
    CHECK(ids.size() == 27);
    CHECK(per_family[CatalogFamily::T1Even] == 11);
    CHECK(per_family[CatalogFamily::T1Odd] == 11);
    CHECK(per_family[CatalogFamily::T2Plus] == 3);
    CHECK(per_family[CatalogFamily::T2Minus] == 2);
}

TEST_CASE("entry evaluation examples") {
    CHECK(catalog_entry_eval("3.6", 1, Rational(3)) == Rational(1, 5));
    CHECK(catalog_entry_eval("3.21", 1, Rational(2)) == Rational(3));
    CHECK(catalog_entry_eval("3.12", 0, Rational(1)) == Rational(1, 3));
    CHECK(catalog_entry_eval("3.1", 1, Rational(1)) == Rational(1, 3));
    CHECK(catalog_entry_eval("3.11", 9, Rational(-14, 5)) == Rational(0));
    CHECK_THROWS_AS(catalog_entry_eval("9.9", 1, Rational(1)), EvalError);
    CHECK_THROWS_AS(catalog_entry_eval("3.25", 1, Rational(1)), EvalError);
}

TEST_CASE("shared display: 3.1 and 3.2 carry one right-hand side") {
    for (long n = 1; n <= 6; ++n) {
        Rational a(7, 3);
        CHECK(catalog_entry_eval("3.1", n, a) == catalog_entry_eval("3.2", n, a));
    }
    // distinct series instances underneath
    const auto& entries = catalog_entries();
    CHECK(catalog_oracle_value(entries[0], 1, Rational(1)) ==
          catalog_oracle_value(entries[1], 1, Rational(1)));
    CHECK(entries[0].j == 0);
    CHECK(entries[1].j == 1);
}

TEST_CASE("printed 3.23 disagrees with the series; the two-term form agrees") {
    CHECK(catalog_entry_eval("3.23", 1, Rational(1)) == Rational(8, 3));
    Rational oracle = hyp_terminating_sum(
        {{Rational(-1), Rational(1)}, {Rational(-3)}, Rational(2), Int(1)});
    CHECK(oracle == Rational(5, 3));
    CHECK(f21_m2n_minus(1, Rational(1), 1) == oracle);
}

TEST_CASE("3.5 literal second correction term fails the series at n >= 2") {
    // as displayed, the j=4 bracket reads (1 + 8n/(a+2) + 16n(n-1)/((a+2)(a+3)));
    // the 16 must be 8 for the series to match beyond n = 1
    auto literal_35 = [](long n, const Rational& a) {
        Rational bracket = Rational(1) + Rational(8 * n) / (a + Rational(2)) +
                           Rational(16 * n * (n - 1)) /
                               ((a + Rational(2)) * (a + Rational(3)));
        return pochhammer_int(Rational(1, 2), Int(n)) /
               pochhammer_int(a + Rational(5, 2), Int(n)) * bracket;
    };
    Rational series = hyp_terminating_sum(
        {{Rational(-4), Rational(2)}, {Rational(8)}, Rational(2), Int(4)});
    CHECK(series == Rational(29, 165));
    CHECK(literal_35(2, Rational(2)) == Rational(1, 5));
    CHECK(literal_35(2, Rational(2)) != series);
    CHECK(literal_35(1, Rational(2)) == catalog_entry_eval("3.5", 1, Rational(2)));
    CHECK(catalog_entry_eval("3.5", 2, Rational(2)) == series);
}

TEST_CASE("audit statuses are recomputed as expected") {
    auto audit = catalog_audit(12, default_catalog_samples());
    REQUIRE(audit.size() == catalog_entries().size());
    int discrepant = 0, restricted = 0;
    for (const auto& row : audit) {
        if (row.status == AuditStatus::Discrepant) {
            ++discrepant;
            CHECK(row.id == "3.23");
        }
        if (row.status == AuditStatus::Restricted) {
            ++restricted;
            CHECK(row.id == "3.25");
            REQUIRE(row.substituted_status.has_value());
            CHECK(*row.substituted_status == AuditStatus::Verified);
        }
        CHECK(row.points_compared + row.points_skipped > 0);
    }
    CHECK(discrepant == 1);
    CHECK(restricted == 1);
    CHECK(catalog_matches_expected_findings(audit));
}

TEST_CASE("audit flags unexpected findings") {
    // with a = 2 alone, the odd j=5 lower entry has no admissible points
    auto audit = catalog_audit(3, {Rational(2)});
    CHECK_FALSE(catalog_matches_expected_findings(audit));
}

TEST_CASE("audit report is deterministic") {
    auto r1 = run_catalog_report(6, default_catalog_samples());
    auto r2 = run_catalog_report(6, default_catalog_samples());
    CHECK(r1.to_json_string() == r2.to_json_string());
    CHECK(run_catalog_report(6, {Rational(2), Rational(3)}).to_json_string() !=
          r1.to_json_string());
}

TEST_CASE("audit argument validation") {
    CHECK_THROWS_AS(catalog_audit(1, default_catalog_samples()), std::invalid_argument);
    CHECK_THROWS_AS(catalog_audit(5, {}), std::invalid_argument);
}
