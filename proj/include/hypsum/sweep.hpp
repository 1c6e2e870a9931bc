/**
 * @file sweep.hpp
 * @brief Verification sweep drivers: deterministic grid plus seeded random
 *        parameter traversals comparing closed forms against the series oracle.
 */
#pragma once

#include "hypsum/catalog.hpp"
#include "hypsum/report.hpp"

#include <string>
#include <vector>

namespace hypsum {

// Suites accepted by run_sweep, in the order "all" executes them.
const std::vector<std::string>& sweep_suite_names();

// Runs one suite ("theorem1", "theorem2", "altforms", "kummer2", "kummer3",
// "transform", "confluent", "samoletov") or "all".
SuiteReport run_sweep(const std::string& suite, const SweepConfig& cfg);

// Catalog audit as a report.
SuiteReport run_catalog_report(long n_max, const std::vector<Rational>& a_samples);
SuiteReport catalog_report_from_audit(long n_max, const std::vector<Rational>& a_samples,
                                      const std::vector<CatalogAuditEntry>& audit);

// True when the audit shows exactly the expected findings: 3.23 discrepant,
// 3.25 restricted as printed but verified once j := 2 is bound, the rest
// verified.
bool catalog_matches_expected_findings(const std::vector<CatalogAuditEntry>& audit);

} // namespace hypsum
