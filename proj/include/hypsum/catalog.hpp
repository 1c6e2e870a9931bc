/**
 * @file catalog.hpp
 * @brief The special-case summation table: every displayed closed form for
 *        j <= 5, transcribed as printed and audited against the series oracle.
 *
 * Printed forms are kept verbatim, misprints included; the audit surfaces
 * disagreements instead of correcting them. Statuses are recomputed on every
 * audit, never hard-coded.
 */
#pragma once

#include "hypsum/closed_forms.hpp"
#include "hypsum/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypsum {

enum class CatalogFamily { T1Even, T1Odd, T2Plus, T2Minus };

enum class AuditStatus { Verified, Discrepant, Restricted };

const char* family_name(CatalogFamily f);
const char* audit_status_name(AuditStatus s);

struct CatalogEntry {
    std::string id;          // equation tag, e.g. "3.7"
    CatalogFamily family;
    long j;
    SignVariant sign;        // for the T1 families; T2Plus/T2Minus encode theirs
    long n_min;              // smallest n the printed form admits
    bool stray_symbol;       // printed form contains an unbound symbol
    std::function<Rational(long, const Rational&)> printed;
    // Printed form with the stray symbol bound (j := 2); only for 3.25.
    std::function<Rational(long, const Rational&)> substituted;
    // Transcription note carried into every audit report for this entry.
    std::string note;
};

struct CatalogAuditEntry {
    std::string id;
    AuditStatus status;
    // For entries re-audited after binding a stray symbol.
    std::optional<AuditStatus> substituted_status;
    long points_compared = 0;
    long points_skipped = 0;
    // First mismatching point, or the restriction reason.
    std::string detail;
};

// The full entry table, one entry per 2F1 instance.
const std::vector<CatalogEntry>& catalog_entries();

// Exact value of the printed right-hand side, transcribed literally.
// Throws UNKNOWN_ENTRY, PARAMETER_POLE, or RESTRICTED_ENTRY (stray symbol).
Rational catalog_entry_eval(const std::string& id, long n, const Rational& a);

// Left-hand side of an entry via the series oracle.
Rational catalog_oracle_value(const CatalogEntry& entry, long n, const Rational& a);

// Audits every entry over n in [max(n_min,1), n_max] and the given a samples.
// Points where either side is undefined are skipped and counted.
std::vector<CatalogAuditEntry> catalog_audit(long n_max,
                                             const std::vector<Rational>& a_samples);

// The audit grid used when the caller does not supply samples.
const std::vector<Rational>& default_catalog_samples();

} // namespace hypsum
