/**
 * @file report.hpp
 * @brief Verification reports, sweep configuration, JSON serialization.
 *
 * Report layout (schemas/verify-report.v1.schema.json):
 *   { "suite":..., "config":{...}, "results":[...],
 *     "summary": {"equal":N, "unequal":N, "skipped":N} }
 * Rationals serialize as "p/q" strings; identical configuration yields
 * byte-identical output.
 */
#pragma once

#include "hypsum/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypsum {

enum class Verdict { Equal, Unequal, SkippedPole, Restricted };

const char* verdict_name(Verdict v);

struct VerificationReport {
    std::string identity_id;
    // Ordered symbol -> value pairs; values print as bare integers or "p/q".
    std::vector<std::pair<std::string, std::string>> parameter_point;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::Equal;
    std::string detail;

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);
};

struct SweepConfig {
    std::optional<long> n_max;
    std::optional<long> j_max;
    std::optional<long> points;        // transform suite
    std::optional<std::size_t> order;  // confluent truncation order
    std::optional<long> samples;       // seeded parameter draws per grid point
    std::uint64_t seed = 7;
    Rational skip_budget{1, 20};
    std::vector<Rational> a_explicit;  // overrides seeded sampling when nonempty

    long n_max_or(long d) const { return n_max.value_or(d); }
    long j_max_or(long d) const { return j_max.value_or(d); }
    long points_or(long d) const { return points.value_or(d); }
    std::size_t order_or(std::size_t d) const { return order.value_or(d); }
    long samples_or(long d) const { return samples.value_or(d); }
};

struct SweepSummary {
    long equal = 0;
    long unequal = 0;
    long skipped = 0;

    long total() const { return equal + unequal + skipped; }
    SweepSummary& operator+=(const SweepSummary& o) {
        equal += o.equal;
        unequal += o.unequal;
        skipped += o.skipped;
        return *this;
    }
};

struct SuiteReport {
    std::string suite;
    nlohmann::json config;
    // Only rows worth reading back: every UNEQUAL point, every skip, every
    // catalog entry verdict. EQUAL sweep points are counted in the summary.
    std::vector<VerificationReport> results;
    SweepSummary summary;
    bool budget_exceeded = false;

    nlohmann::json to_json() const;
    std::string to_json_string() const;  // stable 2-space indentation
    // 0 pass, 1 any unequal, 3 skip budget exceeded.
    int exit_code() const;
};

// Structural validation against the shipped report schema (field presence and
// types); returns an explanation for the first violation.
std::optional<std::string> validate_report_shape(const nlohmann::json& j);

} // namespace hypsum
