#include "hypsum/report.hpp"

namespace hypsum {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "EQUAL";
        case Verdict::Unequal: return "UNEQUAL";
        case Verdict::SkippedPole: return "SKIPPED_POLE";
        case Verdict::Restricted: return "RESTRICTED";
    }
    return "?";
}

namespace {

Verdict verdict_from_name(const std::string& s) {
    if (s == "EQUAL") return Verdict::Equal;
    if (s == "UNEQUAL") return Verdict::Unequal;
    if (s == "SKIPPED_POLE") return Verdict::SkippedPole;
    if (s == "RESTRICTED") return Verdict::Restricted;
    throw std::invalid_argument("unknown verdict: " + s);
}

} // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json point = nlohmann::json::object();
    for (const auto& [sym, value] : parameter_point) point[sym] = value;
    return {{"identity_id", identity_id},
            {"parameter_point", point},
            {"lhs", lhs},
            {"rhs", rhs},
            {"verdict", verdict_name(verdict)},
            {"detail", detail}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.identity_id = j.at("identity_id").get<std::string>();
    for (const auto& [sym, value] : j.at("parameter_point").items())
        r.parameter_point.emplace_back(sym, value.get<std::string>());
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.detail = j.at("detail").get<std::string>();
    return r;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) rows.push_back(r.to_json());
    return {{"suite", suite},
            {"config", config},
            {"results", rows},
            {"summary",
             {{"equal", summary.equal},
              {"unequal", summary.unequal},
              {"skipped", summary.skipped}}}};
}

std::string SuiteReport::to_json_string() const { return to_json().dump(2) + "\n"; }

int SuiteReport::exit_code() const {
    if (summary.unequal > 0) return 1;
    if (budget_exceeded) return 3;
    return 0;
}

std::optional<std::string> validate_report_shape(const nlohmann::json& j) {
    auto need = [&j](const char* key, bool (nlohmann::json::*pred)() const)
        -> std::optional<std::string> {
        if (!j.contains(key)) return std::string("missing key: ") + key;
        if (!((j.at(key)).*pred)()) return std::string("wrong type for key: ") + key;
        return std::nullopt;
    };
    if (auto e = need("suite", &nlohmann::json::is_string)) return e;
    if (auto e = need("config", &nlohmann::json::is_object)) return e;
    if (auto e = need("results", &nlohmann::json::is_array)) return e;
    if (auto e = need("summary", &nlohmann::json::is_object)) return e;
    const auto& summary = j.at("summary");
    for (const char* key : {"equal", "unequal", "skipped"}) {
        if (!summary.contains(key)) return std::string("summary missing key: ") + key;
        if (!summary.at(key).is_number_integer())
            return std::string("summary key not an integer: ") + key;
    }
    for (const auto& row : j.at("results")) {
        if (!row.is_object()) return "results row is not an object";
        for (const char* key : {"identity_id", "lhs", "rhs", "verdict", "detail"}) {
            if (!row.contains(key)) return std::string("results row missing key: ") + key;
            if (!row.at(key).is_string())
                return std::string("results row key not a string: ") + key;
        }
        if (!row.contains("parameter_point") || !row.at("parameter_point").is_object())
            return "results row missing parameter_point object";
    }
    return std::nullopt;
}

} // namespace hypsum
