// Structured verification reports: per-check records, JSON and CSV emission,
// and the canonical (runtime-stripped) body used for determinism checks.
#pragma once

#include <string>

#include "json.hpp"

#include "ampsum/common.hpp"

namespace ampsum {

enum class CheckStatus { pass, fail, report_only };

struct CheckRecord {
    std::string id;
    nlohmann::ordered_json params;
    CheckStatus status;
    double residual;     // residual or bound quotient; NaN when not applicable
    double runtime_ms;
};

struct VerificationReport {
    std::string suite;
    nlohmann::ordered_json config_echo;
    std::string toolkit_version;
    std::vector<CheckRecord> checks;

    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
    i64 failure_count() const;
    double max_residual() const;

    nlohmann::ordered_json to_json() const;          // full, includes runtimes
    std::string to_csv() const;                      // flat tabular export
    std::string canonical_body() const;              // runtime fields stripped
};

const char* status_name(CheckStatus s);

}  // namespace ampsum
