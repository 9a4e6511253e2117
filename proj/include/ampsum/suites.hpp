// Suite orchestration: configuration (JSON, unknown keys rejected), the
// registry of verification suites, and deterministic seeded execution over a
// worker pool.
#pragma once

#include <string>

#include "json.hpp"

#include "ampsum/report.hpp"

namespace ampsum {

struct SuiteConfig {
    std::string suite = "all";
    std::uint64_t seed = 1;
    int workers = 1;
    std::string cache_dir;
    nlohmann::ordered_json grids;  // per-suite parameter grids (validated)

    // parses + validates; ConfigError on malformed input or unknown keys
    static SuiteConfig from_json(const nlohmann::ordered_json& j);
    static SuiteConfig from_file(const std::string& path);
    nlohmann::ordered_json echo() const;

    // grid lookup with defaults
    nlohmann::ordered_json grid(const std::string& suite_name) const;
};

const std::vector<std::string>& suite_names();

// runs one suite (or "all"); deterministic given config.seed
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace ampsum
