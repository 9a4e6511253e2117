#include "ampsum/report.hpp"

#include <cmath>
#include <sstream>

namespace ampsum {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::report_only: return "report_only";
    }
    return "?";
}

i64 VerificationReport::failure_count() const {
    i64 n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) ++n;
    return n;
}

double VerificationReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks)
        if (std::isfinite(c.residual)) m = std::max(m, c.residual);
    return m;
}

namespace {

// doubles rendered with full round-trip precision, deterministically
std::string dbl(double v) {
    if (std::isnan(v)) return "nan";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

nlohmann::ordered_json check_json(const CheckRecord& c, bool with_runtime) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["params"] = c.params;
    j["status"] = status_name(c.status);
    j["residual"] = dbl(c.residual);
    if (with_runtime) j["runtime_ms"] = c.runtime_ms;
    return j;
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["toolkit_version"] = toolkit_version;
    j["suite"] = suite;
    j["config"] = config_echo;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back(check_json(c, true));
    j["summary"] = {{"check_count", checks.size()},
                    {"failure_count", failure_count()},
                    {"max_residual", dbl(max_residual())}};
    return j;
}

std::string VerificationReport::canonical_body() const {
    nlohmann::ordered_json j;
    j["toolkit_version"] = toolkit_version;
    j["suite"] = suite;
    j["config"] = config_echo;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back(check_json(c, false));
    j["summary"] = {{"check_count", checks.size()},
                    {"failure_count", failure_count()},
                    {"max_residual", dbl(max_residual())}};
    return j.dump(2);
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "suite,id,status,residual,runtime_ms,params\n";
    for (const auto& c : checks) {
        std::string p = c.params.dump();
        for (auto& ch : p)
            if (ch == ',') ch = ';';
        os << suite << ',' << c.id << ',' << status_name(c.status) << ','
           << dbl(c.residual) << ',' << c.runtime_ms << ',' << p << '\n';
    }
    return os.str();
}

}  // namespace ampsum
