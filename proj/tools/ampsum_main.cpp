// ampsum: verification suites for twisted exponential sums, quadratic root
// counts, Dirichlet L-values, Bessel/Mellin identities and the amplifier.
//
//   ampsum verify <suite> [--config FILE] [--seed N] [--workers N]
//                 [--out FILE] [--format json|csv]
//   ampsum scan convexity --q-max N [--out FILE] [--format json|csv]
//   ampsum report --in FILE --summary
//
// Exit codes: 0 all pass, 1 any fail, 2 config/system error.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ampsum/lfunc.hpp"
#include "ampsum/suites.hpp"

namespace {

using ampsum::SuiteConfig;
using ampsum::VerificationReport;
using nlohmann::ordered_json;

int emit(const VerificationReport& rep, const std::string& out,
         const std::string& format) {
    std::string text =
        (format == "csv") ? rep.to_csv() : rep.to_json().dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::trunc);
        if (!f) {
            std::cerr << "ampsum: cannot write " << out << "\n";
            return 2;
        }
        f << text;
    }
    return rep.failure_count() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale verification of exponential-sum and L-value identities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::string config_path, out_path, format = "json";
    long long seed = -1;
    int workers = -1;
    verify->add_option("suite", suite, "suite name or 'all'");
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--seed", seed, "RNG seed (overrides config)");
    verify->add_option("--workers", workers, "worker threads (overrides config)");
    verify->add_option("--out", out_path, "output file (default stdout)");
    verify->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // scan
    auto* scan = app.add_subcommand("scan", "parameter scans");
    std::string scan_kind;
    long long q_max = 2000;
    std::string scan_out, scan_format = "json";
    scan->add_option("kind", scan_kind, "scan kind (convexity)")->required();
    scan->add_option("--q-max", q_max, "largest prime modulus");
    scan->add_option("--out", scan_out, "output file (default stdout)");
    scan->add_option("--format", scan_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // report
    auto* report = app.add_subcommand("report", "summarize a stored report");
    std::string in_path;
    bool summary = false;
    report->add_option("--in", in_path, "report JSON file")->required();
    report->add_flag("--summary", summary, "print the summary block");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            SuiteConfig cfg = config_path.empty()
                                  ? SuiteConfig::from_json(ordered_json::object())
                                  : SuiteConfig::from_file(config_path);
            if (verify->count("suite")) cfg.suite = suite;
            if (seed >= 0) cfg.seed = (std::uint64_t)seed;
            if (workers > 0) cfg.workers = workers;
            bool known = false;
            for (const auto& n : ampsum::suite_names())
                if (n == cfg.suite) known = true;
            if (!known) {
                std::cerr << "ampsum: unknown suite '" << cfg.suite << "'\n";
                return 2;
            }
            auto rep = ampsum::run_suite(cfg);
            return emit(rep, out_path, format);
        }
        if (scan->parsed()) {
            if (scan_kind != "convexity") {
                std::cerr << "ampsum: unknown scan kind '" << scan_kind << "'\n";
                return 2;
            }
            SuiteConfig cfg = SuiteConfig::from_json(ordered_json::object());
            cfg.suite = "convexity";
            cfg.grids["convexity"]["q_max"] = q_max;
            auto rep = ampsum::run_suite(cfg);
            return emit(rep, scan_out, scan_format);
        }
        if (report->parsed()) {
            std::ifstream in(in_path);
            if (!in) {
                std::cerr << "ampsum: cannot open " << in_path << "\n";
                return 2;
            }
            ordered_json j;
            in >> j;
            if (summary) {
                std::cout << j["summary"].dump(2) << "\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
            long long fails = j["summary"]["failure_count"];
            return fails == 0 ? 0 : 1;
        }
    } catch (const ampsum::ConfigError& e) {
        std::cerr << "ampsum: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ampsum: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
