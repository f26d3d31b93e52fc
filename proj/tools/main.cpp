#include "nakelvin/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// exit codes: 0 all checks pass, 1 a check failed, 2 configuration/usage,
// 3 resource guard, 4 unexpected error
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for the Vladimirov-Taibleson operator "
                 "and the non-Archimedean Kelvin transform on Q_p^n"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "one of: kelvin, chain, inverse, fourier, eigen, harmonic, arithmetic")
        ->required();
    nak::SuiteConfig cfg;
    verify->add_option("--p", cfg.p, "prime of the base field Q_p")->capture_default_str();
    verify->add_option("--n", cfg.n, "extension degree / dimension, 2..8")->capture_default_str();
    verify->add_option("--alpha", cfg.alphas, "alpha sample (repeatable; suite defaults otherwise)");
    verify->add_option("--precision", cfg.precision, "relative p-adic precision in digits")
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for the reproducible input generator")
        ->capture_default_str();
    std::string format = "text";
    verify->add_option("--format", format, "report format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    std::string out_path;
    verify->add_option("--out", out_path, "write the report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitPass;
    }

    try {
        nak::VerificationReport report = nak::run_suite(suite, cfg);
        std::string rendered = format == "json"  ? nak::report_json(report)
                               : format == "csv" ? nak::report_csv(report)
                                                 : nak::report_text(report);
        if (out_path.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream os(out_path);
            if (!os) {
                std::cerr << "cannot open output path: " << out_path << "\n";
                return kExitUsage;
            }
            os << rendered;
        }
        return report.all_pass() ? kExitPass : kExitFail;
    } catch (const nak::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nak::ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
