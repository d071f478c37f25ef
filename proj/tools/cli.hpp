#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace airybasis::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kPrecision = 2, kVerificationFailed = 3 };

/// Options for one run. Which fields matter depends on the subcommand.
struct RunConfig {
    double lambda = 1.0;
    double x_min = -40.0;
    double x_max = 40.0;
    std::size_t points = 8001;
    int n_states = 6;
    std::string format = "csv";
    std::string out;
    std::string config;

    // bounce
    double x0 = 10.0;
    double sigma = 2.0;
    double t_max = 100.0;  // in units of tg
    double dt = 0.05;      // in units of tg
    double tg = 0.7937005259840998;

    // grin
    double q = -1.472910;
    double kappa = 1.0;
    double z_max = 200.0;
    std::size_t n_z = 400;
    double view = 30.0;

    // verify
    double fuzz_energy = 0.0;
};

/// Built-in defaults for a subcommand.
RunConfig default_config(const std::string& subcommand);

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double threshold = 0.0;
};

/// The invariant suite behind `verify`.
std::vector<CheckResult> run_verification(const RunConfig& cfg);

/// Entry point. args excludes the program name. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace airybasis::cli
