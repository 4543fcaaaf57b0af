#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zr/config.hpp"

namespace zr {

/// Command-line options shared by the subcommand runners.
struct RunOptions {
    std::uint64_t seed = 1;
    int threads = 0;  // 0: leave the OpenMP default
    bool emit_plot_data = false;
    bool no_build = false;
    int identity_count = 10;
};

/// One randomized identity instance and its verdict.
struct IdentityRecord {
    std::string family;
    std::string params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// `count` seeded instances of each of the five identity checkers.
std::vector<IdentityRecord> identity_suite(std::uint64_t seed, int count);

/// Subcommand bodies; each writes its artifacts under cfg.output_dir and
/// returns the process exit code (0 ok, 1 verification failure, 2 config
/// error, 3 resource error).  Progress and errors go to `log`.
int run_sieve(const Config& cfg, const RunOptions& opt, std::ostream& log);
int run_check_identities(const Config& cfg, const RunOptions& opt,
                         std::ostream& log);
int run_moments(const Config& cfg, const RunOptions& opt, std::ostream& log);
int run_ratios(const Config& cfg, const RunOptions& opt, std::ostream& log);
int run_correlations(const Config& cfg, const RunOptions& opt,
                     std::ostream& log);

}  // namespace zr
