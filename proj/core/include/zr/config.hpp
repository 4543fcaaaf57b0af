#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zr/shift_set.hpp"

namespace zr {

/// One JSON document drives every subcommand; unknown keys are rejected so a
/// typo cannot silently fall back to a default.
struct Config {
    ShiftSet A, B, C, D;
    std::vector<double> t_grid{1000.0};
    double lambda = 1.1;
    double psi_lo = 1.0, psi_hi = 2.0;
    std::uint32_t x_override = 0;   // 0: X = floor(T^lambda)
    std::uint32_t prime_cutoff = 10000;
    std::uint32_t sieve_x = 10000;  // table size for the sieve subcommand
    std::vector<std::uint32_t> h_values{1, 2, 3, 4, 5, 6, 7, 8};
    double corr_u = 1e5;
    double corr_width = 0.5;
    std::uint32_t corr_qmax = 1000;
    std::filesystem::path output_dir = ".";
};

/// Parses and validates a config file.  Throws ConfigError with the failing
/// key in the message.
Config load_config(const std::filesystem::path& path);

/// The config re-serialized in canonical key order; embedded in manifests so
/// a run can be reproduced from its outputs alone.
std::string config_snapshot(const Config& cfg);

/// Everything needed to reproduce a run byte-for-byte.
struct RunManifest {
    std::string config;  // canonical snapshot
    std::string version;
    std::uint64_t seed = 0;
    int threads = 0;
    double wall_seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> diagnostics;

    void write(const std::filesystem::path& path) const;
};

}  // namespace zr
