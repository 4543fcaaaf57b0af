#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "zr/sieve.hpp"

namespace zr {

/// FNV-1a 64-bit over a byte range.
std::uint64_t fnv1a64(const void* data, std::size_t len);

/// Writes the value array as little-endian (re, im) double pairs for
/// n = 1..X, plus a JSON sidecar <path>.json with the shift sets, X and a
/// checksum of the binary payload.
void write_table(const CoefficientTable& table, const std::filesystem::path& path);

/// Reads a table written by write_table, verifying the sidecar checksum.
/// Throws std::runtime_error on mismatch or malformed files.
CoefficientTable read_table(const std::filesystem::path& path);

}  // namespace zr
