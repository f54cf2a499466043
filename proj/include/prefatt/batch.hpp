#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace prefatt {

inline constexpr std::string_view kVersion = "0.1.0";

// FNV-1a over the bytes of `text`.
std::uint64_t fnv1a_hash(std::string_view text);

// Round-trip double formatting (%.17g).
std::string format_double(double value);

// 16 hex digits, zero-padded.
std::string format_hash(std::uint64_t hash);

// Provenance stamped into every output file so a batch can be reproduced
// from its header alone.
struct RunMetadata {
    std::string tool;    // subcommand name
    std::string config;  // canonical flag=value listing
    std::uint64_t master_seed = 0;
    int threads = 1;

    std::uint64_t config_hash() const;
};

// Comment header (# key=value lines) followed by the column row.
void write_csv_header(std::ostream& out, const RunMetadata& meta,
                      const std::vector<std::string>& columns);

}  // namespace prefatt
