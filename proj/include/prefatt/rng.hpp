#pragma once

#include <cstdint>
#include <random>

namespace prefatt {

// Deterministic pseudo-random stream keyed by (master_seed, stream_id).
// Equal keys yield byte-identical sequences on every platform (mt19937_64 and
// seed_seq are fully specified by the standard, and all floating-point draws
// below are built from raw 64-bit words). Distinct stream ids are mixed into
// unrelated engine states and behave as statistically independent streams.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : master_(master_seed), id_(stream_id) {
        std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                          static_cast<std::uint32_t>(master_seed >> 32),
                          static_cast<std::uint32_t>(stream_id),
                          static_cast<std::uint32_t>(stream_id >> 32)};
        eng_.seed(seq);
    }

    std::uint64_t master_seed() const { return master_; }
    std::uint64_t stream_id() const { return id_; }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform on the open interval (0,1); safe under log() and strict ceilings.
    double uniform_open() {
        return (static_cast<double>(eng_() >> 12) + 0.5) * 0x1.0p-52;
    }

    // Uniform integer in [0, n); n >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

private:
    std::uint64_t master_;
    std::uint64_t id_;
    std::mt19937_64 eng_;
};

}  // namespace prefatt
