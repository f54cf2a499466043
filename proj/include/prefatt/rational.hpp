#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prefatt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact probability mass function on a contiguous integer support.
// probs[i] is the mass at value offset + i.
struct ExactPmf {
    std::int64_t offset = 0;
    std::vector<Rational> probs;

    Rational mass_at(std::int64_t value) const {
        if (value < offset) return Rational(0);
        std::uint64_t idx = static_cast<std::uint64_t>(value - offset);
        if (idx >= probs.size()) return Rational(0);
        return probs[idx];
    }

    Rational cdf_at(std::int64_t value) const {
        Rational acc(0);
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (offset + static_cast<std::int64_t>(i) > value) break;
            acc += probs[i];
        }
        return acc;
    }

    Rational total_mass() const {
        Rational acc(0);
        for (const Rational& p : probs) acc += p;
        return acc;
    }

    void check_normalized() const {
        if (total_mass() != Rational(1))
            throw std::logic_error("ExactPmf: mass does not sum to 1");
    }
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace prefatt
