#pragma once

#include <cstdint>
#include <vector>

#include "prefatt/rng.hpp"

namespace prefatt {

// One reusable coupled trajectory for the single-black urn: w uniforms are
// drawn once and the same path is read off at any draw count m, so n_of is a
// deterministic function of m after construction. y() = max of the uniforms
// has law Beta(w, 1), each n_of(m) has the white-count law of a (1 black,
// w white) urn after m draws, and |n_of(m) - m * y()| <= w + 1 for every m.
class CoupledPath {
  public:
    CoupledPath(int w, RngStream& rng);

    std::int64_t n_of(std::int64_t m) const;  // white count after m draws
    double y() const { return y_; }
    int w() const { return static_cast<int>(v_.size()); }

  private:
    std::vector<double> v_;
    double y_ = 0.0;
};

CoupledPath couple_base(int w, RngStream& rng);

// A joint draw of the white count X of a (b black, w white) urn after n draws
// together with a Beta(w, b) companion Y, constructed so that
// |X - nY| <= bound() always.
struct CoupledPair {
    std::int64_t x = 0;
    double y = 0.0;
    std::int64_t n = 0;
    std::int64_t bound_times_2 = 0;  // b * (4w + b + 1)
    bool violation = false;          // |x - n y| > bound(); cannot happen
                                     // unless the construction is broken

    double bound() const { return 0.5 * static_cast<double>(bound_times_2); }
};

// Builds b base paths with white parameters w..w+b-1 and chains them from the
// innermost outward.
CoupledPair couple_polya_beta(int b, int w, std::int64_t n, RngStream& rng);

}  // namespace prefatt
