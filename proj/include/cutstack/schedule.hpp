#pragma once

#include <vector>

#include "cutstack/rational.hpp"
#include "cutstack/sigma.hpp"

namespace cutstack {

// Height schedule h_{-2} < h_{-1} < h_0 < ... with
//   sigma(h_{i-1}) - sigma(h_{i-2}) > i - log2(r) + 11   for i = 0..s_max.
struct HeightSchedule {
    std::vector<long> h; // h[0] = h_{-2}, h[1] = h_{-1}, h[i+2] = h_i
    Rat r;

    long at(long i) const { return h.at(static_cast<size_t>(i + 2)); } // i >= -2
    long stages() const { return static_cast<long>(h.size()) - 3; }   // largest i stored
};

// Greedy-minimal schedule: each h is the smallest integer above its
// predecessor satisfying the gap inequality. r must be dyadic with
// 0 < r < 1/4 (invalid_parameter_error) and a power of two so that log2 r is
// exact. Throws schedule_infeasible_error when sigma cannot reach the gap
// within `search_bound` (sigma effectively bounded on the probed range).
HeightSchedule derive_height_schedule(const SigmaFunction& sigma, const Rat& r, long s_max,
                                      long seed_h = 1, long search_bound = 1L << 42);

} // namespace cutstack
