#pragma once

#include <string>
#include <vector>

#include "cutstack/rational.hpp"

namespace cutstack {

// Bit-string helpers shared by the test families (strings are std::vector<int>
// of 0/1; std::string forms are '0'/'1' characters).
long ones_count(const std::vector<int>& x);
std::vector<int> bits_from_string(const std::string& s);
std::string bits_to_string(const std::vector<int>& x);
bool is_prefix(const std::vector<int>& a, const std::vector<int>& b);
// pairwise-incomparability check
bool is_prefix_free(std::vector<std::vector<int>> xs);

// Verdict of running one test family member against a finite prefix.
// Blocks are the family's natural enumeration blocks (length n for the
// strong-law family, block index n for the iterated-logarithm family).
struct PassVerdict {
    std::vector<long> hit_blocks;
    long last_hit_block = -1;
    long horizon = 0;
    // passes up to the horizon with the caller's threshold: no hits beyond it
    bool passes_beyond(long threshold) const {
        return last_hit_block <= threshold;
    }
};

} // namespace cutstack
