#pragma once

#include <cstdint>
#include <vector>

namespace cutstack {

// splitmix64: the only RNG in the project. Every randomized sweep takes an
// explicit seed so runs are reproducible byte for byte.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    bool bit() { return (next() >> 63) != 0; }

private:
    uint64_t state_;
};

// Deterministic Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (size_t j = v.size(); j > 1; --j) {
        size_t k = static_cast<size_t>(rng.below(j));
        std::swap(v[j - 1], v[k]);
    }
}

} // namespace cutstack
