#pragma once

// Deterministic seeded randomness for probe points and test families.
// SplitMix64: identical streams across platforms and standard libraries,
// unlike std:: distributions.

#include <cstdint>
#include <vector>

#include "affineorth/point.hpp"

namespace affineorth {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Point point_in_box(std::size_t dim, double lo, double hi) {
        std::vector<double> c(dim);
        for (auto& x : c)
            x = uniform(lo, hi);
        return Point(std::move(c));
    }

private:
    std::uint64_t state_;
};

} // namespace affineorth
