#pragma once

#include <cstdint>

#include "diracfac/matrix.hpp"
#include "diracfac/roots.hpp"

namespace diracfac {

/// splitmix64: tiny, seedable, and identical on every platform, which keeps
/// seeded CLI reports byte-for-byte reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on the complex disk |z| <= radius.
    Cx next_in_disk(double radius) {
        const double r = radius * std::sqrt(next_unit());
        const double theta = 2.0 * kPi * next_unit();
        return Cx{r * std::cos(theta), r * std::sin(theta)};
    }

private:
    std::uint64_t state_;
};

} // namespace diracfac
