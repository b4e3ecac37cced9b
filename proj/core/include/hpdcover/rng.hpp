#pragma once

#include <cstdint>

namespace hpdcover {

/// Counter-based uniform stream: draw i is a pure function of (key, i), so
/// any subrange can be generated independently and in any order while the
/// full sequence stays identical. The mixer is the splitmix64 finalizer.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

    /// Uniform double in the open interval (0, 1).
    double uniform(std::uint64_t counter) const {
        const std::uint64_t bits = mix(key_ + counter * 0x9E3779B97F4A7C15ull);
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

  private:
    std::uint64_t key_;
};

}  // namespace hpdcover
