#pragma once

#include <cstdint>

namespace sl2k {

// Deterministic splitmix64 stream.  Streams are derived from a (seed,
// index) pair, so trial i draws the same values no matter how many other
// trials ran before it or on which thread.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool coin() { return (next() & 1ull) != 0; }

private:
    std::uint64_t state_;
};

inline Rng derive_stream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    mix.next();
    return Rng(mix.next());
}

} // namespace sl2k
