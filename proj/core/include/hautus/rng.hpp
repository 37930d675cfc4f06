#pragma once

#include <cstdint>

namespace hautus {

// Deterministic splittable RNG (splitmix64 core). Deliberately not
// std::mt19937 + <random> distributions: distribution output is
// implementation-defined, and reproducibility across compilers is a
// contract here. Substreams derived from (seed, index) are independent of
// how many draws other substreams consumed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed);
        const std::uint64_t a = mixer.next();
        SplitMix64 r(a ^ (index * 0x9E3779B97F4A7C15ull) ^ 0xD1B54A32D192ED03ull);
        r.next(); // decorrelate adjacent indices
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform on [0, n), rejection-sampled; n > 0
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // uniform on [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // true with probability p (p in [0,1]); uses a 53-bit dyadic comparison,
    // identical on every platform
    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        const std::uint64_t draw = next() >> 11; // 53 bits
        return static_cast<double>(draw) < p * 9007199254740992.0; // 2^53
    }

private:
    std::uint64_t state_;
};

} // namespace hautus
