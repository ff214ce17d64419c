#pragma once

#include <cmath>
#include <cstdint>

namespace svlab {

// PCG32 (Melissa O'Neill's minimal variant). We roll our own generator and
// distributions because std::* distributions are implementation-defined and
// every stage of the pipeline must reproduce bit-identically across builds.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) { reseed(seed, stream); }

    void reseed(uint64_t seed, uint64_t stream = 0) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += splitmix64(seed);
        next_u32();
        has_spare_ = false;
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u32()) * 0x1p-32; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint32_t below(uint32_t n) {
        // Lemire-style rejection keeps the draw unbiased.
        uint64_t m = static_cast<uint64_t>(next_u32()) * n;
        uint32_t lo = static_cast<uint32_t>(m);
        if (lo < n) {
            uint32_t t = (0u - n) % n;
            while (lo < t) {
                m = static_cast<uint64_t>(next_u32()) * n;
                lo = static_cast<uint32_t>(m);
            }
        }
        return static_cast<uint32_t>(m >> 32);
    }

    int range(int lo, int hi_inclusive) {
        return lo + static_cast<int>(below(static_cast<uint32_t>(hi_inclusive - lo + 1)));
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Derives an independent child seed; used to give each pipeline stage /
    // sample / worker its own stream.
    static uint64_t derive(uint64_t seed, uint64_t tag) {
        return splitmix64(seed ^ splitmix64(tag));
    }

private:
    uint64_t state_ = 0;
    uint64_t inc_ = 1;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace svlab
