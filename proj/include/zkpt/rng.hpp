#ifndef ZKPT_RNG_HPP
#define ZKPT_RNG_HPP

#include <cstdint>
#include <random>

namespace zkpt {

// Deterministic session RNG. One instance per protocol session, threaded
// explicitly through every sampling operation so transcripts are
// bit-reproducible. mt19937_64 is fully specified by the standard; all
// distributions below are hand-rolled so streams are identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    int bit() { return static_cast<int>(next_u64() >> 63); }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Uniform in [0, bound), unbiased via rejection. bound must be nonzero.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
};

// Counter-based seed derivation (splitmix64). The increment is odd and the
// finalizer is a bijection on 64-bit words, so the first 2^64 outputs are
// pairwise distinct; trial i of a run always gets the same child seed.
class SeedStream {
public:
    explicit SeedStream(uint64_t master) : state_(master) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

} // namespace zkpt

#endif
