#ifndef ZKPT_DIGEST_HPP
#define ZKPT_DIGEST_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "zkpt/bits.hpp"
#include "zkpt/graph.hpp"
#include "zkpt/rng.hpp"

namespace zkpt {

enum class DigestMode { hash, bijective };

// The agreed graph-to-bits function h. Hash mode is a keyed PRF
// (SipHash-2-4 over canonical_bytes, truncated to width_bits) and admits
// collisions; bijective mode is a key-derived bit permutation XOR a
// keystream over the full canonical encoding, so distinct labeled graphs
// never collide.
struct DigestParams {
    DigestMode mode;
    int width_bits;
    std::vector<uint8_t> key; // public, agreed by the colluding parties

    static DigestParams hash_mode(int width_bits, std::vector<uint8_t> key);
    // width is derived from the node count: 8 * canonical_byte_len(n).
    static DigestParams bijective_mode(int n_nodes, std::vector<uint8_t> key);
};

const char* digest_mode_name(DigestMode mode);

BitVec digest(const DigestParams& params, const Graph& g);

// SipHash-2-4 of `data` under a 128-bit key (k0, k1 little-endian words).
uint64_t siphash24(const uint8_t* data, size_t len, uint64_t k0, uint64_t k1);

struct IsomorphHit {
    Permutation xi;
    Graph h;
    uint64_t tries; // candidates digested, including the hit
};

// Brute-force collision search: samples random relabelings xi of `base`
// until digest(apply_perm(xi, base)) == target. Stands in for a quantum
// collision search; in bijective mode a miss is guaranteed unless target is
// the digest of some isomorph of base.
std::optional<IsomorphHit> find_isomorph_with_digest(const DigestParams& params,
                                                     const Graph& base,
                                                     const BitVec& target, Rng& rng,
                                                     uint64_t max_tries);

} // namespace zkpt

#endif
