#include "zkpt/digest.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zkpt {

namespace {

uint64_t load_le64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
}

// Arbitrary-length keys fold down to the two SipHash words; a 16-byte key
// is used as-is (little-endian halves).
void key_schedule(const std::vector<uint8_t>& key, uint64_t& k0, uint64_t& k1) {
    if (key.size() == 16) {
        k0 = load_le64(key.data());
        k1 = load_le64(key.data() + 8);
        return;
    }
    k0 = siphash24(key.data(), key.size(), 0x736b6579206b3030ULL, 0x7a6b707420646572ULL);
    k1 = siphash24(key.data(), key.size(), 0x736b6579206b3131ULL, 0x7a6b707420646572ULL);
}

uint64_t domain_value(uint64_t k0, uint64_t k1, const char* domain, uint64_t counter) {
    std::vector<uint8_t> msg(domain, domain + std::string(domain).size());
    for (int i = 0; i < 8; ++i) msg.push_back(static_cast<uint8_t>(counter >> (8 * i)));
    return siphash24(msg.data(), msg.size(), k0, k1);
}

// Key-derived bit permutation for bijective mode. Fisher-Yates seeding is
// costly enough to matter in Monte Carlo loops, so permutations are cached
// per (key, width).
const std::vector<uint32_t>& cached_bit_perm(const std::vector<uint8_t>& key,
                                             uint64_t k0, uint64_t k1, int width) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::vector<uint32_t>> cache;
    std::scoped_lock lock(mu);
    auto key_id = std::make_pair(std::string(key.begin(), key.end()), width);
    auto it = cache.find(key_id);
    if (it != cache.end()) return it->second;

    Rng perm_rng(domain_value(k0, k1, "bitperm", 0));
    std::vector<uint32_t> p(static_cast<size_t>(width));
    std::iota(p.begin(), p.end(), 0u);
    for (int i = width - 1; i > 0; --i) {
        int j = static_cast<int>(perm_rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
    }
    return cache.emplace(std::move(key_id), std::move(p)).first->second;
}

BitVec expand_bits_msb_first(const std::vector<uint8_t>& bytes) {
    BitVec bits;
    bits.reserve(bytes.size() * 8);
    for (uint8_t b : bytes)
        for (int j = 7; j >= 0; --j) bits.push_back((b >> j) & 1);
    return bits;
}

} // namespace

uint64_t siphash24(const uint8_t* data, size_t len, uint64_t k0, uint64_t k1) {
    auto rotl = [](uint64_t x, int b) { return (x << b) | (x >> (64 - b)); };
    uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
    uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
    uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
    uint64_t v3 = 0x7465646279746573ULL ^ k1;
    auto sipround = [&] {
        v0 += v1;
        v1 = rotl(v1, 13);
        v1 ^= v0;
        v0 = rotl(v0, 32);
        v2 += v3;
        v3 = rotl(v3, 16);
        v3 ^= v2;
        v0 += v3;
        v3 = rotl(v3, 21);
        v3 ^= v0;
        v2 += v1;
        v1 = rotl(v1, 17);
        v1 ^= v2;
        v2 = rotl(v2, 32);
    };
    size_t whole = len & ~size_t{7};
    for (size_t i = 0; i < whole; i += 8) {
        uint64_t m = load_le64(data + i);
        v3 ^= m;
        sipround();
        sipround();
        v0 ^= m;
    }
    uint64_t b = static_cast<uint64_t>(len & 0xff) << 56;
    for (size_t i = 0; i < (len & 7); ++i)
        b |= static_cast<uint64_t>(data[whole + i]) << (8 * i);
    v3 ^= b;
    sipround();
    sipround();
    v0 ^= b;
    v2 ^= 0xff;
    sipround();
    sipround();
    sipround();
    sipround();
    return v0 ^ v1 ^ v2 ^ v3;
}

DigestParams DigestParams::hash_mode(int width_bits, std::vector<uint8_t> key) {
    if (width_bits < 1 || width_bits > 64)
        throw std::invalid_argument("hash-mode width must be in [1, 64]");
    return DigestParams{DigestMode::hash, width_bits, std::move(key)};
}

DigestParams DigestParams::bijective_mode(int n_nodes, std::vector<uint8_t> key) {
    if (n_nodes < 1) throw std::invalid_argument("node count must be positive");
    int width = static_cast<int>(canonical_byte_len(n_nodes)) * 8;
    return DigestParams{DigestMode::bijective, width, std::move(key)};
}

const char* digest_mode_name(DigestMode mode) {
    return mode == DigestMode::hash ? "hash" : "bijective";
}

BitVec digest(const DigestParams& params, const Graph& g) {
    auto bytes = canonical_bytes(g);
    uint64_t k0, k1;
    key_schedule(params.key, k0, k1);

    if (params.mode == DigestMode::hash) {
        if (params.width_bits < 1 || params.width_bits > 64)
            throw std::invalid_argument("hash-mode width must be in [1, 64]");
        uint64_t h = siphash24(bytes.data(), bytes.size(), k0, k1);
        BitVec out(static_cast<size_t>(params.width_bits));
        for (int i = 0; i < params.width_bits; ++i)
            out[static_cast<size_t>(i)] = static_cast<uint8_t>((h >> i) & 1);
        return out;
    }

    int width = static_cast<int>(bytes.size()) * 8;
    if (width != params.width_bits)
        throw std::invalid_argument("bijective-mode width does not match node count");
    const auto& perm = cached_bit_perm(params.key, k0, k1, width);
    BitVec in = expand_bits_msb_first(bytes);
    BitVec out(static_cast<size_t>(width));
    uint64_t block = 0;
    for (int i = 0; i < width; ++i) {
        if (i % 64 == 0)
            block = domain_value(k0, k1, "keystream", static_cast<uint64_t>(i / 64));
        uint8_t ks_bit = static_cast<uint8_t>((block >> (i % 64)) & 1);
        out[static_cast<size_t>(i)] = in[perm[static_cast<size_t>(i)]] ^ ks_bit;
    }
    return out;
}

std::optional<IsomorphHit> find_isomorph_with_digest(const DigestParams& params,
                                                     const Graph& base,
                                                     const BitVec& target, Rng& rng,
                                                     uint64_t max_tries) {
    if (max_tries < 1) throw std::invalid_argument("max_tries must be >= 1");
    for (uint64_t t = 1; t <= max_tries; ++t) {
        Permutation xi = random_perm(base.node_count(), rng);
        Graph h = apply_perm(xi, base);
        if (digest(params, h) == target) return IsomorphHit{std::move(xi), std::move(h), t};
    }
    return std::nullopt;
}

} // namespace zkpt
