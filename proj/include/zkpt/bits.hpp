#ifndef ZKPT_BITS_HPP
#define ZKPT_BITS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zkpt {

// A bit sequence, one byte per bit (values 0/1). Used for digests, gate
// words, measurement records and secret shares.
using BitVec = std::vector<uint8_t>;

inline int parity(const BitVec& bits) {
    int p = 0;
    for (uint8_t b : bits) p ^= b;
    return p;
}

inline BitVec bit_xor(const BitVec& a, const BitVec& b) {
    BitVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

inline std::string to_string(const BitVec& bits) {
    std::string s;
    s.reserve(bits.size());
    for (uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

// Parses "10…" positionally: s[0] becomes bits[0].
inline BitVec bits_from_string(const std::string& s) {
    BitVec out;
    out.reserve(s.size());
    for (char c : s) out.push_back(c == '1' ? 1 : 0);
    return out;
}

inline std::string to_hex(const std::vector<uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

inline std::vector<uint8_t> from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    std::vector<uint8_t> out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i + 1 < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) break;
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

} // namespace zkpt

#endif
