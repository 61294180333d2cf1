#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blob/detail/hash.hpp"

namespace blob {

// 16-byte root seed; every random decision in a deployment is derived from it
// through labeled SHA-256 expansion, so reruns are byte-identical.
using Seed = std::array<std::uint8_t, 16>;

inline Seed parse_seed_hex(std::string_view hex) {
    if (hex.size() != 32) throw std::invalid_argument("seed must be 32 hex characters");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw std::invalid_argument("seed contains a non-hex character");
    };
    Seed s{};
    for (std::size_t i = 0; i < 16; ++i) {
        s[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    }
    return s;
}

inline std::string seed_hex(const Seed& s) { return detail::to_hex(s); }

// Deterministic engine with hand-rolled sampling helpers. std::mt19937_64 has
// a standard-specified output sequence, and none of the distribution helpers
// below rely on implementation-defined <random> distributions, so a given
// seed yields identical draws on every platform.
class Rng {
public:
    explicit Rng(std::span<const std::uint8_t> key) {
        std::vector<std::uint32_t> words;
        words.reserve((key.size() + 3) / 4);
        for (std::size_t i = 0; i < key.size(); i += 4) {
            std::uint32_t w = 0;
            for (std::size_t b = 0; b < 4 && i + b < key.size(); ++b) {
                w |= static_cast<std::uint32_t>(key[i + b]) << (8 * b);
            }
            words.push_back(w);
        }
        std::seed_seq seq(words.begin(), words.end());
        engine_.seed(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n) by rejection; exact, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::domain_error("Rng::below: n must be positive");
        if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    void fill_bytes(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i + 8 <= out.size()) {
            std::uint64_t x = next_u64();
            for (std::size_t b = 0; b < 8; ++b) out[i + b] = static_cast<std::uint8_t>(x >> (8 * b));
            i += 8;
        }
        if (i < out.size()) {
            std::uint64_t x = next_u64();
            for (std::size_t b = 0; i < out.size(); ++b, ++i) out[i] = static_cast<std::uint8_t>(x >> (8 * b));
        }
    }

    Seed next_seed() {
        Seed s{};
        fill_bytes(s);
        return s;
    }

    // k distinct values out of [0, n), order random (partial Fisher-Yates).
    std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n, std::uint64_t k) {
        if (k > n) throw std::domain_error("sample_without_replacement: k > n");
        std::vector<std::uint64_t> pool(n);
        for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

// Derives an independent stream: SHA-256(root || label || index), truncated
// into the engine seed. Labels partition the randomness so adding a consumer
// never shifts another consumer's stream.
inline Rng derive_rng(const Seed& root, std::string_view label, std::uint64_t index = 0) {
    std::vector<std::uint8_t> material;
    material.reserve(root.size() + label.size() + 8);
    material.insert(material.end(), root.begin(), root.end());
    material.insert(material.end(), label.begin(), label.end());
    for (int b = 0; b < 8; ++b) material.push_back(static_cast<std::uint8_t>(index >> (8 * b)));
    detail::Digest d = detail::sha256(material);
    return Rng(d);
}

inline Seed derive_seed(const Seed& root, std::string_view label, std::uint64_t index = 0) {
    std::vector<std::uint8_t> material;
    material.reserve(root.size() + label.size() + 8);
    material.insert(material.end(), root.begin(), root.end());
    material.insert(material.end(), label.begin(), label.end());
    for (int b = 0; b < 8; ++b) material.push_back(static_cast<std::uint8_t>(index >> (8 * b)));
    detail::Digest d = detail::sha256(material);
    Seed s{};
    std::copy(d.begin(), d.begin() + 16, s.begin());
    return s;
}

} // namespace blob
