#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blob/errors.hpp"

namespace blob {

using Bytes = std::vector<std::uint8_t>;

// Fixed-width records packed back to back into a bit stream.
// Bit j of the stream lives at byte j/8, position j%8 (LSB first); record i
// of width w occupies stream bits [i*w, (i+1)*w). Record values use the same
// LSB-first layout inside their own byte-padded buffer, so an 8-bit record is
// exactly one natural byte and width-1 records form a plain bitmap.
class PackedBits {
public:
    PackedBits() = default;

    PackedBits(std::uint64_t count, std::uint16_t width)
        : count_(count), width_(width), bytes_((count * width + 7) / 8, 0) {
        if (width == 0) throw std::domain_error("PackedBits: width must be >= 1");
    }

    std::uint64_t count() const { return count_; }
    std::uint16_t width() const { return width_; }
    std::uint64_t value_bytes() const { return (width_ + 7u) / 8u; }
    const Bytes& raw() const { return bytes_; }
    Bytes& raw() { return bytes_; }

    bool get_bit(std::uint64_t record, std::uint16_t offset) const {
        std::uint64_t j = record * width_ + offset;
        return (bytes_[j >> 3] >> (j & 7)) & 1u;
    }

    void set_bit(std::uint64_t record, std::uint16_t offset, bool value) {
        std::uint64_t j = record * width_ + offset;
        std::uint8_t mask = static_cast<std::uint8_t>(1u << (j & 7));
        if (value) {
            bytes_[j >> 3] |= mask;
        } else {
            bytes_[j >> 3] &= static_cast<std::uint8_t>(~mask);
        }
    }

    void get(std::uint64_t record, std::span<std::uint8_t> out) const {
        check_record(record);
        if (out.size() < value_bytes()) throw std::length_error("PackedBits::get: buffer too small");
        for (std::uint64_t b = 0; b < value_bytes(); ++b) out[b] = 0;
        for (std::uint16_t b = 0; b < width_; ++b) {
            if (get_bit(record, b)) out[b >> 3] |= static_cast<std::uint8_t>(1u << (b & 7));
        }
    }

    Bytes get(std::uint64_t record) const {
        Bytes out(value_bytes());
        get(record, out);
        return out;
    }

    void set(std::uint64_t record, std::span<const std::uint8_t> value) {
        check_record(record);
        if (value.size() < value_bytes()) throw std::length_error("PackedBits::set: buffer too small");
        for (std::uint16_t b = 0; b < width_; ++b) {
            set_bit(record, b, (value[b >> 3] >> (b & 7)) & 1u);
        }
    }

    // Compares two records without materializing their values.
    bool equal(std::uint64_t a, std::uint64_t b) const {
        for (std::uint16_t off = 0; off < width_; ++off) {
            if (get_bit(a, off) != get_bit(b, off)) return false;
        }
        return true;
    }

    bool equal_value(std::uint64_t record, std::span<const std::uint8_t> value) const {
        for (std::uint16_t b = 0; b < width_; ++b) {
            bool lhs = get_bit(record, b);
            bool rhs = (value[b >> 3] >> (b & 7)) & 1u;
            if (lhs != rhs) return false;
        }
        return true;
    }

    friend bool operator==(const PackedBits&, const PackedBits&) = default;

private:
    void check_record(std::uint64_t record) const {
        if (record >= count_) throw std::out_of_range("PackedBits: record index out of range");
    }

    std::uint64_t count_ = 0;
    std::uint16_t width_ = 1;
    Bytes bytes_;
};

// Plain bitmap over [0, n) for membership sets.
class Bitmap {
public:
    Bitmap() = default;
    explicit Bitmap(std::uint64_t n) : size_(n), bytes_((n + 7) / 8, 0) {}

    std::uint64_t size() const { return size_; }

    bool test(std::uint64_t i) const { return (bytes_[i >> 3] >> (i & 7)) & 1u; }

    void set(std::uint64_t i, bool value = true) {
        std::uint8_t mask = static_cast<std::uint8_t>(1u << (i & 7));
        if (value) {
            bytes_[i >> 3] |= mask;
        } else {
            bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
        }
    }

    const Bytes& raw() const { return bytes_; }
    Bytes& raw() { return bytes_; }

    friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
    std::uint64_t size_ = 0;
    Bytes bytes_;
};

} // namespace blob
