#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "blob/errors.hpp"

// Little-endian primitive readers/writers shared by all file formats.

namespace blob::detail {

inline void put_bytes(std::ostream& os, std::span<const std::uint8_t> bytes) {
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
    if (!os) throw io_error("write failed");
}

template <typename T>
void put_le(std::ostream& os, T value) {
    static_assert(std::is_integral_v<T> && std::is_unsigned_v<T>);
    std::uint8_t buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        buf[i] = static_cast<std::uint8_t>(value >> (8 * i));
    }
    put_bytes(os, buf);
}

inline void put_f64(std::ostream& os, double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, sizeof(bits));
    put_le<std::uint64_t>(os, bits);
}

inline void get_bytes(std::istream& is, std::span<std::uint8_t> bytes) {
    is.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (is.gcount() != static_cast<std::streamsize>(bytes.size())) {
        throw format_error("unexpected end of data");
    }
}

template <typename T>
T get_le(std::istream& is) {
    static_assert(std::is_integral_v<T> && std::is_unsigned_v<T>);
    std::uint8_t buf[sizeof(T)];
    get_bytes(is, buf);
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        value |= static_cast<T>(buf[i]) << (8 * i);
    }
    return value;
}

inline double get_f64(std::istream& is) {
    std::uint64_t bits = get_le<std::uint64_t>(is);
    double value;
    std::memcpy(&value, &bits, sizeof(value));
    return value;
}

inline void expect_magic(std::istream& is, const char (&magic)[5], const char* what) {
    std::uint8_t buf[4];
    get_bytes(is, buf);
    if (std::memcmp(buf, magic, 4) != 0) {
        throw format_error(std::string("bad magic for ") + what);
    }
}

inline void put_magic(std::ostream& os, const char (&magic)[5]) {
    os.write(magic, 4);
    if (!os) throw io_error("write failed");
}

} // namespace blob::detail
