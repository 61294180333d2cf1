#pragma once

#include <stdexcept>
#include <string>

namespace blob {

// Single-use key material ran out: fewer than ell functional entries left.
class exhaustion_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation was asked to exceed a configured size cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or truncated serialized data.
class format_error : public io_error {
public:
    using io_error::io_error;
};

// A protocol invariant failed at runtime (e.g. an authorized decryption
// produced the wrong plaintext).
class protocol_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace blob
