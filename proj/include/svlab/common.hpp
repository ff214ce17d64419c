#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace svlab {

// User-facing input errors (bad configs, bad arguments, violated preconditions).
// The CLI maps these to exit code 1; anything else is an internal error (2).
struct UserError : std::runtime_error {
    explicit UserError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : UserError {
    explicit ShapeError(const std::string& msg) : UserError(msg) {}
};

struct InsufficientCandidates : UserError {
    explicit InsufficientCandidates(const std::string& msg) : UserError(msg) {}
};

struct EmptyAfterCuration : UserError {
    explicit EmptyAfterCuration(const std::string& msg) : UserError(msg) {}
};

struct UnboundSubject : UserError {
    explicit UnboundSubject(const std::string& msg) : UserError(msg) {}
};

// FNV-1a 64-bit. Used for artifact/provenance hashing; not cryptographic.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(uint64_t v);

}  // namespace svlab
