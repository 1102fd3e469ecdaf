#pragma once

// Shared integer aliases and error types.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace expsieve {

using u32  = std::uint32_t;
using u64  = std::uint64_t;
using i64  = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Bad inputs (flags, malformed files, out-of-range parameters). CLI maps
// these to exit code 2; everything else (I/O, overflow) maps to exit 3.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace expsieve
