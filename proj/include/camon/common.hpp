#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace camon {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Thrown when an operation would exceed a configured size cap
/// (enumeration caps, rule-space caps, word-length caps).
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the text-format parsers on malformed input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base^exp, throwing CapExceededError if the result would exceed `limit`.
inline u64 checked_pow(u64 base, u64 exp, u64 limit, const char* what) {
  u64 result = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) {
      throw CapExceededError(std::string(what) + ": " + std::to_string(base) +
                             "^" + std::to_string(exp) + " exceeds cap " +
                             std::to_string(limit));
    }
    result *= base;
  }
  if (result > limit) {
    throw CapExceededError(std::string(what) + " exceeds cap " +
                           std::to_string(limit));
  }
  return result;
}

}  // namespace camon
