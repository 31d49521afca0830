#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace skc {

// A binary string of explicit length (up to 63 characters). The leftmost
// character is the most significant bit of `bits`, so numeric order on
// `bits` is lexicographic order within a length.
struct BitString {
  int length = 0;
  std::uint64_t bits = 0;

  // Character at position i (0 = leftmost), as a bool.
  bool bit(int i) const { return (bits >> (length - 1 - i)) & 1u; }

  auto operator<=>(const BitString&) const = default;
};

inline std::uint64_t strings_of_length(int n) { return std::uint64_t{1} << n; }

BitString bitstring_from_text(const std::string& text);  // throws ParseError
std::string to_text(const BitString& x);
int popcount(const BitString& x);

}  // namespace skc
