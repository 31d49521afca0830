#include "skc/bitstring.hpp"

#include <bit>

#include "skc/errors.hpp"

namespace skc {

BitString bitstring_from_text(const std::string& text) {
  if (text.size() > 63)
    throw ParseError("bitstring longer than 63 characters: " + text);
  BitString x{static_cast<int>(text.size()), 0};
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw ParseError("bitstring contains a character other than 0/1: " + text);
    x.bits = (x.bits << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return x;
}

std::string to_text(const BitString& x) {
  std::string s(static_cast<size_t>(x.length), '0');
  for (int i = 0; i < x.length; ++i)
    if (x.bit(i)) s[static_cast<size_t>(i)] = '1';
  return s;
}

int popcount(const BitString& x) { return std::popcount(x.bits); }

}  // namespace skc
