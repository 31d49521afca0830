#pragma once

namespace skc {

enum class Flag { definitely, maybe };

inline const char* flag_name(Flag f) {
  return f == Flag::definitely ? "definitely" : "maybe";
}

// Output of a self-knowingly correct algorithm: whenever the flag is
// definitely, the value equals the target function.
template <class T>
struct SkcOutput {
  T value{};
  Flag flag = Flag::maybe;

  bool definite() const { return flag == Flag::definitely; }
};

}  // namespace skc
