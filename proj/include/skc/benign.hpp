#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "skc/bitstring.hpp"
#include "skc/errors.hpp"
#include "skc/parallel.hpp"
#include "skc/rational.hpp"
#include "skc/self_knowing.hpp"

namespace skc {

// Exhaustive sweeps over Sigma^n stop here.
inline constexpr int kMaxEnumerableLength = 24;
// poly_on_average_partial_sum enumerates every length up to this.
inline constexpr int kMaxPartialSumLength = 16;

template <class T>
using SkcAlgorithm = std::function<SkcOutput<T>(const BitString&)>;

// nullopt plays the "?" role; any returned value must be correct.
template <class T>
using BenignScheme =
    std::function<std::optional<T>(const BitString&, const Rational& delta)>;

// Exact per-string probability mass.
using Density = std::function<Rational(const BitString&)>;
using TargetFn = std::function<std::uint64_t(const BitString&)>;

// Mass 1/(n(n+1)2^n) for |x| = n >= 1; the empty string carries weight zero.
Rational std_uniform_density(const BitString& x);
Rational std_uniform_length_mass(int n);      // 1/(n(n+1))
Rational std_uniform_cumulative_mass(int n);  // n/(n+1), telescoped
Density std_uniform();

// Simulates the scheme at tolerance 1/(|x|+1)^3; "?" becomes
// (placeholder, maybe), any value y becomes (y, definitely).
template <class T>
SkcAlgorithm<T> wrap_benign(BenignScheme<T> scheme, T maybe_placeholder) {
  return [scheme = std::move(scheme),
          maybe_placeholder](const BitString& x) -> SkcOutput<T> {
    const Integer np1 = Integer(x.length) + 1;
    const Rational delta = make_ratio(Integer(1), np1 * np1 * np1);
    if (std::optional<T> y = scheme(x, delta)) return {*y, Flag::definitely};
    return {maybe_placeholder, Flag::maybe};
  };
}

// Fraction of length-n inputs flagged maybe; equals Prob under the uniform
// within-length slice. Guarded at kMaxEnumerableLength.
template <class T>
Rational maybe_fraction(const SkcAlgorithm<T>& alg, int n,
                        Exec exec = Exec::Parallel) {
  if (n < 0 || n > kMaxEnumerableLength)
    throw GuardError("maybe_fraction: length " + std::to_string(n) +
                     " exceeds the enumeration guard of " +
                     std::to_string(kMaxEnumerableLength));
  const std::int64_t total = static_cast<std::int64_t>(strings_of_length(n));
  const std::uint64_t maybes =
      count_indices(exec, total, [&](std::int64_t v) {
        return alg(BitString{n, static_cast<std::uint64_t>(v)}).flag ==
               Flag::maybe;
      });
  return make_ratio(Integer(static_cast<unsigned long>(maybes)),
                    Integer(1) << n);
}

// Worst case permitted by the benign contract: answers "?" on the largest
// lexicographic prefix of Sigma^top whose mass, relative to the cumulative
// mass at lengths <= top, stays within delta; correct everywhere else.
BenignScheme<std::uint64_t> adversarial_benign_scheme(TargetFn f, int top);

enum class ProbMode { at, upto };

// Exact probability of the event under the length-n slice (at) or under the
// restriction to lengths 1..n (upto). Throws ZeroMassError when the
// conditioning slice carries no mass.
Rational prob_of_event(const Density& density,
                       const std::function<bool(const BitString&)>& event,
                       int n, ProbMode mode, Exec exec = Exec::Parallel);

struct PartialSum {
  bool exact = true;  // false when t^epsilon needed floating evaluation
  Rational value;     // set when exact
  double approx = 0;  // always set
};

// Finite prefix of the polynomial-on-the-average series:
// sum over 1 <= |x| <= maxlen of density(x) * t(x)^epsilon / |x|.
// Diagnostic only; integer epsilon is evaluated exactly, fractional epsilon
// falls back to 64-bit floating point and is flagged inexact.
PartialSum poly_on_average_partial_sum(const TargetFn& runtime,
                                       const Density& density,
                                       const Rational& epsilon, int maxlen,
                                       Exec exec = Exec::Parallel);

// Text-ingestable "bitstring value" table, one pair per line; '#' comments
// and blank lines are ignored.
class FunctionTable {
 public:
  static FunctionTable parse(std::string_view text);
  std::string serialize() const;  // canonical: sorted by length then value

  void set(const BitString& x, std::uint64_t value);
  std::optional<std::uint64_t> lookup(const BitString& x) const;
  bool covers_all_lengths_through(int maxlen) const;
  TargetFn as_function() const;  // throws std::out_of_range on a miss

 private:
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> entries_;
};

}  // namespace skc
