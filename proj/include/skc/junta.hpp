#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skc/bitstring.hpp"
#include "skc/errors.hpp"
#include "skc/parallel.hpp"
#include "skc/polynomial.hpp"
#include "skc/rational.hpp"

namespace skc {

// Per-length enumeration guard: checkers sweep 2^n strings.
inline constexpr int kMaxJuntaLength = 16;

// One length slice, stored sparsely: a default mass shared by every string
// of the length plus explicit overrides. Immutable once built.
class LengthDistribution {
 public:
  LengthDistribution(int n, Rational default_mass)
      : n_(n), default_(std::move(default_mass)) {}

  int length() const { return n_; }
  Rational default_mass() const { return default_; }
  const std::map<std::uint64_t, Rational>& overrides() const { return overrides_; }

  void set(const BitString& x, Rational mass) { overrides_[x.bits] = std::move(mass); }

  Rational mass(const BitString& x) const { return mass_by_value(x.bits); }
  Rational mass_by_value(std::uint64_t bits) const {
    const auto it = overrides_.find(bits);
    return it == overrides_.end() ? default_ : it->second;
  }

  // Closed form; no enumeration.
  Rational total() const {
    Rational t = default_ * make_ratio(pow2(static_cast<unsigned long>(n_)) -
                                           Integer(overrides_.size()),
                                       Integer(1));
    for (const auto& [bits, mass] : overrides_) t += mass;
    return t;
  }

 private:
  int n_;
  Rational default_;
  std::map<std::uint64_t, Rational> overrides_;
};

struct DistributionEnsemble {
  std::function<LengthDistribution(int)> slice;
};

using Membership = std::function<bool(const BitString&)>;
using Decider = std::function<bool(const BitString&)>;

// A language with designated per-length in/out witnesses from length
// `threshold` on, both computable in time polynomial in n.
struct PiercedSet {
  Membership member;
  std::function<BitString(int)> pos;
  std::function<BitString(int)> neg;
  int threshold = 0;  // N
};

// Slice n: 1/2^n on every length-n string.
DistributionEnsemble uniform_ensemble();

// The hard-instance-focused ensemble over a pierced set: for n >= N the two
// designated strings each carry (1/2)(1 - (2^n-2)/2^{n^2}) and every other
// string carries 1/2^{n^2}; below N the slice is uniform.
DistributionEnsemble junta_nu(const PiercedSet& ps);

struct LengthRange {
  int lo = 0;
  int hi = -1;  // inclusive; empty when hi < lo
};

struct BalanceRecord {
  int n = 0;
  Rational in_mass;  // P_n = Prob over the slice of membership
  Rational margin;   // min(P_n - 1/c, (1 - 1/c) - P_n); negative = violated
  bool checked = false;  // n >= min_length
  bool pass = false;
};

struct BalanceReport {
  bool pass = false;
  bool vacuous = false;  // no checked length in range
  std::vector<BalanceRecord> records;
};

// Def 3.1(b) read per length: 1/c <= P_n <= 1 - 1/c for every n in range
// with n >= min_length.
BalanceReport check_balance(const DistributionEnsemble& e,
                            const Membership& member, const Rational& c,
                            LengthRange range, int min_length = 0,
                            Exec exec = Exec::Parallel);

struct DichotomyRecord {
  int n = 0;
  std::optional<Rational> min_nonzero;  // empty when the slice is all-zero
  Rational floor;                       // 2^{-p(n)}
  bool pass = false;
};

struct DichotomyReport {
  bool pass = false;
  std::vector<DichotomyRecord> records;
};

// Def 3.1(c): every nonzero mass at length n is >= 2^{-p(n)}.
DichotomyReport check_dichotomy(const DistributionEnsemble& e,
                                const Polynomial& p, LengthRange range,
                                Exec exec = Exec::Parallel);

struct AlmostUniformityRecord {
  int n = 0;
  bool checked = false;  // n > n0
  bool vacuous = false;  // fewer than 2 nonzero masses
  Rational worst_ratio;  // max nonzero / min nonzero (1 when vacuous)
  bool pass = false;
};

struct AlmostUniformityReport {
  bool pass = false;
  std::vector<AlmostUniformityRecord> records;
};

// All nonzero masses at each length n > n0 within a factor K of each other.
AlmostUniformityReport check_almost_uniformity(const DistributionEnsemble& e,
                                               const Rational& K, int n0,
                                               LengthRange range,
                                               Exec exec = Exec::Parallel);

// Accepts Pos(n), rejects Neg(n), accepts everything else.
Decider pierced_heuristic(const PiercedSet& ps);

// Exact probability weight of the misclassified strings at length n:
// mass of {x : (x not in L) <=> alg accepts x}.
Rational error_weight(const Decider& alg, const DistributionEnsemble& e,
                      const Membership& member, int n,
                      Exec exec = Exec::Parallel);

struct HeuristicBoundRecord {
  int n = 0;
  Rational weight;
  Rational limit;  // 1/q(n)
  bool checked = false;
  bool pass = false;
};

struct HeuristicBoundReport {
  bool pass = false;
  bool vacuous = false;
  std::vector<HeuristicBoundRecord> records;
};

// Def 3.1(2): error weight < 1/q(n) for every checked n >= threshold.
HeuristicBoundReport check_heuristic_bound(
    const std::vector<std::pair<int, Rational>>& weights, const Polynomial& q,
    int threshold);

// A' = {00x | x in Sigma*} union {1 x 1^{|x|^2+2} | x in A}.
Membership pad_set(Membership inner);

// A concrete uniquely well-pierced set: strings decode to small CNFs whose
// satisfiability is decided by exhaustive assignment search (layout
// documented in toy_sat.cpp); N is computed by scanning lengths.
PiercedSet toy_pierced_sat();

// --- report aggregation & serialization -----------------------------------

struct JuntaCheckParams {
  Rational balance_c = Rational(3);
  Polynomial dichotomy_p{{0, 0, 1}};  // n^2
  Rational uniformity_k = Rational(256);
  int uniformity_n0 = 2;
  Polynomial heuristic_q{{0, 1}};     // n
};

struct JuntaLengthRecord {
  int n = 0;
  Rational in_mass;
  Rational min_nonzero;
  Rational max_ratio;
};

struct JuntaReport {
  int version = 1;
  LengthRange range;
  int threshold = 0;  // pierced-set N
  JuntaCheckParams params;
  std::vector<JuntaLengthRecord> records;
  BalanceReport balance;
  DichotomyReport dichotomy;
  AlmostUniformityReport almost_uniformity;
  HeuristicBoundReport heuristic;
  std::vector<std::pair<int, Rational>> error_weights;
  bool any_vacuous = false;
  // Def 3.1(a) is never machine-checked; it stays an assumption.
  bool hardness_assumed = true;
};

JuntaReport run_junta_checks(const DistributionEnsemble& e,
                             const Membership& member, const Decider& alg,
                             int threshold, const JuntaCheckParams& params,
                             LengthRange range, Exec exec = Exec::Parallel);

std::string junta_report_text(const JuntaReport& r);
std::string junta_report_csv(const JuntaReport& r);

}  // namespace skc
