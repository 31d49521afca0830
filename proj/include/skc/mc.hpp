#pragma once

#include <cstdint>

#include "skc/elections.hpp"
#include "skc/parallel.hpp"

namespace skc {

enum class McEvent { not_nice, any_candidate_maybe };

const char* event_name(McEvent event);

struct FrequencyEstimate {
  McEvent event = McEvent::not_nice;
  int m = 0;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  double p_hat() const {
    return trials == 0 ? 0.0
                       : static_cast<double>(successes) /
                             static_cast<double>(trials);
  }
};

// n independent uniform rankings, fully determined by (seed, trial): every
// one of the (m!)^n profiles is equally likely.
Election sample_election(int m, int n, std::uint64_t seed, std::uint64_t trial);

// not_nice: draw a triple (election plus uniform designated candidate) and
// test niceness. any_candidate_maybe: draw an election and test whether any
// of the m Greedy-Score runs is non-definite. Schedule-invariant: trial k
// uses stream k of the master seed regardless of worker count.
FrequencyEstimate estimate_event(McEvent event, int m, int n,
                                 std::uint64_t trials, std::uint64_t seed,
                                 Exec exec = Exec::Parallel);

// Lemma A.3: 2(m-1) e^{-n/(8m^2)}.
double bound_lemma_a3(int m, int n);

// Theorem A.4: 2(m^2-m) e^{-n/(8m^2)} = m times the Lemma A.3 bound.
double bound_thm_a4(int m, int n);

// One-sided Hoeffding upper confidence limit, clamped to [0, 1].
double confidence_upper(const FrequencyEstimate& est, double level);

}  // namespace skc
