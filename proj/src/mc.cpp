#include "skc/mc.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "skc/dodgson.hpp"
#include "skc/rng.hpp"

namespace skc {

namespace {

Election sample_from_stream(int m, int n, RandomStream& rng) {
  Election e;
  e.m = m;
  e.votes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vote v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    shuffle(v, rng);
    e.votes.push_back(std::move(v));
  }
  return e;
}

bool trial_hits(McEvent event, int m, int n, std::uint64_t seed,
                std::uint64_t trial) {
  RandomStream rng(seed, trial);
  const Election e = sample_from_stream(m, n, rng);
  if (event == McEvent::not_nice) {
    const CandidateId c = static_cast<CandidateId>(
        rng.next_below(static_cast<std::uint64_t>(m)));
    return !is_nice({e, c}).nice;
  }
  for (CandidateId c = 0; c < m; ++c)
    if (!is_nice({e, c}).nice) return true;  // some Greedy-Score says maybe
  return false;
}

}  // namespace

const char* event_name(McEvent event) {
  return event == McEvent::not_nice ? "not_nice" : "any_candidate_maybe";
}

Election sample_election(int m, int n, std::uint64_t seed, std::uint64_t trial) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("sample_election: need m >= 1 and n >= 1");
  RandomStream rng(seed, trial);
  return sample_from_stream(m, n, rng);
}

FrequencyEstimate estimate_event(McEvent event, int m, int n,
                                 std::uint64_t trials, std::uint64_t seed,
                                 Exec exec) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("estimate_event: need m >= 1 and n >= 1");
  if (trials < 1) throw std::invalid_argument("estimate_event: need trials >= 1");
  FrequencyEstimate est;
  est.event = event;
  est.m = m;
  est.n = n;
  est.trials = trials;
  est.seed = seed;
  est.successes =
      count_indices(exec, static_cast<std::int64_t>(trials),
                    [&](std::int64_t trial) {
                      return trial_hits(event, m, n, seed,
                                        static_cast<std::uint64_t>(trial));
                    });
  return est;
}

double bound_lemma_a3(int m, int n) {
  if (m < 2) throw std::invalid_argument("bound_lemma_a3: need m >= 2");
  return 2.0 * (m - 1) * std::exp(-static_cast<double>(n) / (8.0 * m * m));
}

double bound_thm_a4(int m, int n) {
  if (m < 2) throw std::invalid_argument("bound_thm_a4: need m >= 2");
  return 2.0 * (static_cast<double>(m) * m - m) *
         std::exp(-static_cast<double>(n) / (8.0 * m * m));
}

double confidence_upper(const FrequencyEstimate& est, double level) {
  if (est.trials < 1)
    throw std::invalid_argument("confidence_upper: need trials >= 1");
  if (!(level > 0.0 && level < 1.0)) {
    if (level >= 1.0) return 1.0;
    throw std::invalid_argument("confidence_upper: level must be in (0, 1)");
  }
  const double slack =
      std::sqrt(std::log(1.0 / (1.0 - level)) /
                (2.0 * static_cast<double>(est.trials)));
  const double upper = est.p_hat() + slack;
  return upper > 1.0 ? 1.0 : upper;
}

}  // namespace skc
