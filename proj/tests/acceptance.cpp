// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion thresholds are pinned here, not configurable.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "skc/benign.hpp"
#include "skc/dodgson.hpp"
#include "skc/elections.hpp"
#include "skc/junta.hpp"
#include "skc/mc.hpp"
#include "skc/rng.hpp"

using namespace skc;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool pass, const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what, detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::vector<Vote> all_perms3() {
  std::vector<Vote> out;
  Vote p{0, 1, 2};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <class Fn>
void for_each_profile3(int n, Fn&& fn) {
  static const std::vector<Vote> perms = all_perms3();
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    Election e;
    e.m = 3;
    for (int i : idx) e.votes.push_back(perms[static_cast<std::size_t>(i)]);
    fn(e);
    int k = n - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == 5) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
  }
}

Election random_election(int m, int n, RandomStream& rng) {
  Election e;
  e.m = m;
  for (int i = 0; i < n; ++i) {
    Vote v(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) v[static_cast<std::size_t>(c)] = c;
    shuffle(v, rng);
    e.votes.push_back(std::move(v));
  }
  return e;
}

// --- criterion 1: self-knowing correctness, exhaustive ----------------------

void criterion_1() {
  int violations = 0;
  int triples = 0;
  for_each_profile3(3, [&](const Election& e) {
    for (CandidateId c = 0; c < 3; ++c) {
      ++triples;
      const SkcOutput<Score> g = greedy_score({e, c});
      if (g.definite() && g.value != exact_score_bfs({e, c})) ++violations;
    }
  });
  report(1, "self-knowing correctness over all 648 m=3 n=3 triples",
         triples == 648 && violations == 0,
         "violations=" + std::to_string(violations));
}

// --- criterion 2: oracle equivalence ----------------------------------------

void criterion_2() {
  int mismatches = 0;
  int checked = 0;
  for_each_profile3(2, [&](const Election& e) {
    for (CandidateId c = 0; c < 3; ++c) {
      ++checked;
      if (exact_score_lift({e, c}) != exact_score_bfs({e, c})) ++mismatches;
    }
  });
  RandomStream rng(20240401, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const Election e = random_election(3, 3, rng);
    const CandidateId c = static_cast<CandidateId>(rng.next_below(3));
    ++checked;
    if (exact_score_lift({e, c}) != exact_score_bfs({e, c})) ++mismatches;
  }
  report(2, "exact_score_lift equals exact_score_bfs (108 exhaustive + 200 random)",
         checked == 308 && mismatches == 0,
         "mismatches=" + std::to_string(mismatches));
}

// --- criteria 3 & 4: Monte Carlo bound comparisons ---------------------------

std::string mc_detail(const FrequencyEstimate& est, double ci, double limit) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "p_hat=%.6g ci99=%.6g limit=%.6g",
                est.p_hat(), ci, limit);
  return buf;
}

void criterion_3() {
  const std::uint64_t trials = 20000;
  const std::uint64_t seed = 42;

  const FrequencyEstimate far_est =
      estimate_event(McEvent::not_nice, 3, 401, trials, seed);
  const double far_ci = confidence_upper(far_est, 0.99);
  const double far_bound = bound_lemma_a3(3, 401);
  const bool far_ok = far_ci <= 0.01526 && far_ci <= far_bound;

  const FrequencyEstimate near_est =
      estimate_event(McEvent::not_nice, 3, 201, trials, seed);
  const double near_ci = confidence_upper(near_est, 0.99);
  const bool near_ok = near_ci <= 0.2453;

  report(3, "Lemma A.3 at (3,401) vs 0.01526 and (3,201) vs 0.2453",
         far_ok && near_ok,
         mc_detail(far_est, far_ci, 0.01526) + "; " +
             mc_detail(near_est, near_ci, 0.2453));
}

void criterion_4() {
  const FrequencyEstimate est =
      estimate_event(McEvent::any_candidate_maybe, 3, 401, 20000, 42);
  const double ci = confidence_upper(est, 0.99);
  const double bound = bound_thm_a4(3, 401);
  report(4, "Theorem A.4 at (3,401) vs 0.0458", ci <= 0.0458 && ci <= bound,
         mc_detail(est, ci, 0.0458));
}

// --- criterion 5: Theorem 3.3 construction, exact -----------------------------

void criterion_5() {
  const PiercedSet ps = toy_pierced_sat();
  const DistributionEnsemble nu = junta_nu(ps);
  const Decider heuristic = pierced_heuristic(ps);
  bool ok = true;
  std::string detail = "N=" + std::to_string(ps.threshold);

  for (int n = ps.threshold; n <= 10; ++n) {
    const LengthDistribution slice = nu.slice(n);
    // slice sums to exactly 1, by closed form and by enumeration
    Rational enumerated(0);
    for (std::uint64_t v = 0; v < strings_of_length(n); ++v)
      enumerated += slice.mass_by_value(v);
    ok = ok && slice.total() == Rational(1) && enumerated == Rational(1);

    // error weight <= (2^n - 2)/2^{n^2} <= 2^{-(n^2-n)}
    const Rational weight = error_weight(heuristic, nu, ps.member, n);
    const Integer bulk = pow2(static_cast<unsigned long>(n) *
                              static_cast<unsigned long>(n));
    const Rational first = make_ratio(pow2(static_cast<unsigned long>(n)) - 2, bulk);
    const Rational second = make_ratio(
        Integer(1), pow2(static_cast<unsigned long>(n) *
                             static_cast<unsigned long>(n) -
                         static_cast<unsigned long>(n)));
    ok = ok && weight <= first && first <= second;
  }

  const LengthRange range{ps.threshold, 10};
  ok = ok && check_dichotomy(nu, Polynomial{{0, 0, 1}}, range).pass;
  ok = ok && check_balance(nu, ps.member, Rational(3), range, ps.threshold).pass;

  const AlmostUniformityReport au =
      check_almost_uniformity(nu, Rational(256), 2, range);
  ok = ok && !au.pass;  // must fail for K=256
  for (const auto& rec : au.records) {
    const Integer expected =
        pow2(static_cast<unsigned long>(rec.n) * static_cast<unsigned long>(rec.n) - 1) -
        pow2(static_cast<unsigned long>(rec.n) - 1) + 1;
    ok = ok && rec.worst_ratio == make_ratio(expected, Integer(1));
    if (rec.n == 3) {
      ok = ok && rec.worst_ratio == make_ratio(253, 1);
      detail += " ratio(3)=" + fraction_str(rec.worst_ratio);
    }
  }
  report(5, "Theorem 3.3 construction exact on lengths N..10", ok, detail);
}

// --- criterion 6: Theorem 2.1 bound, exhaustive -------------------------------

void criterion_6() {
  const TargetFn target = [](const BitString& x) {
    return static_cast<std::uint64_t>(popcount(x) & 1);
  };
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 12; ++n) {
    const auto alg = wrap_benign<std::uint64_t>(
        adversarial_benign_scheme(target, n), ~0ull);
    std::uint64_t maybes = 0;
    for (std::uint64_t v = 0; v < strings_of_length(n); ++v) {
      const BitString x{n, v};
      const SkcOutput<std::uint64_t> out = alg(x);
      if (out.definite()) {
        if (out.value != target(x)) ok = false;  // definite must be correct
      } else {
        ++maybes;
      }
    }
    const Rational fraction =
        make_ratio(Integer(static_cast<unsigned long>(maybes)),
                   pow2(static_cast<unsigned long>(n)));
    const Rational bound = make_ratio(Integer(n), Integer(n + 1) * (n + 1));
    ok = ok && fraction <= bound;
    if (n == 12) {
      ok = ok && bound == make_ratio(12, 169);
      detail = "fraction(12)=" + fraction_str(fraction) + " bound=12/169";
    }
  }
  report(6, "Theorem 2.1 wrapper bound n/(n+1)^2 on lengths 1..12", ok, detail);
}

// --- criterion 7: pad-set balance ---------------------------------------------

void criterion_7() {
  const PiercedSet ps = toy_pierced_sat();
  const std::vector<std::pair<const char*, Membership>> inners = {
      {"everything", [](const BitString&) { return true; }},
      {"nothing", [](const BitString&) { return false; }},
      {"even-parity", [](const BitString& x) { return popcount(x) % 2 == 0; }},
      {"toy-sat", ps.member},
  };
  const DistributionEnsemble u = uniform_ensemble();
  bool ok = true;
  for (const auto& [name, inner] : inners) {
    const Membership padded = pad_set(inner);
    for (int n = 2; n <= 14; ++n) {
      Rational in_mass(0);
      const LengthDistribution slice = u.slice(n);
      for (std::uint64_t v = 0; v < strings_of_length(n); ++v)
        if (padded(BitString{n, v})) in_mass += slice.mass_by_value(v);
      if (in_mass < make_ratio(1, 4) || in_mass > make_ratio(3, 4)) {
        ok = false;
        std::printf("      pad-set balance broken: inner=%s n=%d in_mass=%s\n",
                    name, n, fraction_str(in_mass).c_str());
      }
    }
  }
  report(7, "pad-set in-mass within [1/4, 3/4] on lengths 2..14 for 4 inner sets", ok);
}

// --- criterion 8: property suites ---------------------------------------------

#ifdef SKC_CLI_PATH
std::string capture_cli(const std::string& args) {
  const std::string cmd = std::string(SKC_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return output;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  pclose(pipe);
  return output;
}
#endif

void criterion_8() {
  bool ok = true;
  std::string detail;

  // pairwise-tally complementarity on seeded random elections
  {
    RandomStream rng(808, 0);
    for (int rep = 0; rep < 200 && ok; ++rep) {
      const int m = 1 + static_cast<int>(rng.next_below(6));
      const int n = 1 + static_cast<int>(rng.next_below(9));
      const Election e = random_election(m, n, rng);
      const PairwiseTally t = pairwise_tally(e);
      for (int i = 0; i < m && ok; ++i)
        for (int j = i + 1; j < m; ++j)
          if (t.at(i, j) + t.at(j, i) != n) ok = false;
    }
    if (!ok) detail += "complementarity broken;";
  }

  // Condorcet uniqueness, exhaustive m=3 n<=3
  {
    bool unique = true;
    for (int n = 1; n <= 3; ++n)
      for_each_profile3(n, [&](const Election& e) {
        const PairwiseTally t = pairwise_tally(e);
        const int threshold = majority_threshold(e.voters());
        int qualifying = 0;
        for (int c = 0; c < 3; ++c) {
          bool all = true;
          for (int d = 0; d < 3; ++d)
            if (d != c && t.at(c, d) < threshold) all = false;
          if (all) ++qualifying;
        }
        if (qualifying > 1) unique = false;
        if (static_cast<int>(condorcet_winner(e).has_value()) != qualifying)
          unique = false;
      });
    ok = ok && unique;
    if (!unique) detail += " condorcet uniqueness broken;";
  }

  // deficit / Condorcet equivalence
  {
    bool equiv = true;
    for_each_profile3(3, [&](const Election& e) {
      for (CandidateId c = 0; c < 3; ++c) {
        const DeficitVector d = deficits({e, c});
        const bool all_zero = d.sum() == 0;
        if (all_zero != (condorcet_winner(e) == c)) equiv = false;
      }
    });
    ok = ok && equiv;
    if (!equiv) detail += " deficit equivalence broken;";
  }

  // sampler determinism and chi-square uniformity at 99%
  {
    const Election a = sample_election(3, 5, 4242, 17);
    const Election b = sample_election(3, 5, 4242, 17);
    bool sampler_ok = a == b;

    std::array<int, 6> counts{};
    for (std::uint64_t trial = 0; trial < 60000; ++trial) {
      const Vote& v = sample_election(3, 1, 42, trial).votes[0];
      const int rank = v[0] * 2 + (v[1] > v[2] ? 1 : 0);
      ++counts[static_cast<std::size_t>(rank)];
    }
    double chi2 = 0;
    for (int c : counts) {
      const double diff = c - 10000.0;
      chi2 += diff * diff / 10000.0;
    }
    sampler_ok = sampler_ok && chi2 < 15.0863;  // df=5, 99%
    ok = ok && sampler_ok;
    char buf[64];
    std::snprintf(buf, sizeof(buf), " chi2=%.3f", chi2);
    detail += buf;
    if (!sampler_ok) detail += " sampler broken;";
  }

  // byte-identical CLI reruns
#ifdef SKC_CLI_PATH
  {
    const std::string mc_args = "mc --grid 3x31,3x61 --trials 2000 --seed 5 --format csv";
    const bool mc_same = capture_cli(mc_args) == capture_cli(mc_args);
    const std::string junta_args = "junta --lengths 1..8 --format csv";
    const bool junta_same = capture_cli(junta_args) == capture_cli(junta_args);
    const std::string demo_args = "wrapper-demo --lengths 1..10 --format csv";
    const bool demo_same = capture_cli(demo_args) == capture_cli(demo_args);
    ok = ok && mc_same && junta_same && demo_same;
    if (!(mc_same && junta_same && demo_same)) detail += " CLI rerun bytes differ;";
  }
#endif

  report(8, "property suites (tallies, uniqueness, deficits, sampler, CLI bytes)",
         ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0)
    std::printf("acceptance: all 8 criteria pass\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
