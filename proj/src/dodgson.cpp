#include "skc/dodgson.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <deque>
#include <numeric>
#include <string>

namespace skc {

namespace {

constexpr int kInf = INT_MAX / 2;

// Lexicographic rank of a permutation (identity ranks 0).
long rank_perm(const Vote& p) {
  long r = 0;
  const int m = static_cast<int>(p.size());
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (p[j] < p[i]) ++smaller;
    r = r * (m - i) + smaller;
  }
  return r;
}

Vote unrank_perm(long r, int m) {
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(r % (m - i));
    r /= (m - i);
  }
  std::vector<CandidateId> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  Vote p;
  p.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    p.push_back(*it);
    pool.erase(it);
  }
  return p;
}

}  // namespace

Score exact_score_lift(const DodgsonTriple& t) {
  const Election& e = t.election;
  const DeficitVector dv = deficits(t);

  std::vector<int> slot(static_cast<std::size_t>(e.m), -1);
  std::vector<long> radix;
  for (CandidateId d = 0; d < e.m; ++d) {
    const int need = dv.deficit[static_cast<std::size_t>(d)];
    if (need > 0) {
      slot[static_cast<std::size_t>(d)] = static_cast<int>(radix.size());
      radix.push_back(need + 1);
    }
  }
  if (radix.empty()) return 0;  // already a Condorcet winner

  long states = 1;
  std::vector<long> stride(radix.size());
  for (std::size_t k = 0; k < radix.size(); ++k) {
    stride[k] = states;
    states *= radix[k];
    if (states > kLiftStateLimit)
      throw GuardError("deficit state space exceeds the " +
                       std::to_string(kLiftStateLimit) +
                       "-state guard (m=" + std::to_string(e.m) +
                       ", n=" + std::to_string(e.voters()) +
                       "); use exact_score_bfs or a smaller instance");
  }

  // dist over residual-deficit tuples; index sum(r_k * stride_k), start at
  // the full deficits (the maximal index).
  std::vector<int> cur(static_cast<std::size_t>(states), kInf);
  std::vector<int> nxt(static_cast<std::size_t>(states), kInf);
  cur[static_cast<std::size_t>(states - 1)] = 0;

  for (const Vote& v : e.votes) {
    std::fill(nxt.begin(), nxt.end(), kInf);
    const int pos = static_cast<int>(
        std::find(v.begin(), v.end(), t.c) - v.begin());
    for (long s = 0; s < states; ++s) {
      const int base = cur[static_cast<std::size_t>(s)];
      if (base >= kInf) continue;
      nxt[static_cast<std::size_t>(s)] =
          std::min(nxt[static_cast<std::size_t>(s)], base);
      long s2 = s;
      for (int lift = 1; lift <= pos; ++lift) {
        // lifting by `lift` passes exactly the `lift` candidates directly
        // above c in this vote
        const CandidateId passed = v[static_cast<std::size_t>(pos - lift)];
        const int k = slot[static_cast<std::size_t>(passed)];
        if (k >= 0 && (s2 / stride[static_cast<std::size_t>(k)]) %
                              radix[static_cast<std::size_t>(k)] > 0)
          s2 -= stride[static_cast<std::size_t>(k)];
        nxt[static_cast<std::size_t>(s2)] =
            std::min(nxt[static_cast<std::size_t>(s2)], base + lift);
      }
    }
    cur.swap(nxt);
  }

  assert(cur[0] < kInf);  // lifting c to the top everywhere always suffices
  return cur[0];
}

Score exact_score_bfs(const DodgsonTriple& t) {
  const Election& e = t.election;
  const int m = e.m;
  const int n = e.voters();

  long fact = 1;
  for (int i = 2; i <= m; ++i) {
    fact *= i;
    if (fact > kBfsProfileLimit)
      throw GuardError("profile space exceeds the " +
                       std::to_string(kBfsProfileLimit) + "-profile guard (m=" +
                       std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  long profiles = 1;
  for (int i = 0; i < n; ++i) {
    profiles *= fact;
    if (profiles > kBfsProfileLimit)
      throw GuardError("profile space exceeds the " +
                       std::to_string(kBfsProfileLimit) + "-profile guard (m=" +
                       std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }

  const int threshold = majority_threshold(n);
  std::vector<Vote> votes(e.votes);

  auto decode = [&](long id) {
    for (int i = 0; i < n; ++i) {
      votes[static_cast<std::size_t>(i)] = unrank_perm(id % fact, m);
      id /= fact;
    }
  };
  auto encode = [&]() {
    long id = 0;
    for (int i = n - 1; i >= 0; --i)
      id = id * fact + rank_perm(votes[static_cast<std::size_t>(i)]);
    return id;
  };
  auto accepts = [&]() {
    for (CandidateId d = 0; d < m; ++d) {
      if (d == t.c) continue;
      int wins = 0;
      for (const Vote& v : votes) {
        for (CandidateId x : v) {
          if (x == t.c) { ++wins; break; }
          if (x == d) break;
        }
      }
      if (wins < threshold) return false;
    }
    return true;
  };

  const long start = encode();
  std::vector<int> dist(static_cast<std::size_t>(profiles), -1);
  std::deque<long> queue;
  dist[static_cast<std::size_t>(start)] = 0;
  queue.push_back(start);

  while (!queue.empty()) {
    const long id = queue.front();
    queue.pop_front();
    decode(id);
    if (accepts()) return dist[static_cast<std::size_t>(id)];
    long stride = 1;
    for (int i = 0; i < n; ++i, stride *= fact) {
      Vote& v = votes[static_cast<std::size_t>(i)];
      const long old_rank = rank_perm(v);
      for (int p = 0; p + 1 < m; ++p) {
        std::swap(v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(p + 1)]);
        const long neighbor = id + (rank_perm(v) - old_rank) * stride;
        std::swap(v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(p + 1)]);
        if (dist[static_cast<std::size_t>(neighbor)] < 0) {
          dist[static_cast<std::size_t>(neighbor)] =
              dist[static_cast<std::size_t>(id)] + 1;
          queue.push_back(neighbor);
        }
      }
    }
  }
  assert(false);  // some profile always makes c a Condorcet winner
  return -1;
}

std::vector<CandidateId> dodgson_winners_exact(const Election& e) {
  std::vector<Score> scores(static_cast<std::size_t>(e.m), 0);
  for (CandidateId c = 0; c < e.m; ++c)
    scores[static_cast<std::size_t>(c)] = exact_score_lift({e, c});
  const Score best = *std::min_element(scores.begin(), scores.end());
  std::vector<CandidateId> winners;
  for (CandidateId c = 0; c < e.m; ++c)
    if (scores[static_cast<std::size_t>(c)] == best) winners.push_back(c);
  return winners;
}

SkcOutput<Score> greedy_score(const DodgsonTriple& t) {
  const DeficitVector d = deficits(t);
  const NicenessWitness w = is_nice(t);
  // on non-nice triples the deficit sum is only a deterministic placeholder
  return {d.sum(), w.nice ? Flag::definitely : Flag::maybe};
}

SkcOutput<bool> greedy_winner(const Election& e, CandidateId c) {
  bool all_definite = true;
  std::vector<Score> values(static_cast<std::size_t>(e.m), 0);
  for (CandidateId d = 0; d < e.m; ++d) {
    const SkcOutput<Score> out = greedy_score({e, d});
    values[static_cast<std::size_t>(d)] = out.value;
    all_definite = all_definite && out.definite();
  }
  const Score best = *std::min_element(values.begin(), values.end());
  const bool wins = values[static_cast<std::size_t>(c)] <= best;
  return {wins, all_definite ? Flag::definitely : Flag::maybe};
}

}  // namespace skc
