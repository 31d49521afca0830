#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skc/errors.hpp"

namespace skc {

using CandidateId = int;

// One voter's strict preference order, most-preferred first; always a
// permutation of 0..m-1.
using Vote = std::vector<CandidateId>;

struct Election {
  int m = 0;               // candidate count
  std::vector<Vote> votes; // one permutation per voter

  int voters() const { return static_cast<int>(votes.size()); }
  bool operator==(const Election&) const = default;
};

// An election plus a designated candidate c < m.
struct DodgsonTriple {
  Election election;
  CandidateId c = 0;
};

// wins[i][j] = voters ranking i above j; wins[i][j] + wins[j][i] = n, i != j.
struct PairwiseTally {
  int m = 0;
  std::vector<int> wins;  // row-major m*m, zero diagonal

  int at(int i, int j) const {
    return wins[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(j)];
  }
};

// Votes the designated candidate still needs against each opponent to hold a
// strict majority; the entry for the candidate itself is 0.
struct DeficitVector {
  CandidateId c = 0;
  std::vector<int> deficit;  // size m

  int sum() const { return std::accumulate(deficit.begin(), deficit.end(), 0); }
};

struct NicenessWitness {
  bool nice = false;
  // witness[d] = votes placing the designated candidate exactly one position
  // below candidate d; witness[c] is 0 by convention.
  std::vector<int> witness;
};

// The smallest vote count that is a strict majority of n, for even and odd n.
constexpr int majority_threshold(int n) { return n / 2 + 1; }

// Throws std::invalid_argument when an invariant is violated.
void validate(const Election& e);

// Native format: optional '#' comment lines, a header "m n", then exactly n
// lines each holding a space-separated permutation of 0..m-1.
Election parse_election(std::string_view text);
std::string serialize_election(const Election& e);

struct NamedElection {
  Election election;
  std::vector<std::string> names;  // empty strings where the file gave none
};

// PrefLib SOC-style reader: '#' metadata header (NUMBER ALTERNATIVES,
// optional ALTERNATIVE NAME lines), then "count: r1,r2,..." order lines with
// 1-based candidate ids, expanded by multiplicity.
NamedElection parse_preflib(std::string_view text);

PairwiseTally pairwise_tally(const Election& e);
std::optional<CandidateId> condorcet_winner(const Election& e);
DeficitVector deficits(const DodgsonTriple& t);
NicenessWitness is_nice(const DodgsonTriple& t);

}  // namespace skc
