#pragma once

#include <vector>

#include "skc/elections.hpp"
#include "skc/self_knowing.hpp"

namespace skc {

// Number of sequential adjacent-preference exchanges.
using Score = int;

// exact_score_lift refuses instances whose residual-deficit state space
// exceeds this product.
inline constexpr long kLiftStateLimit = 10'000'000;
// exact_score_bfs refuses instances with more than this many profiles.
inline constexpr long kBfsProfileLimit = 1'000'000;

// Minimum total lift amounts making c a Condorcet winner, by dynamic
// programming over residual deficits. Throws GuardError past kLiftStateLimit.
Score exact_score_lift(const DodgsonTriple& t);

// Literal definition: breadth-first distance over single adjacent swaps to
// the nearest profile where c is a Condorcet winner. Tiny instances only;
// serves as the validation oracle for exact_score_lift.
Score exact_score_bfs(const DodgsonTriple& t);

// Argmin set of exact scores, ascending by candidate index.
std::vector<CandidateId> dodgson_winners_exact(const Election& e);

// Greedy-Score: (deficit sum, definitely) on nice triples, otherwise the
// deficit sum as a placeholder flagged maybe.
SkcOutput<Score> greedy_score(const DodgsonTriple& t);

// Greedy-Winner: definite iff every per-candidate Greedy-Score is definite;
// then answers whether c attains the minimum score.
SkcOutput<bool> greedy_winner(const Election& e, CandidateId c);

}  // namespace skc
