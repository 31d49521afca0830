#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

#include "skc/junta.hpp"

namespace skc {

// Bit layout for the toy SAT language (part of the artifact's contract;
// membership verdicts change with the encoding, so it is fixed here):
//
//   A length-n string encodes a CNF formula over v = ceil(n/6) variables.
//     bit 0          falsity header: 1 appends the empty clause, making the
//                    formula unsatisfiable regardless of the body
//     bits 1..       a stream of complete clauses, each three literals wide;
//                    a literal is a sign bit (1 = negated) followed by
//                    w = max(1, bit_width(v-1)) index bits
//     leftover       the trailing (n-1) mod 3(w+1) bits must all be 0
//
//   A string whose clause stream names a variable index >= v, or whose
//   leftover bits are not all 0, fails syntactic decoding and is not in the
//   language. A syntactically valid string is in the language iff its
//   formula is satisfiable, decided by exhaustive search over the 2^v
//   assignments. Zero clauses with header 0 is the empty conjunction,
//   trivially satisfiable.
//
//   Pos(n) = 0^n       all-positive unit-stream; trivially satisfiable
//   Neg(n) = 1 0^(n-1) header asserts the empty clause; unsatisfiable
//
// Both designators exist at every length, so the computed threshold is 1.

namespace {

struct Literal {
  int var = 0;
  bool negated = false;
};

struct DecodedCnf {
  bool valid = false;
  bool falsum = false;  // header bit set
  int vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

int index_width(int vars) {
  return std::max(1, static_cast<int>(std::bit_width(
                         static_cast<unsigned>(vars - 1))));
}

DecodedCnf decode(const BitString& x) {
  DecodedCnf cnf;
  if (x.length < 1) return cnf;
  cnf.vars = (x.length + 5) / 6;
  cnf.falsum = x.bit(0);
  const int w = index_width(cnf.vars);
  const int clause_width = 3 * (w + 1);
  const int body = x.length - 1;
  const int clause_count = body / clause_width;
  int at = 1;
  for (int c = 0; c < clause_count; ++c) {
    std::array<Literal, 3> clause;
    for (auto& lit : clause) {
      lit.negated = x.bit(at++);
      int index = 0;
      for (int b = 0; b < w; ++b) index = (index << 1) | x.bit(at++);
      if (index >= cnf.vars) return cnf;  // invalid index
      lit.var = index;
    }
    cnf.clauses.push_back(clause);
  }
  for (; at < x.length; ++at)
    if (x.bit(at)) return cnf;  // nonzero leftover
  cnf.valid = true;
  return cnf;
}

bool satisfiable(const DecodedCnf& cnf) {
  if (cnf.falsum) return false;
  const std::uint32_t assignments = 1u << cnf.vars;
  for (std::uint32_t a = 0; a < assignments; ++a) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (const Literal& lit : clause) {
        const bool value = (a >> lit.var) & 1u;
        if (value != lit.negated) { sat = true; break; }
      }
      if (!sat) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

bool toy_sat_member(const BitString& x) {
  const DecodedCnf cnf = decode(x);
  return cnf.valid && satisfiable(cnf);
}

BitString toy_sat_pos(int n) { return BitString{n, 0}; }

BitString toy_sat_neg(int n) {
  return BitString{n, std::uint64_t{1} << (n - 1)};
}

}  // namespace

PiercedSet toy_pierced_sat() {
  PiercedSet ps;
  ps.member = toy_sat_member;
  ps.pos = toy_sat_pos;
  ps.neg = toy_sat_neg;
  // computed, not assumed: first length where both designators decode as
  // promised
  ps.threshold = 0;
  for (int n = 1; n <= 32; ++n) {
    if (toy_sat_member(toy_sat_pos(n)) && !toy_sat_member(toy_sat_neg(n)) &&
        toy_sat_pos(n) != toy_sat_neg(n)) {
      ps.threshold = n;
      break;
    }
  }
  if (ps.threshold == 0)
    throw std::logic_error("toy_pierced_sat: no usable designator length");
  return ps;
}

}  // namespace skc
