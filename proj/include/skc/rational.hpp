#pragma once

#include <gmpxx.h>

#include <string>

namespace skc {

// All probability mass in this project is exact: arbitrary-precision
// integers and canonical rationals.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_ratio(long num, long den) {
  return make_ratio(Integer(num), Integer(den));
}

inline Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Canonical GMP text: "num/den", or just "num" when den == 1.
inline std::string fraction_str(const Rational& q) { return q.get_str(); }

}  // namespace skc
