#pragma once

#include <gmpxx.h>

#include <string>

#include "torifan/error.hpp"

namespace torifan {

using Int = mpz_class;
using Rat = mpq_class;

// den != 0; result canonical (lowest terms, positive denominator).
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(Err::BadParameters, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p/q" in lowest terms, plain "p" for integers.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail(Err::ParseError, "not an integer: '" + s + "'");
  }
}

// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    if (q.get_den() == 0) fail(Err::ParseError, "zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(Err::ParseError, "not a rational: '" + s + "'");
  }
}

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace torifan
