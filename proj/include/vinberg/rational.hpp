#pragma once

#include <gmpxx.h>

#include <string>

#include "vinberg/errors.hpp"

namespace vinberg {

// All verdict arithmetic is exact.  Int/Rat are GMP's arbitrary-precision
// integer and canonical-form rational types.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

inline Int to_int(const Rat& q) {
  require(is_integer(q), "to_int on a non-integer rational");
  return q.get_num();
}

// Canonical text form: "p/q" with q > 1, plain "n" for integers.
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    if (q.get_den() == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::InvalidArgument, "not a rational number: '" + s + "'");
  }
}

inline Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  }
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Exact quotient; the caller guarantees divisibility (Bareiss steps, HNF).
inline Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Floor quotient, used to put entries into [0, pivot).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// xgcd: g = gcd(a,b) >= 0 with g = u*a + v*b.
inline void xgcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace vinberg
