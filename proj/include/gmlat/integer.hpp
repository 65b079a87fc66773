#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmlat {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised when an operation's precondition on its inputs is violated.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction fails one of its own verified postconditions.
class PostconditionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an enumeration would exceed its configured candidate cap.
class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Floor division for arbitrary-precision integers (den > 0 not required).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least nonnegative residue of a modulo |m|.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

/// Representative of x modulo m (m > 0) in [0, m).
inline Rational reduce_mod(const Rational& x, const Integer& m) {
  Rational r = x - Rational(m) * Rational(floor_of(x / Rational(m)));
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline bool fits_int64(const Integer& x) {
  return mpz_fits_slong_p(x.get_mpz_t()) != 0 && sizeof(long) == 8;
}

inline std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace gmlat
