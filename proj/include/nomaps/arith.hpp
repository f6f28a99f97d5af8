#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nomaps {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a quantity that must be an integer is not (a transcription or
/// model bug, never a user error).
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer pow2(long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// p/q in canonical form.
inline Rational frac(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("frac: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Integer to_integer(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw IntegralityError(what + ": non-integral value " + q.get_str());
  return q.get_num();
}

}  // namespace nomaps
