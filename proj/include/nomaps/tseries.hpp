#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomaps/exec.hpp"
#include "nomaps/mpoly.hpp"

namespace nomaps {

/// Raised when a series operation would read a coefficient outside the
/// validity window of one of its operands.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent series in t with MPoly coefficients.
///
/// Every series carries its validity window [min_order, max_order]: all
/// coefficients below min_order are exactly zero, those inside the window are
/// exact, and nothing is known above max_order. Series that are polynomials
/// in t (closed-form prefactors) are "exact" and never limit a window.
class TSeries {
 public:
  static constexpr int kExact = 1 << 28;

  /// The exact zero series.
  TSeries() = default;
  /// coeffs[i] is the coefficient of t^(min_order + i); window ends at max_order.
  TSeries(int min_order, std::vector<MPoly> coeffs, int max_order = kExact);

  static TSeries zero(int max_order);
  static TSeries monomial(const MPoly& c, int k, int max_order = kExact);
  static TSeries constant(const MPoly& c) { return monomial(c, 0); }

  int min_order() const { return min_order_; }
  int max_order() const { return max_order_; }
  bool exact() const { return max_order_ >= kExact; }
  /// Index of the first nonzero coefficient, or max_order + 1 if none is known.
  int valuation() const;
  /// Index of the last stored nonzero coefficient, or min_order - 1.
  int last_nonzero() const;
  /// Coefficient of t^k; throws WindowError past max_order.
  const MPoly& coeff(int k) const;
  bool is_zero_on_window() const;
  struct Location {
    int order;
    MPoly::Exponent monomial;
    Rational value;
  };
  std::optional<Location> first_nonzero() const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  TSeries operator-() const;
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const MPoly& c) { return a.times(c); }
  friend TSeries operator*(const MPoly& c, const TSeries& a) { return a.times(c); }
  friend TSeries operator*(const TSeries& a, const Rational& c) { return a.scaled(c); }
  friend TSeries operator*(const Rational& c, const TSeries& a) { return a.scaled(c); }

  TSeries scaled(const Rational& c) const;
  TSeries times(const MPoly& c) const;
  /// Exact division of every coefficient by a nonzero rational.
  TSeries divided_by(const Rational& c) const;
  /// Multiplication by t^k for any integer k (k < 0 divides).
  TSeries mul_t(int k) const;
  /// d/dt; the window loses its top order.
  TSeries dt() const;
  /// t d/dt, same window.
  TSeries t_dt() const;
  /// Exact division of every coefficient by a variable.
  TSeries divided_by_var(Var x) const;
  TSeries map_coeffs(const std::function<MPoly(const MPoly&)>& f) const;
  TSeries truncated(int max_order) const;

  bool operator==(const TSeries& o) const;
  std::string str() const;

 private:
  void normalize();

  int min_order_ = 0;
  int max_order_ = kExact;
  std::vector<MPoly> coeffs_;  // t^(min_order_) .. at most t^(max_order_)
};

/// Cauchy product kernels. The serial one is the reference implementation.
TSeries mul(const TSeries& a, const TSeries& b, Exec exec);

}  // namespace nomaps
