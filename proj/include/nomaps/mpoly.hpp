#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nomaps/arith.hpp"

namespace nomaps {

enum class Var { u, z, v };

/// Sparse polynomial in (u, z, v) with exact rational coefficients.
///
/// Terms are kept sorted in graded lexicographic order on (e_u, e_z, e_v)
/// and never hold a zero coefficient, so structural equality is polynomial
/// equality.
class MPoly {
 public:
  using Key = std::uint64_t;
  struct Term {
    Key key;
    Rational coeff;
  };
  struct Exponent {
    int u = 0, z = 0, v = 0;
    auto operator<=>(const Exponent&) const = default;
  };

  static constexpr int kMaxExponent = 0xFFFF;

  MPoly() = default;
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT: integers promote like scalars
  MPoly(const Rational& c);              // NOLINT

  static MPoly monomial(const Rational& c, int eu, int ez, int ev = 0);
  static MPoly var(Var x);
  /// Builds a canonical polynomial from arbitrary (possibly repeated, zero) terms.
  static MPoly from_terms(std::vector<Term> terms);

  static Key pack(int eu, int ez, int ev);
  static Exponent unpack(Key k);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(int eu, int ez, int ev = 0) const;
  int degree() const;        // -1 for the zero polynomial
  int degree_in(Var x) const;
  bool is_homogeneous(int d) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(long c, MPoly a) { return a *= Rational(c); }
  friend MPoly operator*(MPoly a, long c) { return a *= Rational(c); }
  MPoly operator-() const;
  bool operator==(const MPoly& o) const;

  /// this += c * p, without a temporary product.
  void add_scaled(const MPoly& p, const Rational& c);
  MPoly times_monomial(const Rational& c, int eu, int ez, int ev = 0) const;
  /// Exact division by a nonzero rational.
  MPoly divided_by(const Rational& c) const;

  /// Substitutes x -> x + delta (binomial expansion).
  MPoly shift(Var x, long delta) const;
  MPoly shift_u(long delta) const { return shift(Var::u, delta); }
  MPoly shift_v(long delta) const { return shift(Var::v, delta); }
  /// Exchanges two variables.
  MPoly swapped(Var a, Var b) const;
  /// Exact division by x; throws if some term has no factor x.
  MPoly divided_by_var(Var x) const;
  bool divisible_by_var(Var x) const;
  /// Keeps only the terms whose exponent of x equals e, and drops x.
  MPoly coefficient_of(Var x, int e) const;
  /// Applies t -> f(exponent) * t coefficient-wise (a diagonal operator).
  template <class F>
  MPoly diagonal(F&& factor) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.key, t.coeff * factor(unpack(t.key))});
    return from_terms(std::move(out));
  }

  Rational eval(const Rational& u, const Rational& z, const Rational& v = 0) const;

  /// sum_k lhs[k] * rhs[k], accumulated without intermediate polynomials.
  static MPoly sum_of_products(std::span<const std::pair<const MPoly*, const MPoly*>> pairs);

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

std::string monomial_str(MPoly::Exponent e);

}  // namespace nomaps
