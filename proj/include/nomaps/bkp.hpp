#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nomaps/bipartite.hpp"
#include "nomaps/exec.hpp"
#include "nomaps/maps.hpp"
#include "nomaps/triangulations.hpp"
#include "nomaps/tseries.hpp"

namespace nomaps {

/// Part multiset [ell, 3^n3, 2^n2, 1^n1] with at most one part >= 4 (ell;
/// 0 when absent). Parts <= 3 are always counted in n3/n2/n1.
struct LambdaIndex {
  int ell = 0;
  int n3 = 0;
  int n2 = 0;
  int n1 = 0;

  static LambdaIndex from_parts(const std::vector<int>& parts);
  std::vector<int> parts() const;  // non-increasing
  int size() const { return ell + 3 * n3 + 2 * n2 + n1; }
  int length() const { return (ell > 0) + n3 + n2 + n1; }
  bool empty() const { return length() == 0; }
  int count(int part) const;
  /// Throws std::domain_error when a second part >= 4 would appear.
  LambdaIndex with(int part) const;
  LambdaIndex without(int part) const;
  std::string str() const;

  auto operator<=>(const LambdaIndex&) const = default;
};

enum class Model { maps, bipartite, triangulations };
const char* model_name(Model m);

/// Theta = sum H_n^g / (4n) t^(2n) from a maps table with every genus up to n_max.
TSeries maps_theta(const MapsTable& table, int n_max);
/// eta = sum K_n^g / (2n) t^n.
TSeries bip_eta(const BipTable& table, int n_max);
/// Xi = sum t_n^g / (12n) t^(6n) z^(2n) u^(n+2-2g).
TSeries tri_xi(const TriTable& table, int n_max);

/// Evaluates the specialised derivatives F_lambda of one model on a
/// truncated base series, with memoisation.
class SeriesContext {
 public:
  SeriesContext(Model model, TSeries base, Exec exec = Exec::parallel);

  Model model() const { return model_; }
  const TSeries& base() const { return base_; }
  const TSeries& ftheta(const LambdaIndex& lambda);
  void clear_memo() { memo_.clear(); }
  std::size_t memo_size() const { return memo_.size(); }
  Exec exec() const { return exec_; }

 private:
  TSeries compute(const LambdaIndex& lambda);
  TSeries compute_maps(const LambdaIndex& lambda);
  TSeries compute_bip(const LambdaIndex& lambda);
  TSeries compute_tri(const LambdaIndex& lambda);
  // sum over a + b = i of a b (F_{a,mu} F_{b,mu'} binomially split + F_{a,b,mu})
  TSeries quadratic(int i, const LambdaIndex& mu, bool with_threes);
  TSeries mul(const TSeries& a, const TSeries& b) const { return nomaps::mul(a, b, exec_); }

  Model model_;
  TSeries base_;
  Exec exec_;
  std::map<LambdaIndex, TSeries> memo_;
};

/// Polynomial in the symbols F_lambda with rational coefficients.
class DiffPoly {
 public:
  using Monomial = std::vector<LambdaIndex>;  // sorted

  DiffPoly() = default;
  static DiffPoly constant(const Rational& c);
  static DiffPoly var(const LambdaIndex& lambda);
  static DiffPoly of_parts(const std::vector<int>& parts) { return var(LambdaIndex::from_parts(parts)); }

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Rational& c, DiffPoly a);

  /// d/dp_part by the product rule: F_lambda -> F_{lambda + part}.
  DiffPoly d(int part) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Sum of coefficient * prod ftheta(lambda). With `doubled`, each factor
  /// carries 2^length(lambda) (derivatives of F(2p) at p/2).
  TSeries eval(SeriesContext& ctx, bool doubled = false) const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// The three specialised BKP combinations in the rescaled normalisation
/// used by all three ODEs.
struct KPTriple {
  DiffPoly kp1, kp2, kp3;
};
KPTriple kp_rescaled();
/// Unrescaled combinations of the fixed-charge identity.
KPTriple kp_plain();

struct KPSeries {
  TSeries kp1, kp2, kp3;
};
KPSeries kp_combinations(SeriesContext& ctx);

/// Residuals; each one vanishes identically on its validity window.
TSeries shifted_bkp1_residual(SeriesContext& maps_ctx);
TSeries ode_residual(SeriesContext& ctx);
TSeries fixed_charge_residual(SeriesContext& maps_ctx);
/// u(t, u) = sum u_n^g / (4n) t^(2n) u^(n+1-2g).
TSeries ledoux_series(const OneFaceTable& table, int n_max);
/// Residual of the linear one-face ODE applied to a (truncated) u series.
TSeries ledoux_ode_residual(const TSeries& u_series);
/// b(t, u, v) = sum b_n^{i,j} / (2n) t^n u^i v^j.
TSeries bip_oneface_series(const BipOneFaceTable& table, int n_max);
TSeries bip_oneface_ode_residual(const TSeries& b_series);

}  // namespace nomaps
