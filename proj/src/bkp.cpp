#include "nomaps/bkp.hpp"

#include <algorithm>
#include <stdexcept>

namespace nomaps {

namespace {

const MPoly U = MPoly::var(Var::u);
const MPoly Z = MPoly::var(Var::z);
const MPoly V = MPoly::var(Var::v);

long choose(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

TSeries poly_t(std::vector<MPoly> coeffs) { return TSeries(0, std::move(coeffs)); }

}  // namespace

LambdaIndex LambdaIndex::from_parts(const std::vector<int>& parts) {
  LambdaIndex l;
  for (int p : parts) l = l.with(p);
  return l;
}

std::vector<int> LambdaIndex::parts() const {
  std::vector<int> out;
  if (ell > 0) out.push_back(ell);
  out.insert(out.end(), std::size_t(n3), 3);
  out.insert(out.end(), std::size_t(n2), 2);
  out.insert(out.end(), std::size_t(n1), 1);
  return out;
}

int LambdaIndex::count(int part) const {
  switch (part) {
    case 1: return n1;
    case 2: return n2;
    case 3: return n3;
    default: return part == ell ? 1 : 0;
  }
}

LambdaIndex LambdaIndex::with(int part) const {
  LambdaIndex r = *this;
  switch (part) {
    case 1: ++r.n1; break;
    case 2: ++r.n2; break;
    case 3: ++r.n3; break;
    default:
      if (part < 1) throw std::domain_error("LambdaIndex: part must be positive");
      if (ell != 0) throw std::domain_error("LambdaIndex: two parts >= 4 in " + str() + " + " + std::to_string(part));
      r.ell = part;
  }
  return r;
}

LambdaIndex LambdaIndex::without(int part) const {
  if (count(part) == 0) throw std::domain_error("LambdaIndex: no part " + std::to_string(part) + " in " + str());
  LambdaIndex r = *this;
  switch (part) {
    case 1: --r.n1; break;
    case 2: --r.n2; break;
    case 3: --r.n3; break;
    default: r.ell = 0;
  }
  return r;
}

std::string LambdaIndex::str() const {
  std::string s = "[";
  for (int p : parts()) s += (s.size() > 1 ? "," : "") + std::to_string(p);
  return s + "]";
}

const char* model_name(Model m) {
  switch (m) {
    case Model::maps: return "maps";
    case Model::bipartite: return "bipartite";
    case Model::triangulations: return "triangulations";
  }
  return "?";
}

TSeries maps_theta(const MapsTable& table, int n_max) {
  std::vector<MPoly> c(std::size_t(2 * n_max + 1));
  for (int n = 1; n <= n_max; ++n) {
    MPoly s;
    for (int g2 = 0; g2 <= n; ++g2) s += table.at(n, g2);
    c[std::size_t(2 * n)] = s.divided_by(Rational(4 * n));
  }
  return TSeries(0, std::move(c), 2 * n_max + 1);
}

TSeries bip_eta(const BipTable& table, int n_max) {
  std::vector<MPoly> c(std::size_t(n_max + 1));
  for (int n = 1; n <= n_max; ++n) {
    MPoly s;
    for (int g2 = 0; g2 <= n; ++g2) s += table.at(n, g2);
    c[std::size_t(n)] = s.divided_by(Rational(2 * n));
  }
  return TSeries(0, std::move(c), n_max);
}

TSeries tri_xi(const TriTable& table, int n_max) {
  std::vector<MPoly> c(std::size_t(6 * n_max + 1));
  for (int n = 1; n <= n_max; ++n) {
    MPoly s;
    for (int g2 = 0; g2 <= n + 1; ++g2) {
      s += MPoly::monomial(frac(table.at(n, g2), 12 * n), n + 2 - g2, 2 * n);
    }
    c[std::size_t(6 * n)] = s;
  }
  return TSeries(0, std::move(c), 6 * n_max + 5);
}

SeriesContext::SeriesContext(Model model, TSeries base, Exec exec)
    : model_(model), base_(std::move(base)), exec_(exec) {}

const TSeries& SeriesContext::ftheta(const LambdaIndex& lambda) {
  auto it = memo_.find(lambda);
  if (it != memo_.end()) return it->second;
  TSeries s = compute(lambda);
  return memo_.emplace(lambda, std::move(s)).first->second;
}

TSeries SeriesContext::compute(const LambdaIndex& lambda) {
  if (lambda.empty()) return base_;
  switch (model_) {
    case Model::maps: return compute_maps(lambda);
    case Model::bipartite: return compute_bip(lambda);
    case Model::triangulations: return compute_tri(lambda);
  }
  throw std::logic_error("unknown model");
}

namespace {

int leading_part(const LambdaIndex& l) {
  if (l.ell) return l.ell;
  if (l.n3) return 3;
  if (l.n2) return 2;
  return 1;
}

}  // namespace

TSeries SeriesContext::quadratic(int i, const LambdaIndex& mu, bool with_threes) {
  TSeries acc;
  for (int a = 1; a < i; ++a) {
    const int b = i - a;
    TSeries split;
    const int m3 = with_threes ? mu.n3 : 0;
    for (int l3 = 0; l3 <= m3; ++l3) {
      for (int l2 = 0; l2 <= mu.n2; ++l2) {
        for (int l1 = 0; l1 <= mu.n1; ++l1) {
          const LambdaIndex left = LambdaIndex{0, l3, l2, l1}.with(a);
          const LambdaIndex right = LambdaIndex{0, m3 - l3, mu.n2 - l2, mu.n1 - l1}.with(b);
          const long c = choose(m3, l3) * choose(mu.n2, l2) * choose(mu.n1, l1);
          split += mul(ftheta(left), ftheta(right)).scaled(Rational(c));
        }
      }
    }
    acc += (split + ftheta(mu.with(a).with(b))).scaled(Rational(a * b));
  }
  return acc;
}

TSeries SeriesContext::compute_maps(const LambdaIndex& lambda) {
  const int p = leading_part(lambda);
  const LambdaIndex mu = lambda.without(p);
  const int i = p - 2;
  TSeries r = quadratic(i, mu, true).scaled(2);
  for (int j = 1; j <= 3; ++j) {
    if (mu.count(j) && i + j >= 1) r += ftheta(mu.without(j).with(i + j)).scaled(Rational(mu.count(j) * (i + j)));
  }
  const TSeries& f_mu = ftheta(mu);
  r += f_mu.t_dt() - f_mu.scaled(Rational(mu.size()));
  for (int a = 1; a <= i; ++a) r -= ftheta(mu.with(a)).times(Rational(a) * Z);
  if (i >= 1) r += ftheta(mu.with(i)).times(i * (2 * U + MPoly(i + 1)));
  if (mu.n2 == 0 && mu.n3 == 0) {
    MPoly c;
    if (i == -1) c = (mu.n1 == 1 ? MPoly(1) : MPoly()) + (mu.n1 == 0 ? Z : MPoly());
    if (i == 0 && mu.n1 == 0) c = U + MPoly(1);
    if (!c.is_zero()) r += TSeries::constant(c * U * frac(1, 2));
  }
  return r.mul_t(2).divided_by(Rational(i + 2));
}

TSeries SeriesContext::compute_bip(const LambdaIndex& lambda) {
  const int p = leading_part(lambda);
  const LambdaIndex mu = lambda.without(p);
  const int i = p - 1;
  TSeries r = quadratic(i, mu, true).scaled(2);
  for (int j = 1; j <= 3; ++j) {
    if (mu.count(j)) r += ftheta(mu.without(j).with(i + j)).scaled(Rational(mu.count(j) * (i + j)));
  }
  const TSeries& f_mu = ftheta(mu);
  r += f_mu.t_dt() - f_mu.scaled(Rational(mu.size()));
  for (int a = 1; a <= i; ++a) r -= ftheta(mu.with(a)).times(Rational(a) * Z);
  if (i >= 1) r += ftheta(mu.with(i)).times(i * (U + V + MPoly(i)));
  if (i == 0 && mu.empty()) r += TSeries::constant(U * V * frac(1, 2));
  return r.mul_t(1).divided_by(Rational(i + 1));
}

TSeries SeriesContext::compute_tri(const LambdaIndex& lambda) {
  const MPoly third_over_z = MPoly(frac(1, 3));
  if (lambda.count(3)) {
    // parts 3 go first, then pure-1 vectors, then the main relation
    const LambdaIndex rest = lambda.without(3);
    const TSeries& f = ftheta(rest);
    return (f.t_dt() - f.scaled(Rational(rest.size()))).times(third_over_z).divided_by_var(Var::z);
  }
  if (lambda.ell == 0 && lambda.n2 == 0) {
    const int l = lambda.n1;
    TSeries r = ftheta(lambda.without(1)).dt().mul_t(5).times(Z);
    if (l == 1) r += TSeries::monomial(Z * (U * U + U) * frac(1, 2), 4);
    if (l == 2) r += TSeries::monomial(U * frac(1, 2), 2);
    return r;
  }
  const int p = leading_part(lambda);
  const LambdaIndex mu = lambda.without(p);
  const int i = p - 3;
  TSeries low = quadratic(i, mu, false).scaled(-2);
  for (int j = 1; j <= 2; ++j) {
    if (mu.count(j) && i + j >= 1) low -= ftheta(mu.without(j).with(i + j)).scaled(Rational(mu.count(j) * (i + j)));
  }
  if (i >= 1) low -= ftheta(mu.with(i)).times(i * (2 * U + MPoly(i + 1)));
  if (mu.n2 == 0) {
    MPoly c;
    if (i == -1 && mu.n1 == 1) c = MPoly(1);
    if (i == 0 && mu.n1 == 0) c = U + MPoly(1);
    if (!c.is_zero()) low -= TSeries::constant(c * U * frac(1, 2));
  }
  TSeries r = low.mul_t(2) + ftheta(mu.with(i + 2)).scaled(Rational(i + 2));
  return r.mul_t(-2).divided_by(Rational(i + 3)).divided_by_var(Var::z);
}

DiffPoly DiffPoly::constant(const Rational& c) {
  DiffPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

DiffPoly DiffPoly::var(const LambdaIndex& lambda) {
  DiffPoly p;
  p.terms_[{lambda}] = 1;
  return p;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    Rational& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) { return *this += Rational(-1) * o; }

DiffPoly operator*(const Rational& c, DiffPoly a) {
  if (c == 0) return {};
  for (auto& [m, k] : a.terms_) k *= c;
  return a;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      DiffPoly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      DiffPoly t;
      t.terms_[m] = ca * cb;
      r += t;
    }
  }
  return r;
}

DiffPoly DiffPoly::d(int part) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      Monomial n = m;
      n[k] = n[k].with(part);
      std::sort(n.begin(), n.end());
      DiffPoly t;
      t.terms_[n] = c;
      r += t;
    }
  }
  return r;
}

TSeries DiffPoly::eval(SeriesContext& ctx, bool doubled) const {
  TSeries acc;
  for (const auto& [m, c] : terms_) {
    TSeries prod = TSeries::constant(MPoly(c));
    for (const LambdaIndex& l : m) {
      TSeries f = ctx.ftheta(l);
      if (doubled) f = f.scaled(Rational(1L << l.length()));
      prod = mul(prod, f, ctx.exec());
    }
    acc += prod;
  }
  return acc;
}

namespace {

DiffPoly F(std::vector<int> parts) { return DiffPoly::of_parts(parts); }
DiffPoly C(long p, long q = 1) { return DiffPoly::constant(frac(p, q)); }

}  // namespace

KPTriple kp_rescaled() {
  const DiffPoly f11 = F({1, 1});
  KPTriple k;
  k.kp1 = C(-4) * F({3, 1}) + C(4) * F({2, 2}) + C(4, 3) * (C(6) * f11 * f11 + F({1, 1, 1, 1}));
  k.kp2 = C(-4) * F({4, 1}) + C(4) * F({3, 2}) + C(8, 3) * (C(6) * F({2, 1}) * f11 + F({2, 1, 1, 1}));
  k.kp3 = C(-6) * F({5, 1}) + C(4) * F({4, 2}) + C(2) * F({3, 3}) +
          C(8, 3) * (C(6) * F({3, 1}) * f11 + F({3, 1, 1, 1})) +
          C(4) * (C(4) * F({2, 1}) * F({2, 1}) + C(2) * F({2, 2}) * f11 + F({2, 2, 1, 1})) +
          C(4, 45) * (C(60) * f11 * f11 * f11 + C(30) * F({1, 1, 1, 1}) * f11 + F({1, 1, 1, 1, 1, 1}));
  return k;
}

KPTriple kp_plain() {
  const DiffPoly f11 = F({1, 1});
  KPTriple k;
  k.kp1 = C(-1) * F({3, 1}) + F({2, 2}) + C(1, 2) * f11 * f11 + C(1, 12) * F({1, 1, 1, 1});
  k.kp2 = C(-2) * F({4, 1}) + C(2) * F({3, 2}) + C(2) * F({2, 1}) * f11 + C(1, 3) * F({2, 1, 1, 1});
  k.kp3 = C(-6) * F({5, 1}) + C(4) * F({4, 2}) + C(2) * F({3, 3}) + C(4) * F({3, 1}) * f11 +
          C(2, 3) * F({3, 1, 1, 1}) + C(4) * F({2, 1}) * F({2, 1}) + C(2) * F({2, 2}) * f11 + F({2, 2, 1, 1}) +
          C(1, 3) * f11 * f11 * f11 + C(1, 6) * F({1, 1, 1, 1}) * f11 + C(1, 180) * F({1, 1, 1, 1, 1, 1});
  return k;
}

KPSeries kp_combinations(SeriesContext& ctx) {
  const KPTriple k = kp_rescaled();
  return {k.kp1.eval(ctx), k.kp2.eval(ctx), k.kp3.eval(ctx)};
}

TSeries shifted_bkp1_residual(SeriesContext& ctx) {
  if (ctx.model() != Model::maps) throw std::invalid_argument("shifted BKP check needs the maps model");
  const TSeries& th = ctx.base();
  const TSeries lap = th.map_coeffs([](const MPoly& p) { return p.shift_u(2) + p.shift_u(-2) - 2 * p; });
  const TSeries kp1 = kp_rescaled().kp1.eval(ctx);
  const TSeries lhs = mul(lap.dt(), kp1, ctx.exec());
  const TSeries rhs = kp1.dt() - kp1.mul_t(-1).scaled(4);
  return lhs - rhs;
}

TSeries ode_residual(SeriesContext& ctx) {
  const KPSeries k = kp_combinations(ctx);
  auto m = [&](const TSeries& a, const TSeries& b) { return mul(a, b, ctx.exec()); };
  const TSeries d1 = k.kp1.dt();
  const TSeries d2 = d1.dt();
  const TSeries& base = ctx.base();
  const TSeries b1 = base.dt();
  const TSeries b2 = b1.dt();
  TSeries sq, bracket;
  switch (ctx.model()) {
    case Model::maps: {
      sq = m(d1, d1).mul_t(6);
      const TSeries op = d2.mul_t(6) + d1.mul_t(5).scaled(2) +
                         m(b2.mul_t(6).scaled(2) + b1.mul_t(5).scaled(4) +
                               poly_t({MPoly(), MPoly(), 3 * U + MPoly(1) - Z, MPoly(), U * Z - MPoly(4)}),
                           k.kp1);
      bracket = k.kp3 - k.kp2.scaled(frac(1, 2)) - op;
      break;
    }
    case Model::bipartite: {
      sq = m(d1, d1).mul_t(4);
      const TSeries pre = poly_t({MPoly(1), U + V + MPoly(1) - Z}).scaled(frac(1, 2));
      const TSeries op = d2.mul_t(4) + d1.mul_t(3).scaled(4) +
                         m(b2.mul_t(4).scaled(2) + b1.mul_t(3).scaled(8) + poly_t({MPoly(), -(U + V), 3 * U * V}),
                           k.kp1);
      bracket = k.kp3 - m(pre, k.kp2) - op;
      break;
    }
    case Model::triangulations: {
      const MPoly z2 = Z * Z;
      sq = m(d1, d1).mul_t(10).times(z2);
      const TSeries op = (d2.mul_t(10) + d1.mul_t(9).scaled(5)).times(z2) +
                         m((b2.mul_t(10).scaled(2) + b1.mul_t(9).scaled(10)).times(z2) +
                               TSeries::monomial(z2 * (U * U + U) * Rational(4), 8) + TSeries::monomial(U, 2),
                           k.kp1);
      bracket = k.kp3 - k.kp2.mul_t(-2).scaled(frac(1, 2)).divided_by_var(Var::z) - op;
      break;
    }
  }
  return sq - m(k.kp2, k.kp2) + m(k.kp1, bracket);
}

TSeries fixed_charge_residual(SeriesContext& ctx) {
  if (ctx.model() != Model::maps) throw std::invalid_argument("fixed-charge check needs the maps model");
  const KPTriple k = kp_plain();
  auto ev = [&](const DiffPoly& p) { return p.eval(ctx, true); };
  auto m = [&](const TSeries& a, const TSeries& b) { return mul(a, b, ctx.exec()); };
  const TSeries kp1 = ev(k.kp1), kp2 = ev(k.kp2), kp3 = ev(k.kp3);
  const TSeries kp1_1 = ev(k.kp1.d(1)), kp1_2 = ev(k.kp1.d(2));
  const TSeries kp1_11 = ev(k.kp1.d(1).d(1)), kp1_111 = ev(k.kp1.d(1).d(1).d(1));
  const TSeries kp2_1 = ev(k.kp2.d(1)), kp2_2 = ev(k.kp2.d(2)), kp3_1 = ev(k.kp3.d(1));
  const TSeries f111 = ev(F({1, 1, 1}));
  const TSeries sq = m(kp1, kp1);
  const TSeries lhs = m(f111, m(sq, kp1)).scaled(2);
  TSeries rhs = m(kp3_1 - kp2_2.scaled(2), sq);
  rhs -= m(m(kp3 - kp1_11.scaled(3), kp1), kp1_1);
  rhs += m(m(kp1_2 - kp2_1, kp1), kp2).scaled(2);
  rhs += m(m(kp2, kp2), kp1_1).scaled(2);
  rhs -= m(m(kp1_1, kp1_1), kp1_1).scaled(2);
  rhs -= m(sq, kp1_111);
  return lhs - rhs;
}

TSeries ledoux_series(const OneFaceTable& table, int n_max) {
  std::vector<MPoly> c(std::size_t(2 * n_max + 1));
  for (int n = 1; n <= n_max; ++n) {
    MPoly s;
    for (int g2 = 0; g2 <= n; ++g2) s += MPoly::monomial(frac(table.at(n, g2), 4 * n), n + 1 - g2, 0);
    c[std::size_t(2 * n)] = s;
  }
  return TSeries(0, std::move(c), 2 * n_max + 1);
}

TSeries ledoux_ode_residual(const TSeries& f) {
  std::vector<TSeries> d{f};
  for (int k = 1; k <= 6; ++k) d.push_back(d.back().dt());
  const MPoly u2 = U * U;
  auto P = [](std::vector<MPoly> c) { return poly_t(std::move(c)); };
  auto m = [](const TSeries& a, const TSeries& b) { return mul(a, b, Exec::serial); };
  const MPoly o;
  TSeries r = m(P({MPoly(3), o, MPoly(10) - 20 * U, o, 32 * (u2 - U - MPoly(5)), o, 240 * (2 * U - MPoly(1)), o,
                   MPoly(2880)}),
                d[1]);
  r += m(P({o, MPoly(1), o, MPoly(4) - 8 * U, o, 2 * (8 * u2 - 8 * U - MPoly(109)), o, 360 * (2 * U - MPoly(1)), o,
            MPoly(7200)}),
         d[2]);
  r += m(P({o, o, o, o, o, o, MPoly(-66), o, 120 * (2 * U - MPoly(1)), o, MPoly(4800)}), d[3]);
  r += m(P({o, o, o, o, o, o, o, MPoly(-5), o, 10 * (2 * U - MPoly(1)), o, MPoly(1200)}), d[4]);
  r += d[5].mul_t(12).scaled(120) + d[6].mul_t(13).scaled(4);
  r += P({o, -2 * (u2 + U), o, 2 * (4 * u2 * U - 4 * u2 - 11 * U), o, 30 * (2 * u2 - U), o, 240 * U});
  return r;
}

TSeries bip_oneface_series(const BipOneFaceTable& table, int n_max) {
  std::vector<MPoly> c(std::size_t(n_max + 1));
  for (const auto& [key, value] : table.entries()) {
    const auto [n, i, j] = key;
    if (n > n_max) continue;
    c[std::size_t(n)] += MPoly::monomial(frac(value, 2 * n), i, 0, j);
  }
  return TSeries(0, std::move(c), n_max);
}

TSeries bip_oneface_ode_residual(const TSeries& b) {
  std::vector<TSeries> d{b};
  for (int k = 1; k <= 6; ++k) d.push_back(d.back().dt());
  auto m = [](const TSeries& a, const MPoly& c, int k) { return a.times(c).mul_t(k); };
  const MPoly s = U + V - MPoly(1);
  const MPoly w = U - V;
  const MPoly w2 = w * w;
  const MPoly q = 3 * U * U + 3 * V * V + 2 * U * V;
  TSeries r = TSeries::constant(-(U * V)) + d[1].scaled(2);
  r += TSeries::monomial(2 * U * U * V + 2 * U * V * V - 5 * U * V, 1) + m(d[1], -7 * s, 1) + m(d[2], MPoly(1), 1);
  r += TSeries::monomial(-(U * V) * (w2 - MPoly(1)), 2) + m(d[1], 3 * q - 12 * (U + V) - MPoly(29), 2) +
       m(d[2], -4 * s, 2);
  // the d/dt coefficient at t^3 is -5((u-v)^2 - 9)(u+v-1)
  r += m(d[1], -5 * (w2 - MPoly(9)) * s, 3) + m(d[2], 2 * q - 8 * (U + V) - MPoly(86), 3);
  r += m(d[1], w2 * w2 - 18 * w2 + MPoly(81), 4) + m(d[2], -4 * s * (w2 - MPoly(37)), 4) + m(d[3], MPoly(-44), 4);
  r += m(d[2], w2 * w2 - 64 * w2 + MPoly(719), 5) + m(d[3], 82 * s, 5) + m(d[4], MPoly(-5), 5);
  r += m(d[3], -38 * w2 + MPoly(1078), 6) + m(d[4], 10 * s, 6);
  r += m(d[4], -5 * w2 + MPoly(493), 7) + m(d[5], MPoly(80), 8) + m(d[6], MPoly(4), 9);
  return r;
}

}  // namespace nomaps
