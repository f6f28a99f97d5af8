#include "nomaps/maps.hpp"

#include <string>
#include <vector>

namespace nomaps {

namespace {

const MPoly& U() {
  static const MPoly p = MPoly::var(Var::u);
  return p;
}
const MPoly& Z() {
  static const MPoly p = MPoly::var(Var::z);
  return p;
}
const MPoly& UZ() {
  static const MPoly p = MPoly::monomial(1, 1, 1);
  return p;
}

// sum over g1 + g2' = g2 and n1 + n2 = n of w(n1, n2) (2n1-1)(2n2-1) H_{n1-1}^{g1} H_{n2-1}^{g2'}
template <class W>
MPoly quadratic(const MapsTable& t, int n, int g2, W weight) {
  MPoly acc;
  for (int g1 = 0; g1 <= g2; ++g1) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      const MPoly& a = t.at(n1 - 1, g1);
      const MPoly& b = t.at(n2 - 1, g2 - g1);
      if (a.is_zero() || b.is_zero()) continue;
      acc.add_scaled(a * b, weight(n1, n2) * Rational((2 * n1 - 1) * (2 * n2 - 1)));
    }
  }
  return acc;
}

// 2^k sum_{p,j} C(p, k) u^(p-k) z^j [u^p z^j] h
MPoly kz_weight(const MPoly& h, int k) {
  std::vector<MPoly::Term> out;
  for (const auto& term : h.terms()) {
    const auto e = MPoly::unpack(term.key);
    if (e.u < k) continue;
    out.push_back({MPoly::pack(e.u - k, e.z, 0), term.coeff * Rational(binomial(e.u, k) * pow2(k))});
  }
  return MPoly::from_terms(std::move(out));
}

// sum_{p,q} phi_{p,q,m}(u, z) [u^p z^q] h
MPoly phi_weight(const MPoly& h, int m) {
  std::vector<MPoly::Term> out;
  for (const auto& term : h.terms()) {
    const auto e = MPoly::unpack(term.key);
    for (int i = std::max(0, m - e.z); i <= std::min(m, e.u); ++i) {
      const int j = m - i;
      out.push_back({MPoly::pack(i, j, 0), term.coeff * Rational(binomial(e.u, i) * binomial(e.z, j))});
    }
  }
  return MPoly::from_terms(std::move(out));
}

MPoly core_kz(const MapsTable& t, int n, int g2) {
  MPoly r = (4 * U() + Z()) * t.at(n - 1, g2) - 2 * t.at(n - 1, g2 - 1);
  r *= Rational(2 * n - 1);
  MPoly s = Rational((2 * n - 1) * (n - 1)) * t.at(n - 2, g2 - 2) + 3 * (UZ() * t.at(n - 2, g2));
  r.add_scaled(s, 2 * (2 * n - 3));
  r.add_scaled(quadratic(t, n, g2, [](int, int) { return Rational(1); }), 3);
  return r;
}

MPoly core_cc(const MapsTable& t, int n, int g2) {
  MPoly r = frac((2 * n - 1) * (2 * n - 2) * (2 * n - 3), 2) * t.at(n - 2, g2 - 2);
  r.add_scaled((U() + Z()) * t.at(n - 1, g2) + t.at(n - 1, g2 - 1), frac(2 * n - 1, 2));
  r.add_scaled(quadratic(t, n, g2, [](int, int) { return Rational(1); }), frac(6, 4));
  return r;
}

// Lower-order pieces of the bracket, filled for every (n2, g2) a step reads.
using CoreTable = GenusTable<MPoly>;

void fill_cores(MapsEngine e, const MapsTable& t, CoreTable& cores, int n, int g2_max, Exec exec) {
  std::vector<int> todo;
  for (int g2 = 0; g2 <= std::min(n, g2_max); ++g2) {
    if (!cores.contains(n, g2)) todo.push_back(g2);
  }
  std::vector<MPoly> out(todo.size());
  const int count = int(todo.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int k = 0; k < count; ++k) {
    out[std::size_t(k)] = e == MapsEngine::kz ? core_kz(t, n, todo[std::size_t(k)]) : core_cc(t, n, todo[std::size_t(k)]);
  }
  for (std::size_t k = 0; k < todo.size(); ++k) cores.set(n, todo[k], std::move(out[k]));
}

MPoly assemble_kz(int n, int g2, const MapsTable& t, const CoreTable& cores) {
  MPoly rhs = (2 * n) * cores.at(n, g2);
  for (int g1 = 0; g1 <= g2; ++g1) {
    const int gg2 = g2 - g1;
    for (int n1 = 1; n1 <= n; ++n1) {
      const int n2 = n - n1;
      MPoly bracket = cores.at(n2, gg2);
      bracket.add_scaled(t.at(n2, gg2), frac(-(n2 + 1), 2));
      for (int g0 = g1; g0 >= 0; g0 -= 2) {
        if (n1 == n && g0 == g2) continue;  // moved to the left-hand side
        const MPoly& h = t.at(n1, g0);
        if (h.is_zero()) continue;
        const MPoly s = kz_weight(h, 2 + g1 - g0);
        if (s.is_zero()) continue;
        MPoly br = bracket;
        if (g0 != g2 && n1 == n) {
          if (g1 == g2) br.add_scaled(U() * U(), frac(3, 2));
          if (g1 == g2 - 1) br.add_scaled(U(), frac(-3, 2));
        }
        if (n1 == n - 1) {
          if (g1 == g2) br += UZ() * (4 * U() + Z());
          if (g1 == g2 - 1) br.add_scaled(UZ(), -2);
        }
        if (n1 == n - 2) {
          if (g1 == g2) br.add_scaled(UZ() * UZ(), 3);
          if (g1 == g2 - 2) br.add_scaled(UZ(), 6);
        }
        rhs -= s * br;
      }
    }
  }
  const long nn = long(n) * (n + 1);
  return rhs.diagonal([nn](MPoly::Exponent e) { return frac(1, nn + 3L * e.u * (e.u - 1)); });
}

MPoly assemble_cc(int n, int g2, const MapsTable& t, const CoreTable& cores) {
  MPoly rhs = ((U() + Z()) * t.at(n - 1, g2) + t.at(n - 1, g2 - 1)) * Rational(n * (2 * n - 1));
  rhs.add_scaled(t.at(n - 2, g2 - 2), frac((2 * n - 3) * (2 * n - 2) * (2 * n - 1) * (2 * n), 2));
  rhs.add_scaled(quadratic(t, n, g2, [](int n1, int) { return frac(n1, 2); }), 12);
  for (int g1 = 0; g1 <= g2; ++g1) {
    const int gg2 = g2 - g1;
    for (int n1 = 0; n1 <= n - 1; ++n1) {
      const int n2 = n - n1;
      const int m = n1 - g1;
      if (m < 0) continue;
      MPoly w;
      for (int g0 = g1; g0 >= 0; g0 -= 2) {
        const MPoly& h = t.at(n1, g0);
        if (h.is_zero()) continue;
        w.add_scaled(phi_weight(h, m), Rational(pow2(2 + g1 - g0)));
      }
      if (w.is_zero()) continue;
      MPoly bracket = cores.at(n2, gg2);
      if (n2 != n || gg2 != g2) bracket.add_scaled(t.at(n2, gg2), frac(-(n2 + 1), 4));
      rhs -= w * bracket;
    }
  }
  return rhs * frac(2, (n + 1) * (n - 2));
}

void check_step(int n, Genus2 g) {
  if (n <= 2) throw std::invalid_argument("recurrence step needs n > 2, got n=" + std::to_string(n));
  (void)g;
}

MPoly checked(MPoly p, int n, int g2) {
  require_integral(p, ("H_" + std::to_string(n) + "^" + Genus2(g2).str()).c_str());
  return p;
}

}  // namespace

const char* engine_name(MapsEngine e) { return e == MapsEngine::kz ? "kz" : "cc"; }

void require_integral(const MPoly& p, const char* what) {
  for (const auto& term : p.terms()) {
    if (term.coeff.get_den() != 1) {
      throw IntegralityError(std::string(what) + ": non-integral coefficient " + term.coeff.get_str() + " at " +
                             monomial_str(MPoly::unpack(term.key)));
    }
  }
}

MapsTable maps_initial_table(MapsEngine e) {
  MapsTable t(0, e == MapsEngine::cc ? UZ() : MPoly{});
  t.set(1, 0, UZ() * (U() + Z()));
  t.set(1, 1, UZ());
  t.set(2, 0, UZ() * (2 * U() * U() + 5 * UZ() + 2 * Z() * Z()));
  t.set(2, 1, 5 * UZ() * (U() + Z()));
  t.set(2, 2, 5 * UZ());
  return t;
}

MPoly maps_rec_kz(int n, Genus2 g, const MapsTable& table) {
  check_step(n, g);
  if (!table.in_support(n, g.twice())) return {};
  CoreTable cores;
  for (int k = 0; k <= n; ++k) fill_cores(MapsEngine::kz, table, cores, k, g.twice(), Exec::serial);
  return checked(assemble_kz(n, g.twice(), table, cores), n, g.twice());
}

MPoly maps_rec_cc(int n, Genus2 g, const MapsTable& table) {
  check_step(n, g);
  if (!table.in_support(n, g.twice())) return {};
  CoreTable cores;
  for (int k = 0; k <= n; ++k) fill_cores(MapsEngine::cc, table, cores, k, g.twice(), Exec::serial);
  return checked(assemble_cc(n, g.twice(), table, cores), n, g.twice());
}

MapsTable build_maps_table(MapsEngine e, int n_max, int g2_max, Exec exec) {
  MapsTable t = maps_initial_table(e);
  CoreTable cores;
  for (int n = 0; n <= std::min(n_max, 2); ++n) fill_cores(e, t, cores, n, g2_max, exec);
  for (int n = 3; n <= n_max; ++n) {
    fill_cores(e, t, cores, n, g2_max, exec);
    const int gmax = std::min(n, g2_max);
    if (e == MapsEngine::kz) {
      for (int g2 = 0; g2 <= gmax; ++g2) t.set(n, g2, checked(assemble_kz(n, g2, t, cores), n, g2));
    } else {
      std::vector<MPoly> out(std::size_t(gmax + 1));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
      for (int g2 = 0; g2 <= gmax; ++g2) out[std::size_t(g2)] = assemble_cc(n, g2, t, cores);
      for (int g2 = 0; g2 <= gmax; ++g2) t.set(n, g2, checked(std::move(out[std::size_t(g2)]), n, g2));
    }
  }
  // Initial rows beyond the requested genus range are dropped for a uniform view.
  MapsTable trimmed(0, t.boundary());
  for (const auto& [key, value] : t.entries()) {
    if (key.first <= n_max && key.second <= g2_max) trimmed.set(key.first, key.second, value);
  }
  return trimmed;
}

namespace {

Rational quadratic_count(const CountGrid& t, int n, int g2, bool weight_n1) {
  Rational acc;
  for (int g1 = 0; g1 <= g2; ++g1) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      const Integer& a = t.at(n1 - 1, g1);
      const Integer& b = t.at(n2 - 1, g2 - g1);
      if (a == 0 || b == 0) continue;
      Rational w((2 * n1 - 1) * (2 * n2 - 1));
      if (weight_n1) w *= n1;
      acc += w * Rational(a * b);
    }
  }
  return acc;
}

}  // namespace

Integer maps_count_univariate(int n, Genus2 g, const CountGrid& h) {
  if (n <= 2) throw std::invalid_argument("recurrence step needs n > 2");
  const int g2 = g.twice();
  if (!h.in_support(n, g2)) return 0;
  auto H = [&](int a, int b) { return Rational(h.at(a, b)); };
  Rational rhs = Rational(n * (2 * n - 1)) * (2 * H(n - 1, g2) + H(n - 1, g2 - 1));
  rhs += frac((2 * n - 3) * (2 * n - 2) * (2 * n - 1) * (2 * n), 2) * H(n - 2, g2 - 2);
  rhs += 6 * quadratic_count(h, n, g2, true);
  for (int g1 = 0; g1 <= g2; ++g1) {
    const int gg2 = g2 - g1;
    for (int n1 = 0; n1 <= n - 1; ++n1) {
      const int n2 = n - n1;
      Rational w;
      for (int g0 = g1; g0 >= 0; g0 -= 2) {
        const Integer& x = h.at(n1, g0);
        if (x == 0) continue;
        w += Rational(binomial(n1 + 2 - g0, n1 - g1) * pow2(2 + g1 - g0) * x);
      }
      if (w == 0) continue;
      Rational bracket = frac((2 * n2 - 1) * (2 * n2 - 2) * (2 * n2 - 3), 2) * H(n2 - 2, gg2 - 2);
      if (n2 != n || gg2 != g2) bracket -= frac(n2 + 1, 4) * H(n2, gg2);
      bracket += frac(2 * n2 - 1, 2) * (2 * H(n2 - 1, gg2) + H(n2 - 1, gg2 - 1));
      bracket += frac(6, 4) * quadratic_count(h, n2, gg2, false);
      rhs -= w * bracket;
    }
  }
  return to_integer(rhs * frac(2, (n + 1) * (n - 2)), "h_" + std::to_string(n) + "^" + g.str());
}

CountGrid build_maps_univariate(int n_max, int g2_max) {
  CountGrid h(0, Integer(1));
  const int init[3][3] = {{0, 0, 0}, {2, 1, 0}, {9, 10, 5}};
  for (int n = 1; n <= std::min(n_max, 2); ++n) {
    for (int g2 = 0; g2 <= std::min(n, g2_max); ++g2) h.set(n, g2, init[n][g2]);
  }
  for (int n = 3; n <= n_max; ++n) {
    for (int g2 = 0; g2 <= std::min(n, g2_max); ++g2) h.set(n, g2, maps_count_univariate(n, Genus2(g2), h));
  }
  return h;
}

OneFaceTable ledoux_initial_table() {
  OneFaceTable t(0, Integer(1));
  // Genus 0 one-face maps are plane trees (Catalan numbers).
  const int init[4][4] = {{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 5, 5, 0}, {5, 22, 52, 41}};
  for (int n = 1; n <= 3; ++n) {
    for (int g2 = 0; g2 <= n; ++g2) t.set(n, g2, init[n][g2]);
  }
  return t;
}

Integer ledoux(int n, Genus2 g, const OneFaceTable& t) {
  if (n <= 3) throw std::invalid_argument("ledoux step needs n > 3");
  const int g2 = g.twice();
  if (!t.in_support(n, g2)) return 0;
  auto u = [&](int a, int b) { return t.at(a, b); };
  const long a = 2L * n - 3, b = 2L * n - 4, c = 2L * n - 5;
  Integer r = (8L * n - 2) * u(n - 1, g2) - (4L * n - 1) * u(n - 1, g2 - 1);
  r += Integer(long(n) * a * (10L * n - 9)) * u(n - 2, g2 - 2) - 8 * a * u(n - 2, g2);
  r -= Integer(10 * a * b * c) * u(n - 3, g2 - 2);
  r += Integer(5 * a * b * c) * u(n - 3, g2 - 3);
  r += 8 * a * u(n - 2, g2 - 1);
  r -= Integer(2 * a * b * c) * (2L * n - 6) * (2L * n - 7) * u(n - 4, g2 - 4);
  return to_integer(frac(r, n + 1), "u_" + std::to_string(n) + "^" + g.str());
}

OneFaceTable build_ledoux(int n_max) {
  OneFaceTable t = ledoux_initial_table();
  for (int n = 4; n <= n_max; ++n) {
    for (int g2 = 0; g2 <= n; ++g2) t.set(n, g2, ledoux(n, Genus2(g2), t));
  }
  if (n_max < 3) {
    OneFaceTable trimmed(0, t.boundary());
    for (const auto& [key, value] : t.entries()) {
      if (key.first <= n_max) trimmed.set(key.first, key.second, value);
    }
    return trimmed;
  }
  return t;
}

}  // namespace nomaps
