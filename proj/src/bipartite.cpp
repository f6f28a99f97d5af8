#include "nomaps/bipartite.hpp"

#include <string>
#include <vector>

#include "nomaps/maps.hpp"

namespace nomaps {

namespace {

const MPoly& U() {
  static const MPoly p = MPoly::var(Var::u);
  return p;
}
const MPoly& V() {
  static const MPoly p = MPoly::var(Var::v);
  return p;
}
const MPoly& Z() {
  static const MPoly p = MPoly::var(Var::z);
  return p;
}
const MPoly& UV() {
  static const MPoly p = MPoly::monomial(1, 1, 0, 1);
  return p;
}

MPoly psi(int n) {
  MPoly p = U() * U() + V() * V() + Z() * Z() - 14 * UV() - 2 * U() * Z() - 2 * V() * Z();
  return p * Rational(n - 2) - 12 * UV();
}

// sum over g1 + g2' = g2 and n1 + n2 = n of (6 n1 n2 - 2(n1 + n2) + 1) K_{n1-1}^{g1} K_{n2-1}^{g2'}
MPoly quadratic(const BipTable& t, int n, int g2) {
  MPoly acc;
  for (int g1 = 0; g1 <= g2; ++g1) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      const MPoly& a = t.at(n1 - 1, g1);
      const MPoly& b = t.at(n2 - 1, g2 - g1);
      if (a.is_zero() || b.is_zero()) continue;
      acc.add_scaled(a * b, 6 * n1 * n2 - 2 * (n1 + n2) + 1);
    }
  }
  return acc;
}

// Terms of the bracket that do not involve K_n^g itself.
MPoly lower(const BipTable& t, int n, int g2) {
  MPoly r = ((U() + V() + Z()) * t.at(n - 1, g2) - t.at(n - 1, g2 - 1)) * Rational(2 * n - 1);
  r.add_scaled(t.at(n - 2, g2 - 2), (2 * n - 1) * (2 * n - 3) * n);
  r.add_scaled((U() + V() - Z()) * t.at(n - 2, g2 - 1), -6 * (n - 1));
  r -= psi(n) * t.at(n - 2, g2);
  r.add_scaled(quadratic(t, n, g2), 2);
  return r;
}

MPoly bracket(const BipTable& t, int n2, int g2) {
  MPoly r = lower(t, n2, g2);
  r.add_scaled(t.at(n2, g2), -(n2 + 1));
  if (n2 == 1 && g2 == 0) r += 2 * UV() * Z();
  if (n2 == 2) {
    MPoly d;
    if (g2 == 0) d += UV();
    if (g2 == 1) d -= U() + V() - Z();
    if (g2 == 2) d += MPoly(1);
    r += 6 * UV() * d;
  }
  return r;
}

// sum_{p,q,k} sum_i C(p, i) C(q, m - k - i) u^i v^(m-k-i) z^k [u^p v^q z^k] h
MPoly phi_weight(const MPoly& h, int m) {
  std::vector<MPoly::Term> out;
  for (const auto& term : h.terms()) {
    const auto e = MPoly::unpack(term.key);
    const int r = m - e.z;
    for (int i = std::max(0, r - e.v); i <= std::min(r, e.u); ++i) {
      out.push_back({MPoly::pack(i, e.z, r - i), term.coeff * Rational(binomial(e.u, i) * binomial(e.v, r - i))});
    }
  }
  return MPoly::from_terms(std::move(out));
}

MPoly assemble(int n, int g2, const BipTable& t, const GenusTable<MPoly>& brackets) {
  MPoly first = lower(t, n, g2);
  MPoly rest;
  for (int g1 = 0; g1 <= g2; ++g1) {
    const int gg2 = g2 - g1;
    for (int n1 = 1; n1 <= n - 1; ++n1) {
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
      rest += w * brackets.at(n2, gg2);
    }
  }
  MPoly r = first * frac(1, n + 1);
  r.add_scaled(rest, frac(-1, (n - 2) * (n + 1)));
  return r;
}

void fill_brackets(const BipTable& t, GenusTable<MPoly>& brackets, int n, int g2_max) {
  for (int g2 = 0; g2 <= std::min(n, g2_max); ++g2) {
    if (!brackets.contains(n, g2)) brackets.set(n, g2, bracket(t, n, g2));
  }
}

MPoly checked(MPoly p, int n, int g2) {
  require_integral(p, ("K_" + std::to_string(n) + "^" + Genus2(g2).str()).c_str());
  return p;
}

}  // namespace

BipTable bip_initial_table() {
  BipTable t;
  const MPoly uvz = UV() * Z();
  t.set(1, 0, uvz);
  t.set(1, 1, MPoly{});
  t.set(2, 0, uvz * (U() + V() + Z()));
  t.set(2, 1, uvz);
  t.set(2, 2, MPoly{});
  return t;
}

MPoly bip_rec(int n, Genus2 g, const BipTable& table) {
  if (n <= 2) throw std::invalid_argument("recurrence step needs n > 2, got n=" + std::to_string(n));
  if (!table.in_support(n, g.twice())) return {};
  GenusTable<MPoly> brackets;
  for (int k = 1; k < n; ++k) fill_brackets(table, brackets, k, g.twice());
  return checked(assemble(n, g.twice(), table, brackets), n, g.twice());
}

BipTable build_bip_table(int n_max, int g2_max, Exec exec) {
  BipTable t = bip_initial_table();
  GenusTable<MPoly> brackets;
  for (int n = 3; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) fill_brackets(t, brackets, k, g2_max);
    const int gmax = std::min(n, g2_max);
    std::vector<MPoly> out(std::size_t(gmax + 1));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int g2 = 0; g2 <= gmax; ++g2) out[std::size_t(g2)] = assemble(n, g2, t, brackets);
    for (int g2 = 0; g2 <= gmax; ++g2) t.set(n, g2, checked(std::move(out[std::size_t(g2)]), n, g2));
  }
  BipTable trimmed;
  for (const auto& [key, value] : t.entries()) {
    if (key.first <= n_max && key.second <= g2_max) trimmed.set(key.first, key.second, value);
  }
  return trimmed;
}

const Integer& BipOneFaceTable::at(int n, int i, int j) const {
  static const Integer zero;
  if (!in_support(n, i, j)) return zero;
  auto it = entries_.find({n, i, j});
  if (it == entries_.end()) {
    throw std::out_of_range("missing one-face entry n=" + std::to_string(n) + " i=" + std::to_string(i) +
                            " j=" + std::to_string(j));
  }
  return it->second;
}

BipOneFaceTable bip_oneface_initial_table() {
  BipOneFaceTable t;
  t.set(1, 1, 1, 1);
  t.set(2, 2, 1, 1);
  t.set(2, 1, 2, 1);
  t.set(2, 1, 1, 1);
  t.set(3, 3, 1, 1);
  t.set(3, 1, 3, 1);
  t.set(3, 2, 2, 3);
  t.set(3, 2, 1, 3);
  t.set(3, 1, 2, 3);
  t.set(3, 1, 1, 4);
  return t;
}

Integer bip_oneface(int n, int i, int j, const BipOneFaceTable& t) {
  if (n <= 3) throw std::invalid_argument("one-face step needs n > 3");
  if (!t.in_support(n, i, j)) return 0;
  auto b = [&](int dn, int di, int dj) -> const Integer& { return t.at(n - dn, i - di, j - dj); };
  const long N = n;
  Integer r = (4 * N - 1) * (b(1, 1, 0) + b(1, 0, 1) - b(1, 0, 0));
  r += Integer(5 * N * N * N - 16 * N * N + 13 * N - 1) * b(2, 0, 0);
  r += (2 * N - 3) * (4 * b(2, 1, 0) + 4 * b(2, 0, 1) - 3 * b(2, 2, 0) - 3 * b(2, 0, 2) - 2 * b(2, 1, 1));
  r += Integer(10 * N * N * N - 68 * N * N + 150 * N - 107) * (b(3, 0, 0) - b(3, 1, 0) - b(3, 0, 1));
  r += (4 * N - 11) *
       (b(3, 3, 0) + b(3, 0, 3) - b(3, 2, 1) - b(3, 1, 2) - b(3, 2, 0) - b(3, 0, 2) + 2 * b(3, 1, 1));
  Integer tail = Integer((2 * N - 7) * (2 * N - 7) * (N - 2) * (N - 2)) * b(4, 0, 0);
  tail -= (5 * N * N - 32 * N + 53) * (b(4, 2, 0) + b(4, 0, 2) - 2 * b(4, 1, 1));
  tail += b(4, 4, 0) + b(4, 0, 4) - 4 * b(4, 3, 1) - 4 * b(4, 1, 3) + 6 * b(4, 2, 2);
  r += (4 - N) * tail;
  return to_integer(frac(r, n + 1), "b_" + std::to_string(n) + "^{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

BipOneFaceTable build_bip_oneface(int n_max) {
  BipOneFaceTable t;
  const BipOneFaceTable init = bip_oneface_initial_table();
  for (const auto& [key, value] : init.entries()) {
    if (std::get<0>(key) <= n_max) t.set(std::get<0>(key), std::get<1>(key), std::get<2>(key), value);
  }
  for (int n = 4; n <= n_max; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; i + j <= n + 1; ++j) t.set(n, i, j, bip_oneface(n, i, j, t));
    }
  }
  return t;
}

}  // namespace nomaps
