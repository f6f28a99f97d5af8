#include "nomaps/triangulations.hpp"

#include <string>

namespace nomaps {

namespace {

// sum over g1 + g2' = g2 and n1 + n2 = n of (3n1-1)(3n2-1) t_{n1-1}^{g1} t_{n2-1}^{g2'}
Integer quadratic(const TriTable& t, int n, int g2) {
  Integer acc;
  for (int g1 = 0; g1 <= g2; ++g1) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      const Integer& a = t.at(n1 - 1, g1);
      if (a == 0) continue;
      const Integer& b = t.at(n2 - 1, g2 - g1);
      if (b == 0) continue;
      acc += Integer((3 * n1 - 1) * (3 * n2 - 1)) * a * b;
    }
  }
  return acc;
}

}  // namespace

TriTable tri_initial_table() {
  TriTable t(1);
  t.set(1, 0, 4);
  t.set(1, 1, 9);
  t.set(1, 2, 7);
  t.set(2, 0, 32);
  t.set(2, 1, 118);
  t.set(2, 2, 202);
  t.set(2, 3, 128);
  return t;
}

Integer tri_divisor_doubled(int n, Genus2 g) {
  const long g2 = g.twice();
  return Integer(4L * n * n + 2L * (3 - g2) * n + (2 - g2) * (1 - g2));
}

Integer tri_rec(int n, Genus2 g, const TriTable& t) {
  if (n <= 2) throw std::invalid_argument("recurrence step needs n > 2, got n=" + std::to_string(n));
  const int g2 = g.twice();
  if (!t.in_support(n, g2)) return 0;
  const Integer d2 = tri_divisor_doubled(n, g);
  if (d2 == 0) {
    throw DegenerateStepError("triangulation divisor vanishes at n=" + std::to_string(n) + " g=" + g.str());
  }
  auto T = [&](int a, int b) -> const Integer& { return t.at(a, b); };

  Rational inner = Rational(6 * (3 * n - 1) * T(n - 1, g2));
  inner += 12 * (3 * n - 4) * (Integer((3 * n - 2) * n) * T(n - 2, g2 - 2) + 2 * (T(n - 2, g2 - 1) + T(n - 2, g2)));
  inner += 6 * quadratic(t, n, g2);
  Rational rhs = n * inner;

  for (int g1 = 0; g1 <= g2; ++g1) {
    const int gg2 = g2 - g1;
    for (int n1 = 1; n1 <= n; ++n1) {
      const int n2 = n - n1;
      Rational base = frac(-(n2 + 1), 8) * T(n2, gg2);
      base += (3 * n2 - 1) * T(n2 - 1, gg2);
      base += 2 * (3 * n2 - 4) *
              (Integer((3 * n2 - 2) * n2) * T(n2 - 2, gg2 - 2) + 2 * (T(n2 - 2, gg2 - 1) + T(n2 - 2, gg2)));
      base += quadratic(t, n2, gg2);
      if (n1 == n - 1) base += 2 * (g1 == g2) + 2 * (g1 == g2 - 1) + (g1 == g2 - 2);
      if (n1 == n - 2) base += 4 * ((g1 == g2) + 2 * (g1 == g2 - 1) + 9 * (g1 == g2 - 2) + 8 * (g1 == g2 - 3));
      for (int g0 = g1; g0 >= 0; g0 -= 2) {
        if (n1 == n && g0 == g2) continue;  // moved to the left-hand side
        const Integer& x = T(n1, g0);
        if (x == 0) continue;
        const Integer w = binomial(n1 + 2 - g0, n1 - g1) * pow2(2 + g1 - g0) * x;
        if (w == 0) continue;
        Rational br = base;
        if (g0 != g2 && n1 == n) br += frac((g1 == g2) - (g1 == g2 - 1), 8);
        rhs -= Rational(w) * br;
      }
    }
  }
  return to_integer(rhs * frac(4, d2), "t_" + std::to_string(n) + "^" + g.str());
}

TriTable build_tri_table(int n_max, int g2_max) {
  TriTable t = tri_initial_table();
  for (int n = 3; n <= n_max; ++n) {
    for (int g2 = 0; g2 <= std::min(n + 1, g2_max); ++g2) t.set(n, g2, tri_rec(n, Genus2(g2), t));
  }
  TriTable trimmed(1);
  for (const auto& [key, value] : t.entries()) {
    if (key.first <= n_max && key.second <= g2_max) trimmed.set(key.first, key.second, value);
  }
  return trimmed;
}

}  // namespace nomaps
