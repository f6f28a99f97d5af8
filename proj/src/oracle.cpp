#include "nomaps/oracle.hpp"

#include <omp.h>

#include <numeric>
#include <string>
#include <vector>

namespace nomaps {

namespace {

constexpr int kMaxFlags = 16;
using Perm = std::array<int, kMaxFlags>;

struct UnionFind {
  std::array<int, kMaxFlags> parent{};
  explicit UnionFind(int m) { std::iota(parent.begin(), parent.begin() + m, 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// All tau0 commuting with tau2 = (0 1)(2 3)...: a perfect matching of the
// tau2-pairs, each matched couple glued straight or crossed.
void tau0_choices(int pairs, std::vector<int>& open, Perm& cur, std::vector<Perm>& out) {
  if (open.empty()) {
    out.push_back(cur);
    return;
  }
  const int a = open.front();
  for (std::size_t k = 1; k < open.size(); ++k) {
    const int b = open[k];
    std::vector<int> rest;
    for (std::size_t r = 1; r < open.size(); ++r) {
      if (r != k) rest.push_back(open[r]);
    }
    for (int cross = 0; cross < 2; ++cross) {
      cur[2 * a] = 2 * b + cross;
      cur[2 * b + cross] = 2 * a;
      cur[2 * a + 1] = 2 * b + 1 - cross;
      cur[2 * b + 1 - cross] = 2 * a + 1;
      tau0_choices(pairs, rest, cur, out);
    }
  }
}

struct Enumerator {
  int n;
  int m;
  OracleFilter filter;
  Perm tau0{};
  Perm tau2{};
  std::map<std::array<int, 3>, Integer> counts;

  void leaf(const Perm& tau1) {
    UnionFind vert(m);
    for (int x = 0; x < m; ++x) {
      vert.unite(x, tau1[x]);
      vert.unite(x, tau2[x]);
    }
    int vertices = 0;
    for (int x = 0; x < m; ++x) vertices += vert.find(x) == x;
    UnionFind face(m);
    std::array<int, kMaxFlags> face_size{};
    for (int x = 0; x < m; ++x) {
      face.unite(x, tau0[x]);
      face.unite(x, tau1[x]);
    }
    int faces = 0;
    for (int x = 0; x < m; ++x) {
      faces += face.find(x) == x;
      ++face_size[face.find(x)];
    }
    if (filter == OracleFilter::triangulation) {
      for (int x = 0; x < m; ++x) {
        if (face.find(x) == x && face_size[x] != 6) return;
      }
    }
    int black = 0;
    if (filter == OracleFilter::bipartite) {
      // colour vertices outward from the root flag along tau0
      std::array<int, kMaxFlags> colour;
      colour.fill(-1);
      std::vector<int> stack{vert.find(0)};
      colour[vert.find(0)] = 0;
      while (!stack.empty()) {
        const int r = stack.back();
        stack.pop_back();
        for (int x = 0; x < m; ++x) {
          if (vert.find(x) != r) continue;
          const int s = vert.find(tau0[x]);
          if (colour[s] == -1) {
            colour[s] = 1 - colour[r];
            stack.push_back(s);
          } else if (colour[s] == colour[r]) {
            return;
          }
        }
      }
      for (int x = 0; x < m; ++x) black += vert.find(x) == x && colour[x] == 0;
    }
    ++counts[{vertices, faces, black}];
  }

  // tau1 built as a matching; a component whose flags are all matched
  // but which misses some flag can never become connected.
  void extend(Perm& tau1, std::array<int, kMaxFlags>& free_in, UnionFind uf, int matched) {
    if (matched == m) {
      leaf(tau1);
      return;
    }
    int a = 0;
    while (tau1[a] != -1) ++a;
    for (int b = a + 1; b < m; ++b) {
      if (tau1[b] != -1) continue;
      UnionFind next = uf;
      std::array<int, kMaxFlags> nf = free_in;
      const int ra = next.find(a), rb = next.find(b);
      if (ra == rb) {
        nf[ra] -= 2;
      } else {
        next.unite(ra, rb);
        nf[rb] += nf[ra] - 2;
      }
      const int root = next.find(a);
      if (nf[root] == 0 && matched + 2 < m) {
        continue;
      }
      tau1[a] = b;
      tau1[b] = a;
      extend(tau1, nf, next, matched + 2);
      tau1[a] = tau1[b] = -1;
    }
  }

  void run() {
    UnionFind uf(m);
    for (int x = 0; x < m; ++x) {
      uf.unite(x, tau0[x]);
      uf.unite(x, tau2[x]);
    }
    std::array<int, kMaxFlags> free_in{};
    for (int x = 0; x < m; ++x) ++free_in[uf.find(x)];
    Perm tau1;
    tau1.fill(-1);
    extend(tau1, free_in, uf, 0);
  }
};

}  // namespace

const char* filter_name(OracleFilter f) {
  switch (f) {
    case OracleFilter::none: return "none";
    case OracleFilter::bipartite: return "bipartite";
    case OracleFilter::triangulation: return "triangulation";
  }
  return "?";
}

std::map<int, Integer> OracleCounts::by_genus() const {
  std::map<int, Integer> out;
  for (const auto& [key, c] : cells) out[g2_of(n, key[0], key[1])] += c;
  return out;
}

MPoly OracleCounts::polynomial(int g2) const {
  std::vector<MPoly::Term> terms;
  for (const auto& [key, c] : cells) {
    if (g2_of(n, key[0], key[1]) != g2) continue;
    if (filter == OracleFilter::bipartite) {
      terms.push_back({MPoly::pack(key[2], key[1], key[0] - key[2]), Rational(c)});
    } else {
      terms.push_back({MPoly::pack(key[0], key[1], 0), Rational(c)});
    }
  }
  return MPoly::from_terms(std::move(terms));
}

OracleCounts oracle_count(int n, OracleFilter filter, Exec exec) {
  if (n > kOracleMaxEdges) {
    throw std::invalid_argument("oracle: n=" + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(kOracleMaxEdges) + " edges");
  }
  return detail::oracle_count_unguarded(n, filter, exec);
}

namespace detail {

OracleCounts oracle_count_unguarded(int n, OracleFilter filter, Exec exec) {
  if (n < 1 || 4 * n > kMaxFlags) throw std::invalid_argument("oracle: n out of range");
  const int m = 4 * n;
  Perm tau2{};
  for (int x = 0; x < m; ++x) tau2[x] = x ^ 1;
  std::vector<Perm> choices;
  {
    std::vector<int> open(static_cast<std::size_t>(2 * n));
    std::iota(open.begin(), open.end(), 0);
    Perm cur{};
    tau0_choices(2 * n, open, cur, choices);
  }

  std::vector<std::map<std::array<int, 3>, Integer>> partial(choices.size());
  const long total = static_cast<long>(choices.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long k = 0; k < total; ++k) {
    Enumerator e{n, m, filter, choices[static_cast<std::size_t>(k)], tau2, {}};
    e.run();
    partial[static_cast<std::size_t>(k)] = std::move(e.counts);
  }

  // labelled triples / (4n-1)! with tau2 fixed: divide by (4n-2)!!
  Integer divisor = 1;
  for (int k = 2; k <= m - 2; k += 2) divisor *= k;
  OracleCounts out;
  out.n = n;
  out.filter = filter;
  std::map<std::array<int, 3>, Integer> raw;
  for (const auto& p : partial) {
    for (const auto& [key, c] : p) raw[key] += c;
  }
  for (const auto& [key, c] : raw) {
    if (c % divisor != 0) {
      throw std::logic_error("oracle: labelled count not divisible by (4n-2)!!");
    }
    out.cells[key] = c / divisor;
  }
  return out;
}

}  // namespace detail

}  // namespace nomaps
