#include "doctest.h"
#include "nomaps/bipartite.hpp"
#include "published_tables.hpp"

using namespace nomaps;

namespace {

const BipTable& table() {
  static const BipTable t = build_bip_table(16, 8);
  return t;
}

Integer at111(int n, int g2) { return to_integer(table().at(n, g2).eval(1, 1, 1), "count"); }

}  // namespace

TEST_CASE("bipartite step examples") {
  CHECK(at111(3, 2) == 4);
  CHECK(at111(6, 5) == 1348);
  CHECK(table().at(1, 1).is_zero());
  CHECK(at111(16, 8) == Integer("48658560979911312"));
  CHECK(at111(9, 8) == 2998656);
  CHECK(bip_rec(5, Genus2(3), table()) == table().at(5, 3));
}

TEST_CASE("published bipartite table") {
  for (int n = 1; n <= 16; ++n) {
    for (int g2 = 0; g2 <= 8; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(at111(n, g2) == Integer(testdata::kBipartiteTable[std::size_t(n - 1)][std::size_t(g2)]));
    }
  }
}

TEST_CASE("bipartite invariants") {
  CHECK(table().at(2, 2).is_zero());
  for (const auto& [key, k] : table().entries()) {
    const auto [n, g2] = key;
    CAPTURE(n);
    CAPTURE(g2);
    CHECK(k.is_homogeneous(n + 2 - g2));
    CHECK(k.swapped(Var::u, Var::v) == k);
    for (const auto& term : k.terms()) CHECK(term.coeff > 0);
  }
}

TEST_CASE("serial and parallel fills agree") {
  CHECK(build_bip_table(9, 6, Exec::serial).entries() == build_bip_table(9, 6, Exec::parallel).entries());
}

TEST_CASE("one-face examples") {
  const BipOneFaceTable t = build_bip_oneface(4);
  CHECK(t.at(3, 1, 1) == 4);
  CHECK(t.at(3, 2, 2) == 3);
  CHECK(t.at(3, 0, 2) == 0);
  CHECK(t.at(3, 3, 2) == 0);
}

TEST_CASE("one-face recursion matches the one-face slice") {
  const BipOneFaceTable t = build_bip_oneface(10);
  const BipTable k = build_bip_table(10, 11);
  for (int n = 1; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; i + j <= n + 1; ++j) {
        MPoly slice;
        for (int g2 = 0; g2 <= n; ++g2) slice += k.at(n, g2);
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(t.at(n, i, j) == to_integer(slice.coeff(i, 1, j), "slice"));
        CHECK(t.at(n, i, j) == t.at(n, j, i));
      }
    }
  }
}
