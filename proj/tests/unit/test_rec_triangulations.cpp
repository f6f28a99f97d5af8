#include "doctest.h"
#include "nomaps/triangulations.hpp"
#include "published_tables.hpp"

using namespace nomaps;

TEST_CASE("triangulation examples") {
  const TriTable t = build_tri_table(15, 8);
  CHECK(t.at(1, 2) == 7);
  CHECK(t.at(2, 3) == 128);
  CHECK(t.at(5, 5) == 17742726);
  CHECK(t.at(15, 8) == Integer("26909217174327495052218480"));
  CHECK(t.at(7, 8) == Integer("45877917085"));
  CHECK(tri_rec(6, Genus2(4), t) == t.at(6, 4));
}

TEST_CASE("published triangulations table") {
  const TriTable t = build_tri_table(15, 8);
  for (int n = 1; n <= 15; ++n) {
    for (int g2 = 0; g2 <= 8; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(t.at(n, g2) == Integer(testdata::kTriangulationsTable[std::size_t(n - 1)][std::size_t(g2)]));
    }
  }
}

TEST_CASE("support and divisor") {
  const TriTable t = build_tri_table(12, 13);
  for (int n = 1; n <= 12; ++n) {
    for (int g2 = 0; g2 <= 13; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      if (g2 > n + 1) {
        CHECK(t.at(n, g2) == 0);
      } else {
        CHECK(t.at(n, g2) > 0);
        CHECK(tri_divisor_doubled(n, Genus2(g2)) > 0);
      }
    }
  }
}
