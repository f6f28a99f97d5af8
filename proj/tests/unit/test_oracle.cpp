#include "doctest.h"
#include "nomaps/bipartite.hpp"
#include "nomaps/maps.hpp"
#include "nomaps/oracle.hpp"
#include "nomaps/triangulations.hpp"

using namespace nomaps;

TEST_CASE("oracle small rows") {
  const auto one = oracle_count(1).by_genus();
  CHECK(one.at(0) == 2);
  CHECK(one.at(1) == 1);
  const auto two = oracle_count(2);
  CHECK(two.by_genus().at(0) == 9);
  CHECK(two.by_genus().at(1) == 10);
  CHECK(two.by_genus().at(2) == 5);
  const MPoly u = MPoly::var(Var::u), z = MPoly::var(Var::z);
  CHECK(two.polynomial(0) == u * z * (2 * u * u + 5 * u * z + 2 * z * z));
}

TEST_CASE("oracle matches maps recurrence") {
  const MapsTable kz = build_maps_table(MapsEngine::kz, 3, 6);
  for (int n = 1; n <= 3; ++n) {
    const OracleCounts o = oracle_count(n);
    for (int g2 = 0; g2 <= n + 1; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(o.polynomial(g2) == kz.at(n, g2));
    }
  }
}

TEST_CASE("oracle matches bipartite recurrence") {
  const BipTable k = build_bip_table(3, 6);
  for (int n = 1; n <= 3; ++n) {
    const OracleCounts o = oracle_count(n, OracleFilter::bipartite);
    for (int g2 = 0; g2 <= n + 1; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(o.polynomial(g2) == k.at(n, g2));
    }
  }
  const OracleCounts one = oracle_count(1, OracleFilter::bipartite);
  CHECK(one.cells.at({2, 1, 1}) == 1);
}

TEST_CASE("oracle matches triangulations") {
  const TriTable t = build_tri_table(1, 4);
  const OracleCounts o = oracle_count(3, OracleFilter::triangulation);
  const auto totals = o.by_genus();
  for (int g2 = 0; g2 <= 4; ++g2) {
    CAPTURE(g2);
    const Integer got = totals.count(g2) ? totals.at(g2) : Integer(0);
    CHECK(got == t.at(1, g2));
  }
  for (const auto& [key, c] : o.cells) CHECK(key[1] == 2);
  CHECK(oracle_count(2, OracleFilter::triangulation).cells.empty());
}

TEST_CASE("oracle invariants") {
  for (int n = 1; n <= 3; ++n) {
    const OracleCounts o = oracle_count(n);
    for (const auto& [key, c] : o.cells) {
      const int g2 = OracleCounts::g2_of(n, key[0], key[1]);
      CHECK(g2 >= 0);
      CHECK(g2 <= n + 1);
      CHECK(o.cells.at({key[1], key[0], 0}) == c);  // vertex/face duality
    }
  }
  const OracleCounts par = oracle_count(3, OracleFilter::bipartite, Exec::parallel);
  const OracleCounts ser = oracle_count(3, OracleFilter::bipartite, Exec::serial);
  CHECK(par.cells == ser.cells);
  CHECK_THROWS_AS(oracle_count(4), std::invalid_argument);
  CHECK_THROWS_AS(oracle_count(0), std::invalid_argument);
}
