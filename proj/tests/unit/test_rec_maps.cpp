#include <map>

#include "doctest.h"
#include "nomaps/maps.hpp"
#include "published_tables.hpp"

using namespace nomaps;

namespace {

const MPoly u = MPoly::var(Var::u);
const MPoly z = MPoly::var(Var::z);

Integer published(const std::vector<std::vector<const char*>>& t, int n, int g2) {
  return Integer(t[std::size_t(n - 1)][std::size_t(g2)]);
}

Integer at11(const MapsTable& t, int n, int g2) { return to_integer(t.at(n, g2).eval(1, 1), "count"); }

const MapsTable& cc_table() {
  static const MapsTable t = build_maps_table(MapsEngine::cc, 16, 8);
  return t;
}

const MapsTable& kz_table() {
  static const MapsTable t = build_maps_table(MapsEngine::kz, 12, 12);
  return t;
}

}  // namespace

TEST_CASE("kz step examples") {
  const MapsTable& t = kz_table();
  CHECK(at11(t, 3, 3) == 41);
  CHECK(at11(t, 4, 4) == 509);
  CHECK(t.at(3, 4).is_zero());
  CHECK(maps_rec_kz(3, Genus2(4), t).is_zero());
  CHECK(maps_rec_kz(4, Genus2(4), t) == t.at(4, 4));
  CHECK_THROWS_AS(maps_rec_kz(2, Genus2(0), t), std::invalid_argument);
}

TEST_CASE("cc step examples") {
  const MapsTable& t = cc_table();
  CHECK(at11(t, 5, 5) == 8229);
  CHECK(at11(t, 16, 8) == Integer("783804517126931727890"));
  CHECK(maps_rec_cc(6, Genus2(6), t) == t.at(6, 6));
}

TEST_CASE("engines agree as polynomials up to twelve edges") {
  const MapsTable& a = kz_table();
  const MapsTable cc = build_maps_table(MapsEngine::cc, 12, 12);
  for (int n = 1; n <= 12; ++n) {
    for (int g2 = 0; g2 <= n; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(a.at(n, g2) == cc.at(n, g2));
    }
  }
}

TEST_CASE("serial and parallel fills agree") {
  CHECK(build_maps_table(MapsEngine::cc, 9, 6, Exec::serial).entries() ==
        build_maps_table(MapsEngine::cc, 9, 6, Exec::parallel).entries());
}

TEST_CASE("published maps table") {
  const MapsTable& t = cc_table();
  const CountGrid h = build_maps_univariate(16, 8);
  for (int n = 1; n <= 16; ++n) {
    for (int g2 = 0; g2 <= 8; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(at11(t, n, g2) == published(testdata::kMapsTable, n, g2));
      CHECK(h.at(n, g2) == published(testdata::kMapsTable, n, g2));
    }
  }
}

TEST_CASE("univariate examples") {
  const CountGrid h = build_maps_univariate(6, 6);
  CHECK(h.at(2, 2) == 5);
  CHECK(h.at(6, 6) == 166377);
  CHECK(h.at(1, 3) == 0);
  CHECK(maps_count_univariate(5, Genus2(2), h) == 23560);
}

TEST_CASE("table invariants") {
  const MapsTable& t = kz_table();
  for (const auto& [key, h] : t.entries()) {
    const auto [n, g2] = key;
    CAPTURE(n);
    CAPTURE(g2);
    CHECK(h.is_homogeneous(n + 2 - g2));
    CHECK(h.swapped(Var::u, Var::z) == h);
    for (const auto& term : h.terms()) {
      CHECK(term.coeff > 0);
      CHECK(term.coeff.get_den() == 1);
    }
  }
}

TEST_CASE("initial conditions") {
  const MapsTable t = maps_initial_table(MapsEngine::kz);
  CHECK(t.at(1, 0) == u * z * (u + z));
  CHECK(t.at(0, 0).is_zero());
  CHECK(maps_initial_table(MapsEngine::cc).at(0, 0) == u * z);
  CHECK(t.at(-1, 0).is_zero());
  CHECK(t.at(2, 3).is_zero());
  CHECK_THROWS_AS(t.at(3, 0), std::out_of_range);
}

TEST_CASE("ledoux examples") {
  const OneFaceTable t = build_ledoux(12);
  CHECK(t.at(3, 3) == 41);
  CHECK(t.at(3, 2) == 52);
  CHECK(ledoux(4, Genus2(4), t) == t.at(4, 4));
}

TEST_CASE("ledoux matches the one-face slice") {
  const OneFaceTable t = build_ledoux(12);
  const MapsTable& h = kz_table();
  for (int n = 1; n <= 12; ++n) {
    for (int g2 = 0; g2 <= n; ++g2) {
      CAPTURE(n);
      CAPTURE(g2);
      CHECK(t.at(n, g2) == to_integer(h.at(n, g2).coeff(n + 1 - g2, 1), "slice"));
    }
  }
}
