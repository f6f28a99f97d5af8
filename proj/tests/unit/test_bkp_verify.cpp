#include "doctest.h"
#include "nomaps/verify.hpp"

using namespace nomaps;

namespace {

const MPoly u = MPoly::var(Var::u);
const MPoly z = MPoly::var(Var::z);
const MPoly v = MPoly::var(Var::v);

SeriesContext maps_ctx(int n) { return SeriesContext(Model::maps, maps_theta(build_maps_table(MapsEngine::kz, n, n), n)); }

}  // namespace

TEST_CASE("lambda index") {
  const LambdaIndex l = LambdaIndex::from_parts({1, 5, 2, 1, 3});
  CHECK(l.ell == 5);
  CHECK(l.n3 == 1);
  CHECK(l.n2 == 1);
  CHECK(l.n1 == 2);
  CHECK(l.size() == 12);
  CHECK(l.length() == 5);
  CHECK(l.str() == "[5,3,2,1,1]");
  CHECK(l.without(5).with(4).ell == 4);
  CHECK_THROWS_AS(l.with(4), std::domain_error);
  CHECK_THROWS_AS(l.without(4), std::domain_error);
  CHECK(LambdaIndex{}.empty());
}

TEST_CASE("ftheta base cases") {
  SeriesContext ctx = maps_ctx(6);
  const TSeries& th = ctx.base();
  CHECK(ctx.ftheta({}) == th);
  const TSeries expect = th.dt().mul_t(3) + TSeries::monomial(u * z * frac(1, 2), 2);
  CHECK(ctx.ftheta(LambdaIndex::from_parts({1})) == expect);
  CHECK(ctx.ftheta(LambdaIndex::from_parts({1, 1})).coeff(2) == u * frac(1, 2));

  // t dTheta/dt recovered from F_1
  const TSeries tdt = (ctx.ftheta(LambdaIndex::from_parts({1})) - TSeries::monomial(u * z * frac(1, 2), 2)).mul_t(-2);
  for (int k = 1; k <= 12; ++k) CHECK(tdt.coeff(k) == th.coeff(k) * Rational(k));
}

TEST_CASE("memo is transparent") {
  SeriesContext ctx = maps_ctx(6);
  const KPSeries a = kp_combinations(ctx);
  const std::size_t filled = ctx.memo_size();
  CHECK(filled > 10);
  ctx.clear_memo();
  CHECK(ctx.memo_size() == 0);
  const KPSeries b = kp_combinations(ctx);
  CHECK(a.kp1 == b.kp1);
  CHECK(a.kp2 == b.kp2);
  CHECK(a.kp3 == b.kp3);
}

TEST_CASE("kp combinations at low order") {
  SeriesContext ctx = maps_ctx(6);
  const KPSeries k = kp_combinations(ctx);
  CHECK(k.kp1.valuation() == 4);
  CHECK(k.kp1.coeff(4) == u * (u - MPoly(1)));
  // Theta is even in t, and so is every F_lambda built from it
  for (const TSeries* s : {&k.kp1, &k.kp2, &k.kp3}) {
    for (int j = s->min_order(); j <= s->max_order(); ++j) {
      CAPTURE(j);
      if (j % 2) CHECK(s->coeff(j).is_zero());
    }
  }
  CHECK_FALSE(k.kp2.coeff(k.kp2.valuation()).is_zero());

  SeriesContext bip(Model::bipartite, bip_eta(build_bip_table(8, 8), 8));
  const TSeries kb = kp_combinations(bip).kp1;
  CHECK(kb.valuation() == 4);
  CHECK(kb.coeff(4) == u * v * (u - MPoly(1)) * (v - MPoly(1)));
}

TEST_CASE("differential polynomial rules") {
  const DiffPoly f = DiffPoly::of_parts({1, 1}) * DiffPoly::of_parts({2});
  const DiffPoly df = f.d(1);
  CHECK(df.terms().size() == 2);
  CHECK(df.terms().at({LambdaIndex::from_parts({1, 1, 1}), LambdaIndex::from_parts({2})}) == 1);
  CHECK(df.terms().at({LambdaIndex::from_parts({1, 1}), LambdaIndex::from_parts({2, 1})}) == 1);
  CHECK(DiffPoly::constant(3).d(2).terms().empty());
  CHECK((f - f).terms().empty());
}

TEST_CASE("identities vanish") {
  for (Identity id : all_identities()) {
    CAPTURE(identity_name(id));
    const VerifyReport r = verify(id, default_order(id));
    CHECK(r.pass);
    CHECK(r.max_order >= r.min_order);
    CHECK(r.order == default_order(id));
  }
}

TEST_CASE("identity orders to 20") {
  CHECK(verify(Identity::shifted_bkp1, 20).pass);
  CHECK(verify(Identity::ode_maps, 20).pass);
  CHECK(verify(Identity::ode_triangulations, 24).pass);
  CHECK(verify(Identity::ode_ledoux, 24).pass);
  CHECK(verify(Identity::ode_bip_oneface, 16).pass);
}

TEST_CASE("shrinking the order never flips a check") {
  for (Identity id : all_identities()) {
    const int lo = identity_model(id) == Model::triangulations ? 6 : 2;
    for (int order = lo; order <= default_order(id); ++order) {
      CAPTURE(identity_name(id));
      CAPTURE(order);
      CHECK(verify(id, order).pass);
    }
    CHECK_THROWS_AS(verify(id, 0), std::invalid_argument);
  }
  CHECK_THROWS_AS(verify(Identity::ode_triangulations, 5), std::invalid_argument);
}

TEST_CASE("serial and parallel residuals agree") {
  const VerifyInputs in = build_inputs(Identity::ode_maps, 14);
  CHECK(residual(Identity::ode_maps, 14, in, Exec::serial) == residual(Identity::ode_maps, 14, in, Exec::parallel));
}

TEST_CASE("mutations are detected") {
  {
    VerifyInputs in = build_inputs(Identity::shifted_bkp1, 10);
    in.maps.mutable_at(3, 0) += MPoly::monomial(1, 2, 3);
    const VerifyReport r = verify_with(Identity::shifted_bkp1, 10, in);
    CHECK_FALSE(r.pass);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->order <= 10);
  }
  {
    VerifyInputs in = build_inputs(Identity::ode_ledoux, 14);
    in.ledoux.mutable_at(3, 2) += 1;
    CHECK_FALSE(verify_with(Identity::ode_ledoux, 14, in).pass);
  }
  {
    VerifyInputs in = build_inputs(Identity::fixed_charge, 8);
    in.maps.mutable_at(2, 1) += MPoly::monomial(1, 1, 1);
    CHECK_FALSE(verify_with(Identity::fixed_charge, 8, in).pass);
  }
  for (Identity id : {Identity::ode_maps, Identity::ode_bipartite, Identity::ode_triangulations,
                      Identity::ode_bip_oneface}) {
    CAPTURE(identity_name(id));
    VerifyInputs in = build_inputs(id, default_order(id));
    switch (id) {
      case Identity::ode_maps: in.maps.mutable_at(4, 2) += MPoly::monomial(1, 2, 2); break;
      case Identity::ode_bipartite: in.bip.mutable_at(5, 2) += MPoly::monomial(1, 2, 1, 2); break;
      case Identity::ode_triangulations: in.tri.mutable_at(2, 1) += 1; break;
      default: in.bip_oneface.mutable_at(4, 2, 2) += 1; break;
    }
    CHECK_FALSE(verify_with(id, default_order(id), in).pass);
  }
}
