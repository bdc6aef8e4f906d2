#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ellsurf/classify.hpp"

using namespace ellsurf;

TEST_CASE("bauer_f") {
  CHECK(bauer_f(2, 3) == 7);
  CHECK(bauer_f(2, 5) == 23);
  CHECK(bauer_f(3, 5) == (9 - 1) * (25 - 1) / 3 - 1);  // 63
  CHECK(bauer_f(1, 1) == -1);
  CHECK(bauer_f(1, 7) == -1);  // any multiplicity 1 collapses to -1
  CHECK(bauer_f(4, 5) == 119);
  CHECK_THROWS_AS(bauer_f(2, 4), input_error);
  CHECK_THROWS_AS(bauer_f(0, 1), input_error);
}

TEST_CASE("bauer_f is an integer on every coprime pair") {
  for (int m1 = 1; m1 <= 20; ++m1)
    for (int m2 = m1; m2 <= 20; ++m2) {
      if (gcd(Int(m1), Int(m2)) != 1) continue;
      Int f = bauer_f(m1, m2);
      CHECK(3 * (f + 1) == Int(m1 * m1 - 1) * Int(m2 * m2 - 1));
    }
}

TEST_CASE("recover_from_AB") {
  // A, B for (3,5): A = 8*24 = 192, B = 80*624 = 49920.
  CHECK(recover_from_AB(192, 49920) == MultPair{3, 5});
  CHECK(recover_from_AB(Int(8) * 48, Int(80) * 2400) == MultPair{3, 7});
  CHECK(recover_from_AB(Int(3) * 24, Int(15) * 624) == MultPair{2, 5});

  CHECK_THROWS_AS(recover_from_AB(0, 0), math_domain_error);     // m = 1
  CHECK_THROWS_AS(recover_from_AB(192, 49921), math_domain_error);
  CHECK_THROWS_AS(recover_from_AB(7, 21), math_domain_error);
}

TEST_CASE("recover_from_AB round-trips") {
  for (int m1 = 2; m1 <= 12; ++m1)
    for (int m2 = m1 + 1; m2 <= 13; ++m2) {
      if (gcd(Int(m1), Int(m2)) != 1) continue;
      Int a = Int(m1 * m1 - 1) * Int(m2 * m2 - 1);
      Int b = (int_pow(m1, 4) - 1) * (int_pow(m2, 4) - 1);
      CHECK(recover_from_AB(a, b) == MultPair{m1, m2});
    }
}

TEST_CASE("recover_with_product") {
  auto [c1a, c2a] = invariant_constants(make_params(0, 3, 5));
  (void)c2a;
  CHECK(recover_with_product(15, c1a, 0) == MultPair{3, 5});
  CHECK(recover_with_product(1, invariant_constants(make_params(1, 1, 1)).first,
                             1) == MultPair{1, 1});
  CHECK(recover_with_product(15,
                             invariant_constants(make_params(0, 1, 15)).first,
                             0) == MultPair{1, 15});
  CHECK_THROWS_AS(recover_with_product(0, 1, 0), input_error);
  CHECK_THROWS_AS(recover_with_product(6, 1, 0), math_domain_error);
}

TEST_CASE("recover_even") {
  // (0, {2,3}) at p = -5: a_n = 3.
  EvenPair p = recover_even(6, 3, -5, 0);
  CHECK(p.m1 == 2);
  CHECK(p.m2 == 3);

  EvenPair q = recover_even(2, 1, -5, 0);
  CHECK(q.m1 == 2);
  CHECK(q.m2 == 1);

  // (1, {2,3}) at p = -13: a_n = 1890.
  EvenPair r = recover_even(6, 1890, -13, 1);
  CHECK(r.m1 == 2);
  CHECK(r.m2 == 3);

  CHECK_THROWS_AS(recover_even(6, 4, -5, 0), math_domain_error);
  CHECK_THROWS_AS(recover_even(6, 2, -5, 0), math_domain_error);  // parities
}

TEST_CASE("jd_multiplicity") {
  CHECK(jd_multiplicity(3, 1) == 3);
  CHECK(jd_multiplicity(3, 0) == 1);  // the Jacobian has no multiple fiber
  CHECK(jd_multiplicity(6, 4) == 3);
  CHECK(jd_multiplicity(6, 5) == 6);
  CHECK(jd_multiplicity(6, 6) == 1);
  CHECK(jd_multiplicity(1, 0) == 1);
  CHECK_THROWS_AS(jd_multiplicity(0, 1), input_error);
}

TEST_CASE("verdict formatting") {
  Verdict v;
  v.kind = VerdictKind::invariant_distinct;
  v.witness_text = "C1: 224 vs 416";
  CHECK(v.str() == "VERDICT=invariant-distinct WITNESS=C1: 224 vs 416");
  CHECK(verdict_kind_str(VerdictKind::homotopy_distinct) ==
        "homotopy-distinct");
  CHECK(verdict_kind_str(VerdictKind::deformation_equivalent) ==
        "deformation-equivalent");
  CHECK(verdict_kind_str(VerdictKind::inconclusive) == "inconclusive");
}

TEST_CASE("distinguish goldens") {
  auto model = [](int pg, int m1, int m2, int r = 0) {
    return build_surface_model(pg, m1, m2, r);
  };

  CHECK(distinguish(model(0, 3, 5), model(0, 3, 7)).str() ==
        "VERDICT=invariant-distinct WITNESS=C1: 191 vs 383");
  CHECK(distinguish(model(0, 3, 7), model(0, 3, 5)).str() ==
        "VERDICT=invariant-distinct WITNESS=C1: 191 vs 383");

  CHECK(distinguish(model(1, 1, 15), model(1, 3, 5)).str() ==
        "VERDICT=invariant-distinct WITNESS=C1: 224 vs 416");

  CHECK(distinguish(model(0, 1, 1), model(0, 1, 5)).str() ==
        "VERDICT=deformation-equivalent WITNESS=both rational (pg=0 with a "
        "multiplicity-1 fiber), r=0");

  CHECK(distinguish(model(0, 2, 3), model(0, 2, 5)).str() ==
        "VERDICT=invariant-distinct WITNESS=a_n (so3) at p=-5: 3 vs 5");

  CHECK(distinguish(model(0, 1, 3), model(0, 2, 3)).str() ==
        "VERDICT=invariant-distinct WITNESS=Bauer f: -1 vs 7");

  CHECK(distinguish(model(0, 2, 3), model(0, 2, 3)).str() ==
        "VERDICT=deformation-equivalent WITNESS=fingerprint (pg=0, r=0, "
        "m={2,3}) equal");

  CHECK(distinguish(model(0, 3, 5), model(0, 2, 3)).str() ==
        "VERDICT=invariant-distinct WITNESS=a_n (so3) at p=-5: 1 vs 3");

  CHECK(distinguish(model(1, 1, 1), model(1, 1, 2)).str() ==
        "VERDICT=invariant-distinct WITNESS=a_n (su2) at c=2: 1 vs 2");

  CHECK(distinguish(model(0, 2, 3), model(1, 2, 3)).str() ==
        "VERDICT=homotopy-distinct WITNESS=homotopy (pg,r): (0,0) vs (1,0)");

  CHECK(distinguish(model(0, 2, 3), model(0, 2, 3, 1)).str() ==
        "VERDICT=homotopy-distinct WITNESS=homotopy (pg,r): (0,0) vs (0,1)");

  // Both even products with equal mu: settled by the so3 coefficient.
  CHECK(distinguish(model(1, 1, 6), model(1, 2, 3)).str() ==
        "VERDICT=invariant-distinct WITNESS=a_n (so3) at p=-13: 630 vs 1890");

  CHECK(distinguish(model(1, 3, 5), model(1, 3, 7)).str() ==
        "VERDICT=invariant-distinct WITNESS=C1: 416 vs 824");
}

TEST_CASE("distinguish is symmetric and reflexive") {
  std::vector<SurfaceModel> models;
  for (int pg = 0; pg <= 1; ++pg)
    for (int m1 = 1; m1 <= 4; ++m1)
      for (int m2 = m1; m2 <= 5; ++m2) {
        if (gcd(Int(m1), Int(m2)) != 1) continue;
        models.push_back(build_surface_model(pg, m1, m2, 0));
      }
  for (const auto& a : models) {
    CHECK(distinguish(a, a).kind == VerdictKind::deformation_equivalent);
    for (const auto& b : models)
      CHECK(distinguish(a, b).str() == distinguish(b, a).str());
  }
}

TEST_CASE("distinguish separates what the fingerprint separates") {
  std::vector<SurfaceModel> models;
  for (int m1 = 1; m1 <= 5; ++m1)
    for (int m2 = m1; m2 <= 6; ++m2) {
      if (gcd(Int(m1), Int(m2)) != 1) continue;
      models.push_back(build_surface_model(1, m1, m2, 0));
    }
  for (const auto& a : models)
    for (const auto& b : models) {
      bool same_pair = a.m1 == b.m1 && a.m2 == b.m2;
      Verdict v = distinguish(a, b);
      if (same_pair)
        CHECK(v.kind == VerdictKind::deformation_equivalent);
      else
        CHECK(v.kind == VerdictKind::invariant_distinct);
    }
}
