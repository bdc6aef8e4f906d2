#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellsurf/walls.hpp"
#include "helpers.hpp"

using namespace ellsurf;
using namespace ellsurf::testing;

namespace {

Polarization pol(const ChamberContext& ctx, ClassVector v) {
  return make_polarization(ctx, std::move(v));
}

}  // namespace

TEST_CASE("is_wall on the rank-2 toy") {
  ChamberContext ctx = toy_rank2();
  ClassVector delta{1, 0};
  CHECK(is_wall(ctx.lattice, ClassVector{1, 2}, delta, 1));
  CHECK(is_wall(ctx.lattice, ClassVector{-1, 2}, delta, 1));
  CHECK(!is_wall(ctx.lattice, ClassVector{1, 0}, delta, 1));   // zeta^2 >= 0
  CHECK(!is_wall(ctx.lattice, ClassVector{0, 2}, delta, 1));   // parity
  CHECK(!is_wall(ctx.lattice, ClassVector{1, 4}, delta, 1));   // below -p
  CHECK(!is_wall(ctx.lattice, ClassVector{1, 2}, delta, 0));   // p > 0
}

TEST_CASE("polarization validation") {
  ChamberContext ctx = toy_rank2();
  CHECK_THROWS_WITH_AS(pol(ctx, ClassVector{0, 1}),
                       "polarization must have positive square", input_error);
  CHECK_THROWS_WITH_AS(pol(ctx, ClassVector{-3, -1}),
                       "polarization must pair positively with kappa",
                       input_error);
}

TEST_CASE("context validation") {
  IntMat g(2, 2);
  g.at(0, 0) = 1;
  g.at(1, 1) = -1;
  CHECK_THROWS_AS(make_chamber_context(GramLattice(g), ClassVector{1, 0}, 1),
                  input_error);  // kappa^2 != 0
  CHECK_THROWS_AS(make_chamber_context(GramLattice(g), ClassVector{2, 2}, 1),
                  input_error);  // imprimitive
  CHECK_THROWS_AS(make_chamber_context(GramLattice(g), ClassVector{1, 1}, 0),
                  input_error);  // fiber multiple
}

TEST_CASE("separating_walls golden on the rank-2 toy") {
  ChamberContext ctx = toy_rank2();
  ClassVector delta{1, 0};
  auto walls = separating_walls(ctx, pol(ctx, {3, 1}), pol(ctx, {5, 3}),
                                delta, 1);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].zeta == ClassVector{1, 2});
  CHECK(walls[0].square == -3);
  CHECK(walls[0].delta == delta);
  CHECK(walls[0].c == 1);

  CHECK(separating_walls(ctx, pol(ctx, {3, 1}), pol(ctx, {3, 1}), delta, 1)
            .empty());
}

TEST_CASE("separating_walls input requirements") {
  IntMat g(3, 3);
  g.at(0, 0) = 1;
  g.at(1, 1) = 1;
  g.at(2, 2) = -1;
  ChamberContext two = make_chamber_context(GramLattice(g),
                                            ClassVector{1, 0, 1}, 1);
  CHECK_THROWS_WITH_AS(
      separating_walls(two, pol(two, {2, 0, 1}), pol(two, {2, 0, -1}),
                       ClassVector{1, 0, 0}, 1),
      "wall enumeration requires b+ = 1", input_error);

  ChamberContext ctx = toy_rank2();
  CHECK_THROWS_WITH_AS(
      separating_walls(ctx, pol(ctx, {3, 1}), pol(ctx, {5, 3}),
                       ClassVector{0, 2}, 1),
      "delta . kappa must be odd", input_error);
}

TEST_CASE("is_suitable goldens on the rank-2 toy") {
  ChamberContext ctx = toy_rank2();
  ClassVector delta{1, 0};

  SuitabilityResult bad = is_suitable(ctx, pol(ctx, {3, 1}), delta, 1);
  CHECK(!bad.suitable);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->zeta == ClassVector{1, 2});

  SuitabilityResult good = is_suitable(ctx, pol(ctx, {5, 3}), delta, 1);
  CHECK(good.suitable);
  CHECK(!good.witness.has_value());

  // No walls at all when p >= 0.
  CHECK(is_suitable(ctx, pol(ctx, {3, 1}), delta, 0).suitable);

  CHECK_THROWS_AS(is_suitable(ctx, pol(ctx, {4, 2}), delta, 1),
                  on_wall_error);
}

TEST_CASE("make_suitable goldens on the rank-2 toy") {
  ChamberContext ctx = toy_rank2();
  ClassVector delta{1, 0};

  MakeSuitableResult paper = make_suitable(ctx, pol(ctx, {3, 1}), delta, 1,
                                           SuitableMode::paper_bound);
  CHECK(paper.n == 4);
  CHECK(paper.L.cls == ClassVector{7, 5});
  CHECK(is_suitable(ctx, paper.L, delta, 1).suitable);

  MakeSuitableResult min = make_suitable(ctx, pol(ctx, {3, 1}), delta, 1,
                                         SuitableMode::minimal);
  CHECK(min.n == 2);  // n = 1 lands on a wall and is skipped
  CHECK(min.L.cls == ClassVector{5, 3});

  MakeSuitableResult already = make_suitable(ctx, pol(ctx, {5, 3}), delta, 1,
                                             SuitableMode::minimal);
  CHECK(already.n == 0);
  CHECK(already.L.cls == ClassVector{5, 3});
}

TEST_CASE("same_chamber goldens on the rank-2 toy") {
  ChamberContext ctx = toy_rank2();
  ClassVector delta{1, 0};
  CHECK(same_chamber(ctx, pol(ctx, {5, 3}), pol(ctx, {6, 4}), delta, 1));
  CHECK(!same_chamber(ctx, pol(ctx, {3, 1}), pol(ctx, {5, 3}), delta, 1));
  CHECK(same_chamber(ctx, pol(ctx, {3, 1}), pol(ctx, {3, 1}), delta, 1));
  CHECK_THROWS_AS(
      same_chamber(ctx, pol(ctx, {4, 2}), pol(ctx, {5, 3}), delta, 1),
      on_wall_error);
}

TEST_CASE("destabilizing_data on the rank-2 toy") {
  ChamberContext ctx = toy_rank2();
  ClassVector delta{1, 0};

  DestabilizingData fk = destabilizing_data(ctx, ctx.kappa, delta, 1);
  CHECK(fk.zeta == ClassVector{1, 2});
  CHECK(fk.ell_z == 0);
  CHECK(fk.wall);

  DestabilizingData fd = destabilizing_data(ctx, delta, delta, 1);
  CHECK(fd.zeta == ClassVector{1, 0});
  CHECK(fd.ell_z == 1);
  CHECK(!fd.wall);

  DestabilizingData f0 = destabilizing_data(ctx, ClassVector{0, 0}, delta, 1);
  CHECK(f0.zeta == ClassVector{-1, 0});
  CHECK(f0.ell_z == 1);
  CHECK(!f0.wall);

  CHECK_THROWS_AS(destabilizing_data(ctx, ClassVector{0, 2}, delta, 1),
                  math_domain_error);
}

TEST_CASE("wall identity zeta^2 = p + 4 ell_z") {
  ChamberContext ctx = toy_rank3();
  ClassVector delta{1, 0, 0};
  auto gen = rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    ClassVector F(3);
    for (auto& e : F) e = rand_int(gen, -3, 3);
    Int c = rand_int(gen, 0, 4);
    Int ell = c + ctx.lattice.square(F) - ctx.lattice.pair(F, delta);
    if (ell < 0) {
      CHECK_THROWS_AS(destabilizing_data(ctx, F, delta, c),
                      math_domain_error);
      continue;
    }
    DestabilizingData d = destabilizing_data(ctx, F, delta, c);
    CHECK(ctx.lattice.square(d.zeta) ==
          ctx.lattice.square(delta) - 4 * c + 4 * d.ell_z);
  }
}

TEST_CASE("oracle agreement on random instances") {
  auto gen = rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    ChamberContext ctx = (trial % 2 == 0) ? toy_rank2() : toy_rank3();
    const std::size_t n = ctx.lattice.rank();

    ClassVector delta(n);
    do {
      for (auto& e : delta) e = rand_int(gen, -1, 1);
    } while (mod2(ctx.lattice.pair(delta, ctx.kappa)) != 1);
    Int c = rand_int(gen, 1, 2);

    auto random_pol = [&] {
      ClassVector v(n);
      while (true) {
        for (auto& e : v) e = rand_int(gen, -2, 2);
        v[0] = 1;
        Int bound = 0;
        for (std::size_t i = 1; i < n; ++i)
          bound += (v[i] < 0 ? -v[i] : v[i]);
        v[0] = bound + rand_int(gen, 1, 3);
        if (ctx.lattice.square(v) > 0 && ctx.lattice.pair(v, ctx.kappa) > 0)
          return pol(ctx, v);
      }
    };
    Polarization x = random_pol(), y = random_pol();

    auto walls = separating_walls(ctx, x, y, delta, c);
    for (const WallClass& w : walls)
      for (const Int& e : w.zeta)
        REQUIRE((e >= -12 && e <= 12));  // oracle box must contain everything
    CHECK(zetas_of(walls) == brute_separating(ctx, x.cls, y.cls, delta, c));

    BruteSuitability oracle = brute_suitable(ctx, x.cls, delta, c);
    if (oracle.on_wall) {
      CHECK_THROWS_AS(is_suitable(ctx, x, delta, c), on_wall_error);
      continue;
    }
    SuitabilityResult got = is_suitable(ctx, x, delta, c);
    CHECK(got.suitable == oracle.suitable);
    if (!oracle.suitable) {
      REQUIRE(got.witness.has_value());
      REQUIRE(oracle.witness.has_value());
      CHECK(got.witness->zeta == *oracle.witness);
    }
  }
}

TEST_CASE("surface-model goldens") {
  SurfaceModel model = build_surface_model(0, 2, 3, 0);
  ChamberContext ctx = context_of(model);
  Polarization x = pol(ctx, model.x_class);
  Polarization y = pol(ctx, vec_add(model.x_class, vec_scale(5, model.kappa)));

  ClassVector zeta = vec_sub(vec_scale(2, model.kappa), model.x_class);
  auto walls = separating_walls(ctx, x, y, model.x_class, 1);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].zeta == zeta);
  CHECK(walls[0].square == -3);

  SuitabilityResult bad = is_suitable(ctx, x, model.x_class, 1);
  CHECK(!bad.suitable);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->zeta == zeta);

  MakeSuitableResult min =
      make_suitable(ctx, x, model.x_class, 1, SuitableMode::minimal);
  CHECK(min.n == 1);
  CHECK(min.L.cls == vec_add(model.x_class, model.fiber));

  MakeSuitableResult paper =
      make_suitable(ctx, x, model.x_class, 1, SuitableMode::paper_bound);
  CHECK(paper.n == 10);
  CHECK(paper.L.cls ==
        vec_add(model.x_class, vec_scale(10, model.fiber)));
  CHECK(is_suitable(ctx, paper.L, model.x_class, 1).suitable);
  CHECK(same_chamber(ctx, min.L, paper.L, model.x_class, 1));
}

TEST_CASE("emitted walls pair oddly with kappa") {
  ChamberContext ctx = toy_rank3();
  auto walls = separating_walls(ctx, pol(ctx, {4, 1, 1}), pol(ctx, {4, -3, 0}),
                                ClassVector{1, 0, 0}, 2);
  CHECK(!walls.empty());
  for (const WallClass& w : walls) {
    CHECK(mod2(ctx.lattice.pair(w.zeta, ctx.kappa)) == 1);
    CHECK(ctx.lattice.pair(w.zeta, ClassVector{4, 1, 1}) > 0);
    CHECK(ctx.lattice.pair(w.zeta, ClassVector{4, -3, 0}) < 0);
    CHECK(w.square == ctx.lattice.square(w.zeta));
  }
  // Sorted lexicographically.
  for (std::size_t i = 1; i < walls.size(); ++i)
    CHECK(lex_less(walls[i - 1].zeta, walls[i].zeta));
}
