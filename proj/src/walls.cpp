#include "ellsurf/walls.hpp"

#include <algorithm>
#include <utility>

#include "ellsurf/enumerate.hpp"

namespace ellsurf {

ChamberContext context_of(const SurfaceModel& model) {
  return ChamberContext{model.lattice, model.kappa, model.fiber};
}

ChamberContext make_chamber_context(GramLattice lattice, ClassVector kappa,
                                    const Int& fiber_multiple) {
  if (fiber_multiple < 1) throw input_error("fiber multiple must be positive");
  if (kappa.size() != lattice.rank())
    throw input_error("kappa length does not match lattice rank");
  if (lattice.square(kappa) != 0) throw input_error("kappa^2 must be 0");
  if (vec_content(kappa) != 1) throw input_error("kappa must be primitive");
  ClassVector fiber = vec_scale(fiber_multiple, kappa);
  return ChamberContext{std::move(lattice), std::move(kappa), std::move(fiber)};
}

Polarization make_polarization(const ChamberContext& ctx, ClassVector cls) {
  if (ctx.lattice.square(cls) <= 0)
    throw input_error("polarization must have positive square");
  if (ctx.lattice.pair(cls, ctx.kappa) <= 0)
    throw input_error("polarization must pair positively with kappa");
  return Polarization{std::move(cls)};
}

bool is_wall(const GramLattice& lattice, const ClassVector& zeta,
             const ClassVector& delta, const Int& c) {
  if (zeta.size() != lattice.rank() || delta.size() != lattice.rank())
    throw input_error("class vector length does not match lattice rank");
  for (std::size_t i = 0; i < zeta.size(); ++i)
    if (mod2(zeta[i] - delta[i]) != 0) return false;
  Int sq = lattice.square(zeta);
  return lattice.square(delta) - 4 * c <= sq && sq < 0;
}

namespace {

void require_bplus_one(const ChamberContext& ctx) {
  if (ctx.lattice.signature().pos != 1)
    throw input_error("wall enumeration requires b+ = 1");
}

void require_odd_delta(const ChamberContext& ctx, const ClassVector& delta) {
  if (mod2(ctx.lattice.pair(delta, ctx.kappa)) != 1)
    throw input_error("delta . kappa must be odd");
}

bool parity_matches(const ClassVector& zeta, const ClassVector& delta) {
  for (std::size_t i = 0; i < zeta.size(); ++i)
    if (mod2(zeta[i] - delta[i]) != 0) return false;
  return true;
}

bool lex_less(const ClassVector& a, const ClassVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<WallClass> separating_walls(const ChamberContext& ctx,
                                        const Polarization& x,
                                        const Polarization& y,
                                        const ClassVector& delta, const Int& c) {
  require_bplus_one(ctx);
  require_odd_delta(ctx, delta);
  const GramLattice& L = ctx.lattice;
  Int p = L.square(delta) - 4 * c;
  if (p >= 0) return {};

  Int xx = L.square(x.cls), yy = L.square(y.cls), xy = L.pair(x.cls, y.cls);
  // Reverse Cauchy-Schwarz: D > 0 unless the polarizations are proportional,
  // in which case nothing separates them.
  Int D = xy * xy - xx * yy;
  if (D <= 0) return {};

  // A separating wall has a = zeta . x >= 1 and b = zeta . y <= -1, and its
  // projection into the plane <x, y> has square
  //   -(y^2 a^2 - 2 (x.y) ab + x^2 b^2) / D in [p, 0],
  // so the residual ellipsoid orthogonal to the plane never exceeds -p.
  // Hodge-index bound on the slices: a^2 y^2 < (-p) D.
  Int bound_num = (-p) * D;
  Int amax = isqrt_floor(bound_num / yy);
  while (amax > 0 && amax * amax * yy >= bound_num) --amax;
  while ((amax + 1) * (amax + 1) * yy < bound_num) ++amax;

  int a_parity = mod2(L.pair(delta, x.cls));
  int b_parity = mod2(L.pair(delta, y.cls));
  std::vector<WallClass> walls;
  for (Int a = 1; a <= amax; ++a) {
    if (mod2(a) != a_parity) continue;
    // b range from x^2 b^2 - 2 (x.y) ab + (y^2 a^2 + pD) <= 0, widened by one
    // on each side so the floor square root stays conservative.
    Int s = isqrt_floor(D * (a * a - p * xx));
    Int blo = floor_div(xy * a - s, xx) - 1;
    Int bhi = floor_div(xy * a + s, xx) + 1;
    if (bhi > -1) bhi = -1;
    for (Int b = blo; b <= bhi; ++b) {
      if (mod2(b) != b_parity) continue;
      for (ClassVector& zeta :
           enumerate_slice2(L, x.cls, a, y.cls, b, p, -1)) {
        if (!parity_matches(zeta, delta)) continue;
        Int sq = L.square(zeta);
        walls.push_back(WallClass{std::move(zeta), std::move(sq), delta, c});
      }
    }
  }
  std::sort(walls.begin(), walls.end(),
            [](const WallClass& a, const WallClass& b) {
              return lex_less(a.zeta, b.zeta);
            });
  return walls;
}

namespace {

// Walls zeta of type (delta, c) with zeta . L = b for b in [bmin, 0], where
// bmin is the Hodge-index lower bound for sign-violating walls.  Returns the
// pair (violations normalized so zeta . L > 0, walls through L).
struct SignScan {
  std::vector<WallClass> violations;
  std::vector<WallClass> on_wall;
};

SignScan scan_against(const ChamberContext& ctx, const Polarization& L,
                      const ClassVector& delta, const Int& c) {
  SignScan scan;
  const GramLattice& G = ctx.lattice;
  Int p = G.square(delta) - 4 * c;
  if (p >= 0) return scan;
  Int l2 = G.square(L.cls);
  Int lk = G.pair(L.cls, ctx.kappa);
  // A wall with zeta . f >= 0 >= zeta . L projects into the Lorentzian plane
  // <L, kappa> with square 2tb/lk - l2 t^2/lk^2 >= zeta^2 >= p, where
  // t = zeta . kappa > 0 and b = zeta . L.  Hence t^2 l2 <= -p lk^2 and, for
  // b < 0, b >= (p lk^2 + t^2 l2) / (2 t lk).  Pinning both functionals keeps
  // each residual ellipsoid small regardless of L^2; t is odd because
  // delta . kappa is.
  for (Int t = 1; t * t * l2 <= -p * lk * lk; t += 2) {
    for (ClassVector& zeta : enumerate_slice2(G, L.cls, 0, ctx.kappa, t, p, -1)) {
      if (!parity_matches(zeta, delta)) continue;
      Int sq = G.square(zeta);
      scan.on_wall.push_back(WallClass{std::move(zeta), std::move(sq), delta, c});
    }
    Int bmin = rat_ceil(make_rat(p * lk * lk + t * t * l2, 2 * t * lk));
    for (Int b = bmin; b <= -1; ++b) {
      for (ClassVector& zeta :
           enumerate_slice2(G, L.cls, b, ctx.kappa, t, p, -1)) {
        if (!parity_matches(zeta, delta)) continue;
        Int sq = G.square(zeta);
        ClassVector flipped = vec_neg(zeta);  // normalize zeta . L > 0
        scan.violations.push_back(
            WallClass{std::move(flipped), std::move(sq), delta, c});
      }
    }
  }
  auto by_zeta = [](const WallClass& a, const WallClass& b) {
    return lex_less(a.zeta, b.zeta);
  };
  std::sort(scan.violations.begin(), scan.violations.end(), by_zeta);
  std::sort(scan.on_wall.begin(), scan.on_wall.end(), by_zeta);
  return scan;
}

}  // namespace

SuitabilityResult is_suitable(const ChamberContext& ctx, const Polarization& L,
                              const ClassVector& delta, const Int& c) {
  require_bplus_one(ctx);
  require_odd_delta(ctx, delta);
  SignScan scan = scan_against(ctx, L, delta, c);
  if (!scan.on_wall.empty())
    throw on_wall_error("polarization lies on the wall " +
                        vec_str(scan.on_wall.front().zeta) + " of type (" +
                        vec_str(delta) + "; " + c.str() + ")");
  if (!scan.violations.empty()) return {false, scan.violations.front()};
  return {true, std::nullopt};
}

MakeSuitableResult make_suitable(const ChamberContext& ctx,
                                 const Polarization& L0,
                                 const ClassVector& delta, const Int& c,
                                 SuitableMode mode) {
  require_bplus_one(ctx);
  require_odd_delta(ctx, delta);
  Int p = ctx.lattice.square(delta) - 4 * c;
  Int lf = ctx.lattice.pair(L0.cls, ctx.fiber);
  Int paper_n = p >= 0 ? Int(0) : floor_div(-p * lf, 2) + 1;

  auto at = [&](const Int& n) {
    return make_polarization(ctx, vec_add(L0.cls, vec_scale(n, ctx.fiber)));
  };

  if (mode == SuitableMode::paper_bound) {
    Polarization L = at(paper_n);
    if (!is_suitable(ctx, L, delta, c).suitable)
      throw math_domain_error("bound n > -p(L0.f)/2 failed to produce a suitable class");
    return {paper_n, std::move(L)};
  }
  for (Int n = 0; n <= paper_n; ++n) {
    Polarization L = at(n);
    try {
      if (is_suitable(ctx, L, delta, c).suitable) return {n, std::move(L)};
    } catch (const on_wall_error&) {
      // L0 + n f on a wall: keep moving along the fiber direction.
    }
  }
  throw math_domain_error("no suitable polarization up to the closed-form bound");
}

bool same_chamber(const ChamberContext& ctx, const Polarization& L1,
                  const Polarization& L2, const ClassVector& delta,
                  const Int& c) {
  require_bplus_one(ctx);
  require_odd_delta(ctx, delta);
  const GramLattice& G = ctx.lattice;
  Int p = G.square(delta) - 4 * c;
  if (p >= 0) return true;
  for (const Polarization* L : {&L1, &L2}) {
    for (ClassVector& zeta : enumerate_slice(G, L->cls, 0, p, -1))
      if (parity_matches(zeta, delta))
        throw on_wall_error("polarization " + vec_str(L->cls) +
                            " lies on the wall " + vec_str(zeta));
  }
  return separating_walls(ctx, L1, L2, delta, c).empty();
}

DestabilizingData destabilizing_data(const ChamberContext& ctx,
                                     const ClassVector& F,
                                     const ClassVector& delta, const Int& c) {
  const GramLattice& G = ctx.lattice;
  ClassVector zeta = vec_sub(vec_scale(2, F), delta);
  Int ell_z = c + G.square(F) - G.pair(F, delta);
  if (ell_z < 0)
    throw math_domain_error("negative subscheme length: not a destabilizing datum");
  bool wall = is_wall(G, zeta, delta, c);
  return {std::move(zeta), std::move(ell_z), wall};
}

}  // namespace ellsurf
