#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "ellsurf/walls.hpp"

namespace ellsurf::testing {

// Rank-2 toy <1> + <-1> with kappa = (1,1): the smallest lattice with b+ = 1
// and an isotropic primitive class.
inline ChamberContext toy_rank2(const Int& fiber_multiple = 1) {
  IntMat g(2, 2);
  g.at(0, 0) = 1;
  g.at(1, 1) = -1;
  return make_chamber_context(GramLattice(g), ClassVector{1, 1},
                              fiber_multiple);
}

// Rank-3 toy <1> + <-1> + <-1> with kappa = (1,1,0).
inline ChamberContext toy_rank3(const Int& fiber_multiple = 1) {
  IntMat g(3, 3);
  g.at(0, 0) = 1;
  g.at(1, 1) = -1;
  g.at(2, 2) = -1;
  return make_chamber_context(GramLattice(g), ClassVector{1, 1, 0},
                              fiber_multiple);
}

inline bool lex_less(const ClassVector& a, const ClassVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Every vector with coordinates in [-box, box].
inline std::vector<ClassVector> coordinate_box(std::size_t rank, int box) {
  std::vector<ClassVector> all;
  ClassVector cur(rank, Int(-box));
  while (true) {
    all.push_back(cur);
    std::size_t i = 0;
    while (i < rank && cur[i] == box) cur[i++] = -box;
    if (i == rank) break;
    ++cur[i];
  }
  return all;
}

// Oracle: separating walls by exhaustive scan over the coordinate box,
// normalized and ordered exactly like the production enumerator.
inline std::vector<ClassVector> brute_separating(const ChamberContext& ctx,
                                                 const ClassVector& x,
                                                 const ClassVector& y,
                                                 const ClassVector& delta,
                                                 const Int& c, int box = 12) {
  std::vector<ClassVector> found;
  for (const ClassVector& zeta : coordinate_box(ctx.lattice.rank(), box)) {
    if (!is_wall(ctx.lattice, zeta, delta, c)) continue;
    if (ctx.lattice.pair(zeta, x) > 0 && ctx.lattice.pair(zeta, y) < 0)
      found.push_back(zeta);
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

struct BruteSuitability {
  bool on_wall = false;
  bool suitable = false;
  std::optional<ClassVector> witness;  // least violation, zeta . L > 0
};

// Oracle for is_suitable over the same box: flags an on-wall polarization,
// otherwise reports the lexicographically least sign violation.
inline BruteSuitability brute_suitable(const ChamberContext& ctx,
                                       const ClassVector& L,
                                       const ClassVector& delta, const Int& c,
                                       int box = 12) {
  BruteSuitability res;
  std::vector<ClassVector> violations;
  for (const ClassVector& zeta : coordinate_box(ctx.lattice.rank(), box)) {
    if (!is_wall(ctx.lattice, zeta, delta, c)) continue;
    Int zl = ctx.lattice.pair(zeta, L);
    Int zf = ctx.lattice.pair(zeta, ctx.fiber);
    if (zl == 0) res.on_wall = true;
    if (zl > 0 && zf < 0) violations.push_back(zeta);
  }
  if (res.on_wall) return res;
  if (violations.empty()) {
    res.suitable = true;
    return res;
  }
  res.witness = *std::min_element(violations.begin(), violations.end(),
                                  lex_less);
  return res;
}

inline std::vector<ClassVector> zetas_of(const std::vector<WallClass>& walls) {
  std::vector<ClassVector> out;
  out.reserve(walls.size());
  for (const WallClass& w : walls) out.push_back(w.zeta);
  return out;
}

// Fixed-seed generator so failures reproduce byte-for-byte.
inline std::mt19937_64 rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Int rand_int(std::mt19937_64& gen, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return Int(dist(gen));
}

}  // namespace ellsurf::testing
