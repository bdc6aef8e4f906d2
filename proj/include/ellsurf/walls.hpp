#pragma once

#include <optional>
#include <vector>

#include "ellsurf/lattice.hpp"

namespace ellsurf {

// What the wall and chamber operations actually consume: a lattice with
// b+ = 1 plus the primitive isotropic kappa and the fiber f = m1*m2*kappa.
// Toy lattices that are not full surface models get one of these directly.
struct ChamberContext {
  GramLattice lattice;
  ClassVector kappa;
  ClassVector fiber;
};

ChamberContext context_of(const SurfaceModel& model);
ChamberContext make_chamber_context(GramLattice lattice, ClassVector kappa,
                                    const Int& fiber_multiple);

// A wall of type (delta, c): zeta = delta (mod 2), delta^2 - 4c <= zeta^2 < 0.
struct WallClass {
  ClassVector zeta;
  Int square;
  ClassVector delta;
  Int c;

  bool operator==(const WallClass&) const = default;
};

// A class with cls^2 > 0 and cls . kappa > 0.
struct Polarization {
  ClassVector cls;
};

Polarization make_polarization(const ChamberContext& ctx, ClassVector cls);

// Purely arithmetic type check; needs no signature hypothesis.
bool is_wall(const GramLattice& lattice, const ClassVector& zeta,
             const ClassVector& delta, const Int& c);

// Walls of type (delta, c) with zeta . x > 0 > zeta . y, sorted
// lexicographically.  Emitted walls are normalized against the first
// polarization argument.  Requires b+ = 1 and delta . kappa odd.
std::vector<WallClass> separating_walls(const ChamberContext& ctx,
                                        const Polarization& x,
                                        const Polarization& y,
                                        const ClassVector& delta, const Int& c);

struct SuitabilityResult {
  bool suitable = false;
  // Present iff unsuitable: a wall with sign(f . zeta) != sign(L . zeta),
  // normalized so zeta . L > 0, lexicographically least among violations.
  std::optional<WallClass> witness;
};

// Throws on_wall_error when L . zeta = 0 for some wall of the given type.
SuitabilityResult is_suitable(const ChamberContext& ctx, const Polarization& L,
                              const ClassVector& delta, const Int& c);

enum class SuitableMode { paper_bound, minimal };

struct MakeSuitableResult {
  Int n;
  Polarization L;
};

// L0 + n*f with n either the closed-form bound floor(-p (L0.f) / 2) + 1 or
// the least n >= 0 that passes is_suitable (on-wall values skipped).
MakeSuitableResult make_suitable(const ChamberContext& ctx,
                                 const Polarization& L0,
                                 const ClassVector& delta, const Int& c,
                                 SuitableMode mode);

// True iff no wall of type (delta, c' <= c) separates L1 from L2.  Throws
// on_wall_error when either polarization lies on such a wall.
bool same_chamber(const ChamberContext& ctx, const Polarization& L1,
                  const Polarization& L2, const ClassVector& delta,
                  const Int& c);

struct DestabilizingData {
  ClassVector zeta;  // 2F - delta
  Int ell_z;         // c + F^2 - F . delta
  bool wall;
};

// Numerical layer of the destabilization bookkeeping; requires ell_z >= 0.
DestabilizingData destabilizing_data(const ChamberContext& ctx,
                                     const ClassVector& F,
                                     const ClassVector& delta, const Int& c);

}  // namespace ellsurf
