#pragma once

#include <vector>

#include "ellsurf/lattice.hpp"

namespace ellsurf {

// All integral zeta with zeta . w = a and qmin <= zeta^2 <= qmax, for a
// lattice of signature (1, n-1) and a class w with the form negative definite
// on the affine slices (w^2 > 0, or w isotropic is rejected by the positivity
// check inside).  Exact rational Fincke-Pohst on the kernel sublattice of the
// functional; no floating point.  The kernel is deliberately self-contained so
// it can be swapped for a reduction-based one at higher ranks.
std::vector<ClassVector> enumerate_slice(const GramLattice& lattice,
                                         const ClassVector& w, const Int& a,
                                         const Int& qmin, const Int& qmax);

// All integral zeta with zeta . w1 = a1, zeta . w2 = a2 and
// qmin <= zeta^2 <= qmax.  The functionals must be independent and the form
// negative definite on their joint kernel (true whenever span(w1, w2) has
// signature (1, 1), e.g. a polarization paired with the isotropic kappa).
// Fixing both values keeps the residual search ellipsoid small regardless of
// w1^2, which is what makes suitability scans cheap for polarizations close
// to the boundary of the positive cone.
std::vector<ClassVector> enumerate_slice2(const GramLattice& lattice,
                                          const ClassVector& w1, const Int& a1,
                                          const ClassVector& w2, const Int& a2,
                                          const Int& qmin, const Int& qmax);

}  // namespace ellsurf
