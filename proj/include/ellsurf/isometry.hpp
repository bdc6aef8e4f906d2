#pragma once

#include <cstdint>
#include <vector>

#include "ellsurf/lattice.hpp"

namespace ellsurf {

// The block structure every kappa-fixing isometry is assembled against:
// basis ordered (kappa, x, W..., tail...), with W an even unimodular block
// orthogonal to everything else and kappa, x pairing as [[0,1],[1,x^2]].
struct LatticeLayout {
  GramLattice lattice;
  std::size_t w_offset = 2;
  std::size_t w_rank = 0;
  Int fiber_multiple = 1;  // m1 * m2

  IntMat w_gram() const;
};

// Throws input_error when the model has no designated W block (explicit-Gram
// models adopt the caller's basis wholesale and carry none).
LatticeLayout layout_of(const SurfaceModel& model);

// Toy layouts for lattices that are not full surface models.  Validates the
// block structure, evenness and unimodularity of W.
LatticeLayout make_layout(GramLattice lattice, std::size_t w_offset,
                          std::size_t w_rank, Int fiber_multiple);

// An isometry fixing kappa:
//   phi(kappa) = kappa
//   phi(alpha) = tau(alpha) + ell(alpha) kappa   for alpha in W
//   phi(x)     = x + c kappa + beta,             c = -beta^2 / 2
// with beta the unique element of W pairing as -beta . tau(alpha) = ell(alpha);
// solved exactly from unimodularity of W.  The tail (exceptional classes) is
// fixed pointwise.
class KappaIsometry {
 public:
  KappaIsometry(const LatticeLayout& layout, IntMat tau, IntVec ell);

  const IntMat& tau() const { return tau_; }
  const IntVec& ell() const { return ell_; }
  // beta in W coordinates.
  const IntVec& beta() const { return beta_; }
  const Int& c() const { return c_; }
  // True iff every coordinate of ell is divisible by m1*m2 (equivalently the
  // isometry maps the surface lattice into itself through phi(L) = L).
  bool lattice_preserving() const { return lattice_preserving_; }
  // Full-rank matrix, columns = images of the basis vectors.
  const IntMat& matrix() const { return full_; }
  std::size_t rank() const { return full_.rows; }

 private:
  IntMat tau_;
  IntVec ell_;
  IntVec beta_;
  Int c_;
  bool lattice_preserving_;
  IntMat full_;
};

KappaIsometry build_kappa_isometry(const LatticeLayout& layout, IntMat tau,
                                   IntVec ell);

ClassVector apply_isometry(const KappaIsometry& phi, const ClassVector& v);

Mod2Class apply_isometry_mod2(const KappaIsometry& phi, const Mod2Class& w);

// Default generator set: reflections in norm +-2 vectors of W composed in
// pairs (so each tau generator is a rotation), plus the translations
// ell = m1*m2 * (dual basis functional) with tau = Id.
std::vector<KappaIsometry> default_generators(const LatticeLayout& layout);

struct OrbitLimits {
  std::size_t max_states = std::size_t{1} << 16;
};

struct OrbitReport {
  int a_mod4 = 0;
  std::size_t candidate_count = 0;
  bool truncated = false;
  bool single_orbit = false;
  // Orbit partition of {w mod 2 : w.kappa = 1, w^2 = a (mod 4)}; each orbit
  // sorted lexicographically on bits, orbits sorted by minimal element.
  std::vector<std::vector<Mod2Class>> orbits;
};

// Breadth-first closure of the constrained candidate set under the
// generators' mod-2 actions.  A single full orbit certifies transitivity; a
// truncated report is inconclusive, never a refutation.
OrbitReport mod2_orbit(const LatticeLayout& layout, int a_mod4,
                       const std::vector<KappaIsometry>& generators,
                       OrbitLimits limits = {});

}  // namespace ellsurf
