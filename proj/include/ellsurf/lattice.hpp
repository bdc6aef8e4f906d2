#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellsurf/linalg.hpp"

namespace ellsurf {

// Coordinates of a cohomology class in the fixed basis of a GramLattice.
using ClassVector = IntVec;

// A class modulo 2, one bit per basis coordinate.
struct Mod2Class {
  std::vector<std::uint8_t> bits;

  bool operator==(const Mod2Class&) const = default;
  bool operator<(const Mod2Class& o) const { return bits < o.bits; }
  std::string str() const;
};

Mod2Class reduce_mod2(const ClassVector& u);

// A finitely generated free Z-module with a symmetric integer pairing.
class GramLattice {
 public:
  explicit GramLattice(IntMat gram);

  std::size_t rank() const { return gram_.rows; }
  const IntMat& gram() const { return gram_; }
  const Signature& signature() const { return sig_; }
  const Int& det() const { return det_; }
  bool unimodular() const { return det_ == 1 || det_ == -1; }
  bool even() const;

  Int pair(const ClassVector& u, const ClassVector& v) const;
  Int square(const ClassVector& u) const { return pair(u, u); }
  // The functional v -> u . v as an integer coordinate vector (gram * u).
  IntVec functional(const ClassVector& u) const;

 private:
  IntMat gram_;
  Signature sig_;
  Int det_;
};

// Location of the even unimodular block W inside the default basis.
struct WBlock {
  std::size_t offset = 0, rank = 0;
};

// The intersection lattice of a relatively minimal simply connected elliptic
// surface with multiple fibers of multiplicities m1 <= m2, blown up r times,
// together with its distinguished classes.
struct SurfaceModel {
  int pg = 0;
  int r = 0;
  Int m1 = 1, m2 = 1;
  GramLattice lattice;
  ClassVector kappa;      // primitive isotropic, f = m1*m2*kappa
  ClassVector x_class;    // x . kappa = 1
  ClassVector fiber;
  ClassVector canonical;  // ((pg+1)m1m2 - m1 - m2) * kappa
  std::vector<ClassVector> exceptional;
  std::optional<WBlock> w_block;

  Int m() const { return m1 * m2; }
  Int b2() const { return Int(lattice.rank()); }
  Int sigma() const {
    return Int(lattice.signature().pos) - Int(lattice.signature().neg);
  }
};

// Default construction: Z kappa + Z x + W + <-1>^r with x^2 in {0,1} and
// W = H^{2pg} + E8(-1)^{pg+1}.
SurfaceModel build_surface_model(int pg, const Int& m1, const Int& m2, int r,
                                 int x_square = 1);

// Explicit-Gram construction.  The supplied data must describe the minimal
// surface (signature (2pg+1, 10pg+9)); the r blow-ups are then appended as
// standard <-1> summands.
SurfaceModel build_surface_model(int pg, const Int& m1, const Int& m2, int r,
                                 IntMat gram, ClassVector kappa, ClassVector x);

SurfaceModel blow_up(const SurfaceModel& model, int extra);

// Replaces the designated class x by x + kappa (shifts x^2 by 2).
SurfaceModel shift_x(const SurfaceModel& model);

// Recovers (pg, r) from (b2, sigma); throws math_domain_error when the pair
// is not realized by any model in this family.
std::pair<int, int> homotopy_data(const Int& b2, const Int& sigma);

// (pg + 1) m1 m2 - m1 - m2, the multiple of kappa giving the canonical class.
Int canonical_multiple(int pg, const Int& m1, const Int& m2);

// Gram matrices of the standard blocks.
IntMat hyperbolic_gram();
IntMat e8_minus_gram();

// Re-checks every structural invariant of a model; throws input_error with
// the violated condition.  Builders call this before returning.
void validate_surface_model(const SurfaceModel& model);

}  // namespace ellsurf
