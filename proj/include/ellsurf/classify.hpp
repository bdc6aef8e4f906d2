#pragma once

#include <string>

#include "ellsurf/invariants.hpp"
#include "ellsurf/lattice.hpp"

namespace ellsurf {

// f(m1, m2) = (m1^2 - 1)(m2^2 - 1)/3 - 1; an integer for every coprime pair.
Int bauer_f(const Int& m1, const Int& m2);

struct MultPair {
  Int m1, m2;  // m1 <= m2

  bool operator==(const MultPair&) const = default;
  std::string str() const;  // "{m1,m2}"
};

// Inverts A = (m1^2-1)(m2^2-1), B = (m1^4-1)(m2^4-1) for coprime
// m1, m2 > 1.  Every divisibility / perfect-square step is validated; a
// failure throws math_domain_error rather than returning a partial answer.
MultPair recover_from_AB(const Int& A, const Int& B);

// Given mu = m1 m2 and C1 = (pg+1) mu^2 - m1^2 - m2^2, solves for the pair
// (roots may equal 1 here).
MultPair recover_with_product(const Int& mu, const Int& c1, int pg);

struct EvenPair {
  Int m1, m2;  // m1 even, m2 odd

  bool operator==(const EvenPair&) const = default;
};

// Given mu = m1 m2 with exactly one factor even and the leading coefficient
// a_n of the degree-d form at p, recovers m2 = a_n / (d!/(2^n n!) mu^pg) and
// m1 = mu / m2.
EvenPair recover_even(const Int& mu, const Rat& a_n, const Int& p, int pg);

// Multiplicity m / gcd(m, d) of the fiber after a degree-d twist of the
// relative Jacobian (d = 0 gives the Jacobian itself: multiplicity 1).
Int jd_multiplicity(const Int& m, const Int& d);

enum class VerdictKind {
  homotopy_distinct,
  invariant_distinct,
  deformation_equivalent,
  inconclusive,
};

std::string verdict_kind_str(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::inconclusive;
  // Name of the quantity that settled the comparison, e.g. "C1" or
  // "a_n (so3) at p=-5"; values are canonically ordered so the verdict is
  // symmetric in the two inputs.
  std::string quantity;
  std::string value_a, value_b;
  std::string witness_text;

  std::string str() const;  // "VERDICT=<kind> WITNESS=<witness>"
};

// Decision flow: (1) homotopy data (pg, r) from (b2, sigma); (2) pg = 0
// rational collapse (any multiplicity 1); (3) parity of m1 m2; (4) both odd:
// (C1, C2); (5) both even: leading coefficients.  Never throws; comparisons
// outside the formulas' ranges come back inconclusive.
Verdict distinguish(const SurfaceModel& a, const SurfaceModel& b);

}  // namespace ellsurf
