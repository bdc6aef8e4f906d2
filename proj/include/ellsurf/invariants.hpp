#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellsurf/lattice.hpp"

namespace ellsurf {

struct InvariantParams {
  int pg = 0;
  Int m1 = 1, m2 = 1;

  Int m() const { return m1 * m2; }
};

InvariantParams make_params(int pg, const Int& m1, const Int& m2);
InvariantParams params_of(const SurfaceModel& model);

// Canonical print order: s-degree descending, then k-degree descending.
struct TermOrder {
  bool operator()(const std::pair<int, int>& a,
                  const std::pair<int, int>& b) const {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  }
};

// Polynomial in s = Sigma . Sigma (weight 2) and k = kappa . Sigma (weight 1)
// with exact rational coefficients.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  static GradedPolynomial constant(const Rat& v);

  void add_term(int i, int j, const Rat& coeff);  // adds coeff * s^i k^j
  Rat coeff(int i, int j) const;
  const std::map<std::pair<int, int>, Rat, TermOrder>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  // Weighted degree 2i + j shared by all terms, if homogeneous.
  std::optional<int> homogeneous_degree() const;

  Rat evaluate(const Rat& s, const Rat& k) const;
  std::string str() const;  // e.g. "3*s^2 - 6*s*k^2 + 5*k^4"

  bool operator==(const GradedPolynomial&) const = default;

 private:
  std::map<std::pair<int, int>, Rat, TermOrder> terms_;
};

// Bivariate power series in (s, x) truncated at weighted degree
// 2*deg_s + deg_x <= cutoff; operations never consult coefficients beyond the
// cutoff.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cutoff);
  static TruncatedSeries constant(int cutoff, const Rat& v);
  static TruncatedSeries exp_half_s(int cutoff);             // exp(s/2)
  static TruncatedSeries cosh_ax(int cutoff, const Int& a);  // cosh(a x)

  int cutoff() const { return cutoff_; }
  Rat coeff(int i, int j) const;
  void add_term(int i, int j, const Rat& coeff);

  TruncatedSeries mul(const TruncatedSeries& o) const;
  TruncatedSeries pow(int e) const;
  // Requires a unit constant term.
  TruncatedSeries reciprocal() const;

  GradedPolynomial homogeneous_part(int degree) const;

 private:
  int cutoff_;
  std::map<std::pair<int, int>, Rat> terms_;
};

// (C1, C2) = (m1^2 m2^2 (pg+1) - m1^2 - m2^2, m1^4 m2^4 (pg+1) - m1^4 - m2^4).
std::pair<Int, Int> invariant_constants(const InvariantParams& params);

// Closed forms: gamma_1 = s + C1 k^2, gamma_2 = 3s^2 + 6 C1 s k^2 +
// (3 C1^2 - 2 C2) k^4.  Only t in {1, 2}.
GradedPolynomial gamma_small(const InvariantParams& params, int t);

// Leading coefficient m2 * (m1 m2)^pg * d!/(2^n n!) of the degree-d invariant
// for w . kappa = 1 bundles with exactly one multiplicity even (that one
// normalized into m1's slot), d = -p - 3(pg+1), n = (d - pg)/2, valid in the
// stable range -p >= 2(4 pg + 2).
Rat leading_coeff_so3_even(const InvariantParams& params, const Int& p);

// SU(2) analogue: n = 2c - 2 pg - 1, d = 4c - 3 pg - 3,
// a_n = d!/(2^n n!) (m1 m2)^pg.
Rat leading_coeff_su2(const InvariantParams& params, const Int& c);

enum class SecondCoeffSource { morgan_mrowka, morgan_ogrady };

// a_{n-1} in the published normalizations (exact up to a universal
// combinatorial factor, so only ratios across surfaces are meaningful); the
// Morgan-O'Grady form is only stated for pg = 1.
Int second_coeff_printed(const InvariantParams& params,
                         SecondCoeffSource source);

// Degree-2t part of exp(s/2) cosh(m1 m2 x)^{pg+1} / (cosh(m1 x) cosh(m2 x)),
// scaled by (2t)!.  Matches gamma_small for t <= 2; beyond that it is the
// conjectural series term only.
GradedPolynomial gamma_t_conjectural(const InvariantParams& params, int t);

Rat evaluate_on_class(const SurfaceModel& model, const GradedPolynomial& poly,
                      const ClassVector& sigma);

struct DimensionParity {
  Int d;
  int parity = 0;  // d mod 2
  // 1 when forced by the Wu relation delta^2 = delta . K (mod 2) for
  // delta . kappa = 1 and exactly one multiplicity even; or caller-supplied.
  std::optional<int> delta_sq_mod2;
};

DimensionParity expected_dimension_and_parity(
    const InvariantParams& params, const Int& p,
    std::optional<int> delta_sq_mod2 = std::nullopt);

// For a homogeneous evaluated form of degree d, the coefficients a_i of
// sum_i a_i q^i k^{d-2i} as a symmetric multilinear form: divides out the
// pairing multinomials d! / (2^i i! (d-2i)!).  Indexed by i ascending.
std::vector<Rat> multilinear_coefficients(const GradedPolynomial& poly);

}  // namespace ellsurf
