#include "ellsurf/invariants.hpp"

#include <algorithm>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

Int checked_factorial(const Int& n, const char* what) {
  if (n < 0) throw math_domain_error(std::string(what) + " is negative");
  if (n > 100000)
    throw math_domain_error(std::string(what) + " is too large to expand");
  Int f = 1;
  for (Int i = 2; i <= n; ++i) f *= i;
  return f;
}

int to_small_int(const Int& n, const char* what) {
  if (n < -1000000 || n > 1000000)
    throw math_domain_error(std::string(what) + " out of supported range");
  return static_cast<int>(n);
}

}  // namespace

InvariantParams make_params(int pg, const Int& m1, const Int& m2) {
  if (pg < 0) throw input_error("pg must be nonnegative");
  if (m1 < 1 || m2 < 1) throw input_error("multiplicities must be positive");
  if (gcd(m1, m2) != 1) throw input_error("multiplicities must be coprime");
  return InvariantParams{pg, m1, m2};
}

InvariantParams params_of(const SurfaceModel& model) {
  return make_params(model.pg, model.m1, model.m2);
}

GradedPolynomial GradedPolynomial::constant(const Rat& v) {
  GradedPolynomial p;
  p.add_term(0, 0, v);
  return p;
}

void GradedPolynomial::add_term(int i, int j, const Rat& coeff) {
  if (i < 0 || j < 0) throw input_error("negative exponent in polynomial term");
  if (coeff == 0) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rat GradedPolynomial::coeff(int i, int j) const {
  auto it = terms_.find(std::make_pair(i, j));
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [key, value] : terms_) {
    (void)value;
    int w = 2 * key.first + key.second;
    if (!degree)
      degree = w;
    else if (*degree != w)
      return std::nullopt;
  }
  return degree;
}

Rat GradedPolynomial::evaluate(const Rat& s, const Rat& k) const {
  Rat total = 0;
  for (const auto& [key, value] : terms_) {
    Rat term = value;
    for (int i = 0; i < key.first; ++i) term *= s;
    for (int j = 0; j < key.second; ++j) term *= k;
    total += term;
  }
  return total;
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, value] : terms_) {
    bool negative = value < 0;
    Rat mag = negative ? Rat(-value) : value;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    auto append_power = [&monomial](const char* var, int e) {
      if (e == 0) return;
      if (!monomial.empty()) monomial += "*";
      monomial += var;
      if (e > 1) monomial += "^" + std::to_string(e);
    };
    append_power("s", key.first);
    append_power("k", key.second);
    if (monomial.empty()) {
      out += format_rat(mag);
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += format_rat(mag) + "*" + monomial;
    }
  }
  return out;
}

TruncatedSeries::TruncatedSeries(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw input_error("series cutoff must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(int cutoff, const Rat& v) {
  TruncatedSeries s(cutoff);
  s.add_term(0, 0, v);
  return s;
}

Rat TruncatedSeries::coeff(int i, int j) const {
  auto it = terms_.find(std::make_pair(i, j));
  return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::add_term(int i, int j, const Rat& coeff) {
  if (i < 0 || j < 0) throw input_error("negative exponent in series term");
  if (2 * i + j > cutoff_ || coeff == 0) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

TruncatedSeries TruncatedSeries::exp_half_s(int cutoff) {
  TruncatedSeries s(cutoff);
  Rat c = 1;
  for (int i = 0; 2 * i <= cutoff; ++i) {
    s.add_term(i, 0, c);
    c /= 2 * (i + 1);
  }
  return s;
}

TruncatedSeries TruncatedSeries::cosh_ax(int cutoff, const Int& a) {
  TruncatedSeries s(cutoff);
  Rat c = 1;
  Rat a2(a * a);
  for (int j = 0; 2 * j <= cutoff; ++j) {
    s.add_term(0, 2 * j, c);
    c *= a2;
    c /= (2 * j + 1) * (2 * j + 2);
  }
  return s;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
  if (cutoff_ != o.cutoff_)
    throw input_error("series cutoffs do not match");
  TruncatedSeries out(cutoff_);
  for (const auto& [ka, va] : terms_) {
    int wa = 2 * ka.first + ka.second;
    for (const auto& [kb, vb] : o.terms_) {
      if (wa + 2 * kb.first + kb.second > cutoff_) continue;
      out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) throw input_error("series power must be nonnegative");
  TruncatedSeries out = constant(cutoff_, 1);
  for (int i = 0; i < e; ++i) out = out.mul(*this);
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  Rat c0 = coeff(0, 0);
  if (c0 == 0)
    throw math_domain_error("series has no reciprocal: constant term is zero");
  // Triangular inversion by weighted degree: the weight-w coefficients of the
  // inverse depend only on lower-weight ones already computed.
  TruncatedSeries inv(cutoff_);
  inv.add_term(0, 0, Rat(1) / c0);
  for (int w = 1; w <= cutoff_; ++w) {
    std::map<std::pair<int, int>, Rat> row;
    for (const auto& [ka, va] : terms_) {
      int wa = 2 * ka.first + ka.second;
      if (wa < 1 || wa > w) continue;
      for (const auto& [kb, vb] : inv.terms_) {
        if (2 * kb.first + kb.second != w - wa) continue;
        row[std::make_pair(ka.first + kb.first, ka.second + kb.second)] +=
            va * vb;
      }
    }
    for (const auto& [key, value] : row)
      inv.add_term(key.first, key.second, -value / c0);
  }
  return inv;
}

GradedPolynomial TruncatedSeries::homogeneous_part(int degree) const {
  GradedPolynomial p;
  for (const auto& [key, value] : terms_)
    if (2 * key.first + key.second == degree)
      p.add_term(key.first, key.second, value);
  return p;
}

std::pair<Int, Int> invariant_constants(const InvariantParams& params) {
  Int a = params.m1 * params.m1, b = params.m2 * params.m2;
  Int c1 = a * b * (params.pg + 1) - a - b;
  Int c2 = a * a * b * b * (params.pg + 1) - a * a - b * b;
  return {c1, c2};
}

GradedPolynomial gamma_small(const InvariantParams& params, int t) {
  auto [c1, c2] = invariant_constants(params);
  GradedPolynomial p;
  if (t == 1) {
    p.add_term(1, 0, 1);
    p.add_term(0, 2, Rat(c1));
  } else if (t == 2) {
    p.add_term(2, 0, 3);
    p.add_term(1, 2, Rat(6 * c1));
    p.add_term(0, 4, Rat(3 * c1 * c1 - 2 * c2));
  } else {
    throw input_error("closed forms are available only for t = 1 and t = 2");
  }
  return p;
}

Rat leading_coeff_so3_even(const InvariantParams& params, const Int& p) {
  Int even = params.m1, odd = params.m2;
  if (mod2(even) != 0) std::swap(even, odd);
  if (mod2(even) != 0 || mod2(odd) != 1)
    throw math_domain_error(
        "exactly one multiplicity must be even for this coefficient");
  if (-p < 2 * (4 * params.pg + 2))
    throw math_domain_error(
        "p is outside the stable range -p >= 2(4*pg + 2)");
  Int d = -p - 3 * (params.pg + 1);
  Int two_n = d - params.pg;
  if (mod2(two_n) != 0)
    throw math_domain_error(
        "d - pg is odd (p has the wrong parity), so no such invariant exists");
  int n = to_small_int(two_n / 2, "n");
  int di = to_small_int(d, "d");
  if (n < 0 || di < 2 * n)
    throw math_domain_error("expected dimension is too small");
  Rat lead = make_rat(checked_factorial(di, "d"),
                      int_pow(2, n) * checked_factorial(n, "n"));
  return lead * Rat(int_pow(params.m(), params.pg) * odd);
}

Rat leading_coeff_su2(const InvariantParams& params, const Int& c) {
  Int n = 2 * c - 2 * params.pg - 1;
  Int d = 4 * c - 3 * params.pg - 3;
  if (n < 0 || d < 0)
    throw math_domain_error(
        "n = 2c - 2*pg - 1 and d = 4c - 3*pg - 3 must be nonnegative");
  int ni = to_small_int(n, "n");
  int di = to_small_int(d, "d");
  Rat lead = make_rat(checked_factorial(di, "d"),
                      int_pow(2, ni) * checked_factorial(ni, "n"));
  return lead * Rat(int_pow(params.m(), params.pg));
}

Int second_coeff_printed(const InvariantParams& params,
                         SecondCoeffSource source) {
  if (source == SecondCoeffSource::morgan_ogrady) {
    if (params.pg != 1)
      throw math_domain_error(
          "the Morgan-O'Grady form of the second coefficient requires pg = 1");
    Int a = params.m1 * params.m1, b = params.m2 * params.m2;
    return params.m() * (2 * a * b - a - b);
  }
  auto [c1, c2] = invariant_constants(params);
  (void)c2;
  return int_pow(params.m(), params.pg) * c1;
}

GradedPolynomial gamma_t_conjectural(const InvariantParams& params, int t) {
  if (t < 0) throw input_error("t must be nonnegative");
  int cutoff = 2 * t;
  TruncatedSeries f = TruncatedSeries::exp_half_s(cutoff)
                          .mul(TruncatedSeries::cosh_ax(cutoff, params.m())
                                   .pow(params.pg + 1))
                          .mul(TruncatedSeries::cosh_ax(cutoff, params.m1)
                                   .mul(TruncatedSeries::cosh_ax(cutoff,
                                                                 params.m2))
                                   .reciprocal());
  GradedPolynomial part = f.homogeneous_part(2 * t);
  GradedPolynomial scaled;
  Rat fac(checked_factorial(2 * t, "2t"));
  for (const auto& [key, value] : part.terms())
    scaled.add_term(key.first, key.second, value * fac);
  return scaled;
}

Rat evaluate_on_class(const SurfaceModel& model, const GradedPolynomial& poly,
                      const ClassVector& sigma) {
  if (sigma.size() != static_cast<size_t>(model.lattice.rank()))
    throw input_error("class has the wrong number of coordinates");
  Rat s(model.lattice.square(sigma));
  Rat k(model.lattice.pair(model.kappa, sigma));
  return poly.evaluate(s, k);
}

DimensionParity expected_dimension_and_parity(
    const InvariantParams& params, const Int& p,
    std::optional<int> delta_sq_mod2) {
  DimensionParity out;
  out.d = -p - 3 * (params.pg + 1);
  out.parity = mod2(out.d);
  if (delta_sq_mod2) {
    if (*delta_sq_mod2 != 0 && *delta_sq_mod2 != 1)
      throw input_error("delta^2 mod 2 must be 0 or 1");
    out.delta_sq_mod2 = *delta_sq_mod2;
  } else {
    // Wu relation: delta^2 = delta . K (mod 2), and K is a multiple of kappa,
    // so for delta . kappa = 1 the residue is the canonical multiple mod 2.
    out.delta_sq_mod2 = mod2(canonical_multiple(params.pg, params.m1,
                                                params.m2));
  }
  return out;
}

std::vector<Rat> multilinear_coefficients(const GradedPolynomial& poly) {
  auto degree = poly.homogeneous_degree();
  if (!degree)
    throw math_domain_error(
        "multilinear coefficients require a nonzero homogeneous form");
  int d = *degree;
  Int dfac = checked_factorial(d, "degree");
  std::vector<Rat> out;
  for (int i = 0; 2 * i <= d; ++i) {
    Rat scale = make_rat(int_pow(2, i) * checked_factorial(i, "i") *
                             checked_factorial(d - 2 * i, "d - 2i"),
                         dfac);
    out.push_back(poly.coeff(i, d - 2 * i) * scale);
  }
  return out;
}

}  // namespace ellsurf
