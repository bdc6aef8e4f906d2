#include "ellsurf/classify.hpp"

#include <algorithm>
#include <utility>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

void check_pair_domain(const Int& m1, const Int& m2) {
  if (m1 < 1 || m2 < 1) throw input_error("multiplicities must be positive");
  if (gcd(m1, m2) != 1) throw input_error("multiplicities must be coprime");
}

// Integer roots u <= v of t^2 - s1 t + s2 = 0, or an error naming the step
// that failed.
std::pair<Int, Int> quadratic_roots(const Int& s1, const Int& s2) {
  Int disc = s1 * s1 - 4 * s2;
  Int root;
  if (disc < 0 || !is_perfect_square(disc, &root))
    throw math_domain_error("discriminant is not a perfect square");
  if (mod2(s1 - root) != 0)
    throw math_domain_error("quadratic roots are not integers");
  return {(s1 - root) / 2, (s1 + root) / 2};
}

Int square_root_of(const Int& n, const char* what) {
  Int root;
  if (n < 0 || !is_perfect_square(n, &root))
    throw math_domain_error(std::string(what) + " is not a perfect square");
  return root;
}

}  // namespace

Int bauer_f(const Int& m1, const Int& m2) {
  check_pair_domain(m1, m2);
  Int prod = (m1 * m1 - 1) * (m2 * m2 - 1);
  // Coprimality forces 3 | prod: at most one factor is divisible by 3, and
  // any m prime to 3 has m^2 = 1 (mod 3).
  if (prod % 3 != 0)
    throw math_domain_error("bauer_f: product unexpectedly not divisible by 3");
  return prod / 3 - 1;
}

std::string MultPair::str() const {
  return "{" + m1.str() + "," + m2.str() + "}";
}

MultPair recover_from_AB(const Int& A, const Int& B) {
  if (A == 0)
    throw math_domain_error(
        "A = 0: some multiplicity is 1, so the pair is ambiguous");
  if (B % A != 0) throw math_domain_error("B is not divisible by A");
  Int q = B / A;  // (m1^2 + 1)(m2^2 + 1)
  if (mod2(q - A) != 0)
    throw math_domain_error("A and B/A have mismatched parity");
  Int s2 = (q + A - 2) / 2;  // m1^2 m2^2
  Int s1 = (q - A) / 2;      // m1^2 + m2^2
  auto [u, v] = quadratic_roots(s1, s2);
  if (u <= 1)
    throw math_domain_error("recovered squares are not both greater than 1");
  Int m1 = square_root_of(u, "smaller root");
  Int m2 = square_root_of(v, "larger root");
  if (gcd(m1, m2) != 1)
    throw math_domain_error("recovered multiplicities are not coprime");
  if ((m1 * m1 - 1) * (m2 * m2 - 1) != A ||
      (m1 * m1 * m1 * m1 - 1) * (m2 * m2 * m2 * m2 - 1) != B)
    throw math_domain_error("recovered pair does not reproduce (A, B)");
  return MultPair{m1, m2};
}

MultPair recover_with_product(const Int& mu, const Int& c1, int pg) {
  if (mu < 1) throw input_error("mu must be positive");
  if (pg < 0) throw input_error("pg must be nonnegative");
  Int s2 = mu * mu;
  Int s1 = Int(pg + 1) * s2 - c1;  // m1^2 + m2^2
  auto [u, v] = quadratic_roots(s1, s2);
  if (u < 1) throw math_domain_error("recovered squares are not positive");
  Int m1 = square_root_of(u, "smaller root");
  Int m2 = square_root_of(v, "larger root");
  if (m1 * m2 != mu)
    throw math_domain_error("recovered multiplicities do not multiply to mu");
  if (gcd(m1, m2) != 1)
    throw math_domain_error("recovered multiplicities are not coprime");
  return MultPair{m1, m2};
}

EvenPair recover_even(const Int& mu, const Rat& a_n, const Int& p, int pg) {
  if (pg < 0) throw input_error("pg must be nonnegative");
  if (mu < 2 || mod2(mu) != 0)
    throw math_domain_error("mu must be even (exactly one factor is even)");
  if (-p < 2 * (4 * pg + 2))
    throw math_domain_error("p is outside the stable range -p >= 2(4*pg + 2)");
  Int d = -p - 3 * (pg + 1);
  if (mod2(d - pg) != 0)
    throw math_domain_error("d - pg is odd, so no such coefficient exists");
  Int n = (d - pg) / 2;
  Rat lead = make_rat(factorial(static_cast<int>(d)),
                      int_pow(2, static_cast<int>(n)) *
                          factorial(static_cast<int>(n))) *
             Rat(int_pow(mu, pg));
  Rat ratio = a_n / lead;
  if (denominator(ratio) != 1)
    throw math_domain_error("a_n is not a multiple of the degree factor");
  Int m2 = numerator(ratio);
  if (m2 < 1) throw math_domain_error("recovered m2 is not positive");
  if (mu % m2 != 0) throw math_domain_error("recovered m2 does not divide mu");
  Int m1 = mu / m2;
  if (mod2(m2) != 1 || mod2(m1) != 0)
    throw math_domain_error("recovered pair has the wrong parities");
  if (gcd(m1, m2) != 1)
    throw math_domain_error("recovered multiplicities are not coprime");
  return EvenPair{m1, m2};
}

Int jd_multiplicity(const Int& m, const Int& d) {
  if (m < 1) throw input_error("m must be positive");
  return m / gcd(m, d);  // gcd(m, 0) = m: the Jacobian has multiplicity 1
}

std::string verdict_kind_str(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::homotopy_distinct:
      return "homotopy-distinct";
    case VerdictKind::invariant_distinct:
      return "invariant-distinct";
    case VerdictKind::deformation_equivalent:
      return "deformation-equivalent";
    case VerdictKind::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string Verdict::str() const {
  return "VERDICT=" + verdict_kind_str(kind) + " WITNESS=" + witness_text;
}

namespace {

Verdict comparison_verdict(VerdictKind kind, const std::string& quantity,
                           std::string lo, std::string hi) {
  Verdict v;
  v.kind = kind;
  v.quantity = quantity;
  v.value_a = std::move(lo);
  v.value_b = std::move(hi);
  v.witness_text = quantity + ": " + v.value_a + " vs " + v.value_b;
  return v;
}

Verdict rat_verdict(VerdictKind kind, const std::string& quantity,
                    const Rat& x, const Rat& y) {
  const Rat& lo = x <= y ? x : y;
  const Rat& hi = x <= y ? y : x;
  return comparison_verdict(kind, quantity, format_rat(lo), format_rat(hi));
}

Verdict int_verdict(VerdictKind kind, const std::string& quantity,
                    const Int& x, const Int& y) {
  const Int& lo = x <= y ? x : y;
  const Int& hi = x <= y ? y : x;
  return comparison_verdict(kind, quantity, lo.str(), hi.str());
}

Verdict equal_verdict(VerdictKind kind, const std::string& text) {
  Verdict v;
  v.kind = kind;
  v.quantity = "fingerprint";
  v.witness_text = text;
  return v;
}

std::string fingerprint_str(int pg, int r, const Int& mlo, const Int& mhi) {
  return "(pg=" + std::to_string(pg) + ", r=" + std::to_string(r) + ", m={" +
         mlo.str() + "," + mhi.str() + "})";
}

}  // namespace

Verdict distinguish(const SurfaceModel& a, const SurfaceModel& b) {
  auto ha = homotopy_data(a.b2(), a.sigma());
  auto hb = homotopy_data(b.b2(), b.sigma());
  if (ha != hb) {
    auto fmt = [](const std::pair<int, int>& h) {
      return "(" + std::to_string(h.first) + "," + std::to_string(h.second) +
             ")";
    };
    auto lo = std::min(ha, hb), hi = std::max(ha, hb);
    return comparison_verdict(VerdictKind::homotopy_distinct,
                              "homotopy (pg,r)", fmt(lo), fmt(hi));
  }
  int pg = ha.first, r = ha.second;
  InvariantParams pa = params_of(a), pb = params_of(b);
  Int alo = std::min(pa.m1, pa.m2), ahi = std::max(pa.m1, pa.m2);
  Int blo = std::min(pb.m1, pb.m2), bhi = std::max(pb.m1, pb.m2);

  bool a_rational = pg == 0 && alo == 1;
  bool b_rational = pg == 0 && blo == 1;
  if (a_rational && b_rational)
    return equal_verdict(
        VerdictKind::deformation_equivalent,
        "both rational (pg=0 with a multiplicity-1 fiber), r=" +
            std::to_string(r));
  if (a_rational != b_rational)
    return int_verdict(VerdictKind::invariant_distinct, "Bauer f",
                       bauer_f(pa.m1, pa.m2), bauer_f(pb.m1, pb.m2));

  bool a_even = mod2(pa.m()) == 0;
  bool b_even = mod2(pb.m()) == 0;
  try {
    if (a_even != b_even) {
      if (pg == 0) {
        // Odd products have leading coefficient 1 in degree 2; even products
        // contribute their odd multiplicity, which exceeds 1 past the
        // rational collapse above.
        Rat va = a_even ? leading_coeff_so3_even(pa, -5) : Rat(1);
        Rat vb = b_even ? leading_coeff_so3_even(pb, -5) : Rat(1);
        return rat_verdict(VerdictKind::invariant_distinct,
                           "a_n (so3) at p=-5", va, vb);
      }
      // The products have different parities, hence different values here.
      return rat_verdict(VerdictKind::invariant_distinct,
                         "a_n (su2) at c=" + std::to_string(pg + 1),
                         leading_coeff_su2(pa, pg + 1),
                         leading_coeff_su2(pb, pg + 1));
    }
    if (!a_even) {
      auto [c1a, c2a] = invariant_constants(pa);
      auto [c1b, c2b] = invariant_constants(pb);
      if (c1a != c1b)
        return int_verdict(VerdictKind::invariant_distinct, "C1", c1a, c1b);
      if (c2a != c2b)
        return int_verdict(VerdictKind::invariant_distinct, "C2", c2a, c2b);
    } else if (pg == 0) {
      Rat va = leading_coeff_so3_even(pa, -5);
      Rat vb = leading_coeff_so3_even(pb, -5);
      if (va != vb)
        return rat_verdict(VerdictKind::invariant_distinct,
                           "a_n (so3) at p=-5", va, vb);
      Int fa = bauer_f(pa.m1, pa.m2), fb = bauer_f(pb.m1, pb.m2);
      if (fa != fb)
        return int_verdict(VerdictKind::invariant_distinct, "Bauer f", fa, fb);
    } else {
      Rat va = leading_coeff_su2(pa, pg + 1);
      Rat vb = leading_coeff_su2(pb, pg + 1);
      if (va != vb)
        return rat_verdict(VerdictKind::invariant_distinct,
                           "a_n (su2) at c=" + std::to_string(pg + 1), va, vb);
      // Smallest odd -p inside the stable range -p >= 2(4*pg + 2); odd p
      // keeps n = (d - pg)/2 integral.
      Int p = -(8 * pg + 5);
      Rat wa = leading_coeff_so3_even(pa, p);
      Rat wb = leading_coeff_so3_even(pb, p);
      if (wa != wb)
        return rat_verdict(VerdictKind::invariant_distinct,
                           "a_n (so3) at p=" + p.str(), wa, wb);
    }
  } catch (const math_domain_error& err) {
    Verdict v;
    v.kind = VerdictKind::inconclusive;
    v.quantity = "range";
    v.witness_text = std::string("comparison outside formula range: ") +
                     err.what();
    return v;
  }
  if (std::make_pair(alo, ahi) != std::make_pair(blo, bhi)) {
    // Every computed quantity agreed but the fingerprints differ; the
    // implemented comparisons do not separate this pair.
    Verdict v;
    v.kind = VerdictKind::inconclusive;
    v.quantity = "fingerprint";
    v.witness_text = "all compared invariants agree for m=" +
                     MultPair{alo, ahi}.str() + " vs m=" +
                     MultPair{blo, bhi}.str();
    return v;
  }
  return equal_verdict(
      VerdictKind::deformation_equivalent,
      "fingerprint " + fingerprint_str(pg, r, alo, ahi) + " equal");
}

}  // namespace ellsurf
