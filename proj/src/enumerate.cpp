#include "ellsurf/enumerate.hpp"

#include <utility>

namespace ellsurf {

namespace {

// Largest integer t with t <= c + sqrt(rho), all quantities exact.
Int floor_center_plus_sqrt(const Rat& c, const Rat& rho) {
  Int t = rat_floor(c) + isqrt_floor(rat_floor(rho)) + 2;
  auto ok = [&](const Int& v) {
    Rat d = Rat(v) - c;
    if (d <= 0) return true;
    return d * d <= rho;
  };
  while (!ok(t)) --t;
  return t;
}

struct SliceSearch {
  const IntMat* kernel;  // n x m, columns span the slice directions
  ClassVector zeta0;
  const GramLattice* lattice;
  Int qmin, qmax;
  std::size_t m;
  RatVec d;    // LDL of the positive definite form on the kernel
  RatMat mu;
  RatVec h;    // ellipsoid center in t-coordinates
  Rat rtotal;  // squared radius
  std::vector<Int> t;
  std::vector<ClassVector> out;

  // Levels run from the last t-coordinate down to the first; at each level
  // the LDL square for that coordinate is bounded by the remaining budget.
  void recurse(std::size_t level_plus1, const Rat& budget) {
    if (level_plus1 == 0) {
      ClassVector zeta = zeta0;
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < zeta.size(); ++i)
          zeta[i] += t[j] * kernel->at(i, j);
      Int q = lattice->square(zeta);
      if (qmin <= q && q <= qmax) out.push_back(std::move(zeta));
      return;
    }
    std::size_t i = level_plus1 - 1;
    // inner_i = (t_i - h_i) + sum_{j>i} mu(i,j)(t_j - h_j); need
    // d_i * inner_i^2 <= budget.
    Rat shift = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      shift += mu.at(i, j) * (Rat(t[j]) - h[j]);
    Rat center = h[i] - shift;
    Rat rho = budget / d[i];
    Int hi = floor_center_plus_sqrt(center, rho);
    Int lo = -floor_center_plus_sqrt(-center, rho);
    for (Int v = lo; v <= hi; ++v) {
      t[i] = v;
      Rat inner = Rat(v) - center;
      recurse(i, budget - d[i] * inner * inner);
    }
  }
};

// Integer points of zeta0 + kernel * t with qmin <= zeta^2 <= qmax; the form
// must be negative definite on the kernel columns.
std::vector<ClassVector> enumerate_affine(const GramLattice& lattice,
                                          ClassVector zeta0,
                                          const IntMat& kernel,
                                          const Int& qmin, const Int& qmax) {
  const std::size_t m = kernel.cols;
  if (m == 0) {
    Int q = lattice.square(zeta0);
    if (qmin <= q && q <= qmax) return {std::move(zeta0)};
    return {};
  }

  // Quadratic on the slice: q(t) = c0 + 2 b^T t + t^T A t with A negative
  // definite; bound Q(t) = t^T (-A) t - 2 b^T t <= c0 - qmin.
  IntMat gk = mat_mul(lattice.gram(), kernel);
  IntMat A = mat_mul(mat_transpose(kernel), gk);
  IntVec b = mat_vec(mat_transpose(gk), zeta0);
  Int c0 = lattice.square(zeta0);

  RatMat M(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) M.at(i, j) = Rat(-A.at(i, j));
  RatVec brat(m);
  for (std::size_t i = 0; i < m; ++i) brat[i] = Rat(b[i]);

  SliceSearch s;
  s.kernel = &kernel;
  s.zeta0 = std::move(zeta0);
  s.lattice = &lattice;
  s.qmin = qmin;
  s.qmax = qmax;
  s.m = m;
  Ldl ldl = ldl_posdef(M);  // throws unless the slice form is definite
  s.d = std::move(ldl.d);
  s.mu = std::move(ldl.mu);
  s.h = solve_posdef(M, brat);
  Rat bh = 0;
  for (std::size_t i = 0; i < m; ++i) bh += brat[i] * s.h[i];
  s.rtotal = Rat(c0 - qmin) + bh;
  if (s.rtotal < 0) return {};
  s.t.assign(m, 0);
  s.recurse(m, s.rtotal);
  return std::move(s.out);
}

}  // namespace

std::vector<ClassVector> enumerate_slice(const GramLattice& lattice,
                                         const ClassVector& w, const Int& a,
                                         const Int& qmin, const Int& qmax) {
  const std::size_t n = lattice.rank();
  if (w.size() != n) throw input_error("slice class has wrong length");
  if (qmin > qmax) return {};
  IntVec u = lattice.functional(w);
  if (vec_is_zero(u)) throw input_error("slice functional is zero");
  Int g = vec_content(u);
  if (a % g != 0) return {};

  RowReduction red = unimodular_row_reduce(u);
  ClassVector zeta0(n);
  for (std::size_t i = 0; i < n; ++i) zeta0[i] = (a / g) * red.U.at(i, 0);
  const std::size_t m = n - 1;
  IntMat kernel(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) kernel.at(i, j) = red.U.at(i, j + 1);
  return enumerate_affine(lattice, std::move(zeta0), kernel, qmin, qmax);
}

std::vector<ClassVector> enumerate_slice2(const GramLattice& lattice,
                                          const ClassVector& w1, const Int& a1,
                                          const ClassVector& w2, const Int& a2,
                                          const Int& qmin, const Int& qmax) {
  const std::size_t n = lattice.rank();
  if (w1.size() != n || w2.size() != n)
    throw input_error("slice class has wrong length");
  if (qmin > qmax) return {};
  IntVec u1 = lattice.functional(w1);
  IntVec u2 = lattice.functional(w2);
  if (vec_is_zero(u1) || vec_is_zero(u2))
    throw input_error("slice functional is zero");

  Int g1 = vec_content(u1);
  if (a1 % g1 != 0) return {};
  RowReduction r1 = unimodular_row_reduce(u1);
  ClassVector zeta0(n);
  for (std::size_t i = 0; i < n; ++i) zeta0[i] = (a1 / g1) * r1.U.at(i, 0);

  // Restrict the second functional to the kernel of the first.
  const std::size_t m1 = n - 1;
  IntVec v(m1, Int(0));
  for (std::size_t j = 0; j < m1; ++j)
    for (std::size_t i = 0; i < n; ++i) v[j] += r1.U.at(i, j + 1) * u2[i];
  Int rem = a2;
  for (std::size_t i = 0; i < n; ++i) rem -= zeta0[i] * u2[i];
  if (vec_is_zero(v)) throw input_error("slice functionals are dependent");

  Int g2 = vec_content(v);
  if (rem % g2 != 0) return {};
  RowReduction r2 = unimodular_row_reduce(v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m1; ++j)
      zeta0[i] += (rem / g2) * r1.U.at(i, j + 1) * r2.U.at(j, 0);

  const std::size_t m = m1 - 1;
  IntMat kernel(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < m1; ++j)
        s += r1.U.at(i, j + 1) * r2.U.at(j, k + 1);
      kernel.at(i, k) = std::move(s);
    }
  return enumerate_affine(lattice, std::move(zeta0), kernel, qmin, qmax);
}

}  // namespace ellsurf
