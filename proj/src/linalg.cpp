#include "ellsurf/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ellsurf {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat::RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rat(m.a[i]);
}

static void check_same_length(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw input_error("vector length mismatch");
}

IntVec vec_add(const IntVec& u, const IntVec& v) {
  check_same_length(u, v);
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

IntVec vec_sub(const IntVec& u, const IntVec& v) {
  check_same_length(u, v);
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

IntVec vec_scale(const Int& s, const IntVec& u) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = s * u[i];
  return w;
}

IntVec vec_neg(const IntVec& u) { return vec_scale(-1, u); }

bool vec_is_zero(const IntVec& u) {
  return std::all_of(u.begin(), u.end(), [](const Int& x) { return x == 0; });
}

Int vec_content(const IntVec& u) {
  Int g = 0;
  for (const Int& x : u) g = gcd(g, x);
  return g;
}

std::string vec_str(const IntVec& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += u[i].str();
  }
  return s;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) throw input_error("matrix dimension mismatch");
  IntMat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

IntVec mat_vec(const IntMat& A, const IntVec& v) {
  if (A.cols != v.size()) throw input_error("matrix/vector dimension mismatch");
  IntVec w(A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) w[i] += A.at(i, j) * v[j];
  return w;
}

IntMat mat_transpose(const IntMat& A) {
  IntMat T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Int det_bareiss(const IntMat& m) {
  if (m.rows != m.cols) throw input_error("determinant of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

Signature signature_symmetric(const IntMat& m) {
  if (m.rows != m.cols) throw input_error("signature of non-square matrix");
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) throw input_error("matrix is not symmetric");

  std::size_t n = m.rows;
  RatMat w(m);
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (w.at(k, k) == 0) {
      // Prefer swapping in a nonzero diagonal entry; otherwise mix in a row
      // with a nonzero off-diagonal pairing (congruence op, keeps signature).
      std::size_t p = k;
      for (std::size_t j = k + 1; j < n; ++j)
        if (w.at(j, j) != 0) { p = j; break; }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, k), w.at(i, p));
      } else {
        std::size_t l = k;
        for (std::size_t j = k + 1; j < n; ++j)
          if (w.at(k, j) != 0) { l = j; break; }
        if (l == k) {
          ++sig.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) w.at(k, j) += w.at(l, j);
        for (std::size_t i = 0; i < n; ++i) w.at(i, k) += w.at(i, l);
      }
    }
    const Rat pivot = w.at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w.at(i, k) == 0) continue;
      Rat f = w.at(i, k) / pivot;
      for (std::size_t j = 0; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
      for (std::size_t j = 0; j < n; ++j) w.at(j, i) -= f * w.at(j, k);
    }
    if (pivot > 0)
      ++sig.pos;
    else
      ++sig.neg;
  }
  return sig;
}

IntMat inverse_unimodular(const IntMat& m) {
  if (m.rows != m.cols) throw input_error("inverse of non-square matrix");
  std::size_t n = m.rows;
  RatMat w(m);
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w.at(p, k) == 0) ++p;
    if (p == n) throw input_error("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = w.at(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      w.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w.at(i, k) == 0) continue;
      Rat f = w.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& q = inv.at(i, j);
      if (denominator(q) != 1)
        throw input_error("matrix inverse is not integral (determinant not a unit)");
      out.at(i, j) = numerator(q);
    }
  return out;
}

RatVec solve_posdef(const RatMat& M, const RatVec& b) {
  std::size_t n = M.rows;
  if (M.cols != n || b.size() != n) throw input_error("solve: dimension mismatch");
  RatMat w = M;
  RatVec x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w.at(p, k) == 0) ++p;
    if (p == n) throw math_domain_error("solve: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      std::swap(x[k], x[p]);
    }
    Rat piv = w.at(k, k);
    for (std::size_t j = 0; j < n; ++j) w.at(k, j) /= piv;
    x[k] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w.at(i, k) == 0) continue;
      Rat f = w.at(i, k);
      for (std::size_t j = 0; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
      x[i] -= f * x[k];
    }
  }
  return x;
}

RowReduction unimodular_row_reduce(const IntVec& u) {
  if (vec_is_zero(u)) throw input_error("cannot reduce the zero functional");
  std::size_t n = u.size();
  IntMat U = IntMat::identity(n);
  IntVec w = u;

  auto col_sub = [&](std::size_t j, const Int& q, std::size_t i) {
    // col_j -= q * col_i, tracked on both U and w.
    for (std::size_t rr = 0; rr < n; ++rr) U.at(rr, j) -= q * U.at(rr, i);
    w[j] -= q * w[i];
  };

  while (true) {
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0 && (piv == n || abs(w[j]) < abs(w[piv]))) piv = j;
    if (piv != 0) {
      for (std::size_t rr = 0; rr < n; ++rr) std::swap(U.at(rr, 0), U.at(rr, piv));
      std::swap(w[0], w[piv]);
    }
    bool done = true;
    for (std::size_t j = 1; j < n; ++j) {
      if (w[j] == 0) continue;
      col_sub(j, round_div(w[j], w[0]), 0);
      if (w[j] != 0) done = false;
    }
    if (done) break;
  }
  if (w[0] < 0) {
    for (std::size_t rr = 0; rr < n; ++rr) U.at(rr, 0) = -U.at(rr, 0);
    w[0] = -w[0];
  }
  return {w[0], std::move(U)};
}

Ldl ldl_posdef(const RatMat& M) {
  std::size_t n = M.rows;
  if (M.cols != n) throw input_error("ldl of non-square matrix");
  RatMat w = M;
  Ldl out;
  out.d.resize(n);
  out.mu = RatMat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.d[i] = w.at(i, i);
    if (out.d[i] <= 0) throw math_domain_error("form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) out.mu.at(i, j) = w.at(i, j) / out.d[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        w.at(j, k) -= out.d[i] * out.mu.at(i, j) * out.mu.at(i, k);
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < j; ++k) w.at(j, k) = w.at(k, j);
  }
  return out;
}

}  // namespace ellsurf
