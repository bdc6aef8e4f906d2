#include "ellsurf/lattice.hpp"

#include <utility>

namespace ellsurf {

std::string Mod2Class::str() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

Mod2Class reduce_mod2(const ClassVector& u) {
  Mod2Class w;
  w.bits.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    w.bits[i] = static_cast<std::uint8_t>(mod2(u[i]));
  return w;
}

GramLattice::GramLattice(IntMat gram) : gram_(std::move(gram)) {
  if (gram_.rows != gram_.cols) throw input_error("gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows; ++i)
    for (std::size_t j = i + 1; j < gram_.cols; ++j)
      if (gram_.at(i, j) != gram_.at(j, i))
        throw input_error("gram matrix must be symmetric");
  sig_ = signature_symmetric(gram_);
  if (sig_.zero != 0) throw input_error("gram matrix must be nondegenerate");
  det_ = det_bareiss(gram_);
}

bool GramLattice::even() const {
  for (std::size_t i = 0; i < gram_.rows; ++i)
    if (mod2(gram_.at(i, i)) != 0) return false;
  return true;
}

Int GramLattice::pair(const ClassVector& u, const ClassVector& v) const {
  if (u.size() != rank() || v.size() != rank())
    throw input_error("class vector length does not match lattice rank");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += u[i] * gram_.at(i, j) * v[j];
  }
  return s;
}

IntVec GramLattice::functional(const ClassVector& u) const {
  return mat_vec(gram_, u);
}

IntMat hyperbolic_gram() {
  IntMat h(2, 2);
  h.at(0, 1) = 1;
  h.at(1, 0) = 1;
  return h;
}

IntMat e8_minus_gram() {
  // Negated E8 Cartan matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8 with
  // node 2 attached to node 4.
  static const int bonds[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6},
                                 {6, 7}, {7, 8}, {2, 4}};
  IntMat e(8, 8);
  for (int i = 0; i < 8; ++i) e.at(i, i) = -2;
  for (auto& b : bonds) {
    e.at(b[0] - 1, b[1] - 1) = 1;
    e.at(b[1] - 1, b[0] - 1) = 1;
  }
  return e;
}

Int canonical_multiple(int pg, const Int& m1, const Int& m2) {
  return Int(pg + 1) * m1 * m2 - m1 - m2;
}

static void check_multiplicities(int pg, const Int& m1, const Int& m2, int r) {
  if (pg < 0) throw input_error("pg must be nonnegative");
  if (r < 0) throw input_error("r must be nonnegative");
  if (m1 < 1 || m2 < 1) throw input_error("multiplicities must be positive");
  if (m1 > m2) throw input_error("multiplicities must satisfy m1 <= m2");
  if (gcd(m1, m2) != 1) throw input_error("multiplicities must be coprime");
}

static SurfaceModel finish_model(SurfaceModel model) {
  validate_surface_model(model);
  return model;
}

SurfaceModel build_surface_model(int pg, const Int& m1, const Int& m2, int r,
                                 int x_square) {
  check_multiplicities(pg, m1, m2, r);
  if (x_square != 0 && x_square != 1)
    throw input_error("x_square must be 0 or 1");

  const std::size_t w_rank = static_cast<std::size_t>(12 * pg + 8);
  const std::size_t n = 2 + w_rank + static_cast<std::size_t>(r);
  IntMat gram(n, n);
  gram.at(0, 1) = 1;
  gram.at(1, 0) = 1;
  gram.at(1, 1) = x_square;
  std::size_t off = 2;
  IntMat h = hyperbolic_gram(), e8 = e8_minus_gram();
  for (int b = 0; b < 2 * pg; ++b, off += 2)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) gram.at(off + i, off + j) = h.at(i, j);
  for (int b = 0; b < pg + 1; ++b, off += 8)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) gram.at(off + i, off + j) = e8.at(i, j);
  for (int i = 0; i < r; ++i, ++off) gram.at(off, off) = -1;

  SurfaceModel model{pg,
                     r,
                     m1,
                     m2,
                     GramLattice(std::move(gram)),
                     ClassVector(n),
                     ClassVector(n),
                     {},
                     {},
                     {},
                     WBlock{2, w_rank}};
  model.kappa[0] = 1;
  model.x_class[1] = 1;
  model.fiber = vec_scale(model.m(), model.kappa);
  model.canonical = vec_scale(canonical_multiple(pg, m1, m2), model.kappa);
  for (int i = 0; i < r; ++i) {
    ClassVector e(n);
    e[2 + w_rank + static_cast<std::size_t>(i)] = 1;
    model.exceptional.push_back(std::move(e));
  }
  return finish_model(std::move(model));
}

SurfaceModel build_surface_model(int pg, const Int& m1, const Int& m2, int r,
                                 IntMat gram, ClassVector kappa, ClassVector x) {
  check_multiplicities(pg, m1, m2, r);
  GramLattice lattice{std::move(gram)};
  const std::size_t n = lattice.rank();
  if (kappa.size() != n || x.size() != n)
    throw input_error("kappa/x length does not match gram rank");
  Signature want{static_cast<std::size_t>(2 * pg + 1),
                 static_cast<std::size_t>(10 * pg + 9), 0};
  if (lattice.signature() != want)
    throw input_error(
        "explicit gram must have the minimal-surface signature "
        "(2pg+1, 10pg+9); blow-ups are appended from r");

  SurfaceModel model{pg,
                     0,
                     m1,
                     m2,
                     std::move(lattice),
                     std::move(kappa),
                     std::move(x),
                     {},
                     {},
                     {},
                     std::nullopt};
  model.fiber = vec_scale(model.m(), model.kappa);
  model.canonical = vec_scale(canonical_multiple(pg, m1, m2), model.kappa);
  model = finish_model(std::move(model));
  return r > 0 ? blow_up(model, r) : model;
}

SurfaceModel blow_up(const SurfaceModel& model, int extra) {
  if (extra < 0) throw input_error("number of blow-ups must be nonnegative");
  if (extra == 0) return model;
  const std::size_t n = model.lattice.rank();
  const std::size_t m = n + static_cast<std::size_t>(extra);
  IntMat gram(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = model.lattice.gram().at(i, j);
  for (std::size_t i = n; i < m; ++i) gram.at(i, i) = -1;

  auto pad = [m](const ClassVector& u) {
    ClassVector w(m);
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i];
    return w;
  };

  SurfaceModel out{model.pg,
                   model.r + extra,
                   model.m1,
                   model.m2,
                   GramLattice(std::move(gram)),
                   pad(model.kappa),
                   pad(model.x_class),
                   pad(model.fiber),
                   pad(model.canonical),
                   {},
                   model.w_block};
  for (const auto& e : model.exceptional) out.exceptional.push_back(pad(e));
  for (std::size_t i = n; i < m; ++i) {
    ClassVector e(m);
    e[i] = 1;
    out.exceptional.push_back(std::move(e));
  }
  return finish_model(std::move(out));
}

SurfaceModel shift_x(const SurfaceModel& model) {
  SurfaceModel out = model;
  out.x_class = vec_add(out.x_class, out.kappa);
  return out;
}

std::pair<int, int> homotopy_data(const Int& b2, const Int& sigma) {
  Int num = b2 + sigma + 2;
  if (num % 4 != 0)
    throw math_domain_error("b2 + sigma + 2 must be divisible by 4");
  Int chi = num / 4;
  Int pg = chi - 1;
  Int r = -sigma - 8 * chi;
  if (pg < 0) throw math_domain_error("derived pg is negative");
  if (r < 0) throw math_domain_error("derived blow-up count is negative");
  return {static_cast<int>(pg), static_cast<int>(r)};
}

void validate_surface_model(const SurfaceModel& model) {
  check_multiplicities(model.pg, model.m1, model.m2, model.r);
  const GramLattice& L = model.lattice;
  if (!L.unimodular()) throw input_error("lattice must be unimodular");
  Signature want{static_cast<std::size_t>(2 * model.pg + 1),
                 static_cast<std::size_t>(10 * model.pg + 9 + model.r), 0};
  if (L.signature() != want)
    throw input_error("lattice signature must be (2pg+1, 10pg+9+r)");
  if (L.square(model.kappa) != 0) throw input_error("kappa^2 must be 0");
  if (vec_content(model.kappa) != 1) throw input_error("kappa must be primitive");
  if (L.pair(model.x_class, model.kappa) != 1)
    throw input_error("x . kappa must be 1");
  if (model.fiber != vec_scale(model.m(), model.kappa))
    throw input_error("fiber must equal m1*m2*kappa");
  Int km = canonical_multiple(model.pg, model.m1, model.m2);
  if (model.canonical != vec_scale(km, model.kappa))
    throw input_error("canonical class must be ((pg+1)m1m2-m1-m2)*kappa");
  if (model.exceptional.size() != static_cast<std::size_t>(model.r))
    throw input_error("model must carry one exceptional class per blow-up");
  for (const auto& e : model.exceptional) {
    if (L.square(e) != -1) throw input_error("exceptional classes must square to -1");
    if (L.pair(e, model.kappa) != 0)
      throw input_error("exceptional classes must be orthogonal to kappa");
  }
  if (model.w_block) {
    if (model.w_block->offset + model.w_block->rank > L.rank())
      throw input_error("W block exceeds lattice rank");
  }
}

}  // namespace ellsurf
