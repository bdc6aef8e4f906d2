#include "ellsurf/isometry.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace ellsurf {

IntMat LatticeLayout::w_gram() const {
  IntMat w(w_rank, w_rank);
  for (std::size_t i = 0; i < w_rank; ++i)
    for (std::size_t j = 0; j < w_rank; ++j)
      w.at(i, j) = lattice.gram().at(w_offset + i, w_offset + j);
  return w;
}

static void validate_layout(const LatticeLayout& ly) {
  const IntMat& g = ly.lattice.gram();
  const std::size_t n = ly.lattice.rank();
  if (ly.w_offset != 2 || ly.w_offset + ly.w_rank > n)
    throw input_error("W block must start at index 2 and fit in the lattice");
  if (ly.fiber_multiple < 1) throw input_error("fiber multiple must be positive");
  if (g.at(0, 0) != 0 || g.at(0, 1) != 1)
    throw input_error("layout requires kappa = e0 with kappa^2 = 0, kappa.x = 1");
  auto block_of = [&](std::size_t i) {
    if (i < 2) return 0;
    if (i < 2 + ly.w_rank) return 1;
    return 2;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (block_of(i) != block_of(j) && g.at(i, j) != 0)
        throw input_error("layout blocks (kappa,x | W | tail) must be orthogonal");
  if (ly.w_rank > 0) {
    GramLattice w{ly.w_gram()};
    if (!w.unimodular()) throw input_error("W block must be unimodular");
    if (!w.even()) throw input_error("W block must be even");
  }
}

LatticeLayout layout_of(const SurfaceModel& model) {
  if (!model.w_block)
    throw input_error(
        "model lacks a designated W block (explicit-Gram models carry none)");
  LatticeLayout ly{model.lattice, model.w_block->offset, model.w_block->rank,
                   model.m()};
  validate_layout(ly);
  return ly;
}

LatticeLayout make_layout(GramLattice lattice, std::size_t w_offset,
                          std::size_t w_rank, Int fiber_multiple) {
  LatticeLayout ly{std::move(lattice), w_offset, w_rank,
                   std::move(fiber_multiple)};
  validate_layout(ly);
  return ly;
}

KappaIsometry::KappaIsometry(const LatticeLayout& layout, IntMat tau, IntVec ell)
    : tau_(std::move(tau)), ell_(std::move(ell)) {
  const std::size_t wr = layout.w_rank;
  if (tau_.rows != wr || tau_.cols != wr)
    throw input_error("tau must be a square matrix of W's rank");
  if (ell_.size() != wr) throw input_error("ell must have one value per W basis vector");

  IntMat gw = layout.w_gram();
  if (mat_mul(mat_transpose(tau_), mat_mul(gw, tau_)) != gw)
    throw input_error("tau is not an isometry of W");

  // beta solves  tau^T Gw beta = -ell,  i.e.  -beta . tau(alpha) = ell(alpha);
  // Gw is unimodular so beta = -tau Gw^{-1} ell is integral.
  if (wr > 0) {
    beta_ = vec_neg(mat_vec(tau_, mat_vec(inverse_unimodular(gw), ell_)));
  }
  Int beta_sq = 0;
  for (std::size_t i = 0; i < wr; ++i)
    for (std::size_t j = 0; j < wr; ++j) beta_sq += beta_[i] * gw.at(i, j) * beta_[j];
  if (mod2(beta_sq) != 0)
    throw input_error("beta^2 must be even (W even)");  // unreachable for even W
  c_ = -beta_sq / 2;

  lattice_preserving_ = true;
  for (const Int& v : ell_)
    if (v % layout.fiber_multiple != 0) lattice_preserving_ = false;

  const std::size_t n = layout.lattice.rank();
  const std::size_t off = layout.w_offset;
  full_ = IntMat::identity(n);
  // column 1: phi(x) = x + c kappa + beta
  full_.at(0, 1) = c_;
  for (std::size_t i = 0; i < wr; ++i) full_.at(off + i, 1) = beta_[i];
  // columns of W: phi(alpha_j) = tau(alpha_j) + ell_j kappa
  for (std::size_t j = 0; j < wr; ++j) {
    full_.at(0, off + j) = ell_[j];
    for (std::size_t i = 0; i < wr; ++i) full_.at(off + i, off + j) = tau_.at(i, j);
  }

  // Gram preservation is forced by the construction; keep the exact check as
  // a guard against bad layouts.
  const IntMat& g = layout.lattice.gram();
  if (mat_mul(mat_transpose(full_), mat_mul(g, full_)) != g)
    throw input_error("assembled isometry does not preserve the pairing");
}

KappaIsometry build_kappa_isometry(const LatticeLayout& layout, IntMat tau,
                                   IntVec ell) {
  return KappaIsometry(layout, std::move(tau), std::move(ell));
}

ClassVector apply_isometry(const KappaIsometry& phi, const ClassVector& v) {
  return mat_vec(phi.matrix(), v);
}

Mod2Class apply_isometry_mod2(const KappaIsometry& phi, const Mod2Class& w) {
  const IntMat& m = phi.matrix();
  if (w.bits.size() != m.rows) throw input_error("mod-2 class has wrong length");
  Mod2Class out;
  out.bits.assign(m.rows, 0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (!w.bits[j]) continue;
    for (std::size_t i = 0; i < m.rows; ++i)
      out.bits[i] ^= static_cast<std::uint8_t>(mod2(m.at(i, j)));
  }
  return out;
}

// Reflection in v (v^2 = +-2) as a matrix on W: w -> w - 2(w.v)/v^2 * v.
static IntMat reflection_in(const IntMat& gw, const IntVec& v) {
  const std::size_t n = gw.rows;
  Int vsq = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vsq += v[i] * gw.at(i, j) * v[j];
  if (vsq != 2 && vsq != -2)
    throw input_error("reflection vector must have square +-2");
  IntVec fv = mat_vec(gw, v);  // functional w -> w.v
  IntMat m = IntMat::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) -= 2 * fv[j] * v[i] / vsq;
  return m;
}

std::vector<KappaIsometry> default_generators(const LatticeLayout& layout) {
  const std::size_t wr = layout.w_rank;
  IntMat gw = layout.w_gram();

  // Pool of norm +-2 vectors: block-by-block scan of the standard shapes
  // (u+v, u-v for hyperbolic planes; basis vectors for root blocks), falling
  // back to any basis vector of square +-2.
  std::vector<IntVec> pool;
  for (std::size_t i = 0; i < wr; ++i) {
    IntVec e(wr);
    e[i] = 1;
    Int sq = gw.at(i, i);
    if (sq == 2 || sq == -2) pool.push_back(e);
    if (sq == 0 && i + 1 < wr && gw.at(i, i + 1) == 1 && gw.at(i + 1, i + 1) == 0) {
      IntVec p(wr), m(wr);
      p[i] = 1;
      p[i + 1] = 1;  // square +2
      m[i] = 1;
      m[i + 1] = -1;  // square -2
      pool.push_back(p);
      pool.push_back(m);
      ++i;
    }
  }

  std::vector<KappaIsometry> gens;
  IntVec zero_ell(wr);
  for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
    IntMat t = mat_mul(reflection_in(gw, pool[i]), reflection_in(gw, pool[i + 1]));
    gens.push_back(build_kappa_isometry(layout, std::move(t), zero_ell));
  }
  if (pool.size() >= 3) {
    IntMat t = mat_mul(reflection_in(gw, pool.back()), reflection_in(gw, pool.front()));
    gens.push_back(build_kappa_isometry(layout, std::move(t), zero_ell));
  }
  for (std::size_t i = 0; i < wr; ++i) {
    IntVec ell(wr);
    ell[i] = layout.fiber_multiple;
    gens.push_back(build_kappa_isometry(layout, IntMat::identity(wr), std::move(ell)));
  }
  return gens;
}

namespace {

std::uint64_t pack_bits(const Mod2Class& w) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < w.bits.size(); ++i)
    if (w.bits[i]) k |= std::uint64_t{1} << i;
  return k;
}

Mod2Class unpack_bits(std::uint64_t k, std::size_t n) {
  Mod2Class w;
  w.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.bits[i] = (k >> i) & 1;
  return w;
}

// w^2 mod 4 is well defined on classes mod 2.
int square_mod4(const GramLattice& L, const Mod2Class& w) {
  ClassVector lift(w.bits.size());
  for (std::size_t i = 0; i < w.bits.size(); ++i) lift[i] = w.bits[i];
  return mod4(L.square(lift));
}

}  // namespace

OrbitReport mod2_orbit(const LatticeLayout& layout, int a_mod4,
                       const std::vector<KappaIsometry>& generators,
                       OrbitLimits limits) {
  const std::size_t n = layout.lattice.rank();
  if (n > 64) throw input_error("mod-2 orbit supports rank <= 64");
  for (const auto& g : generators)
    if (g.rank() != n) throw input_error("generator rank does not match lattice");

  OrbitReport report;
  report.a_mod4 = mod4(Int(a_mod4));

  // Enumerate {w : w.kappa = 1 mod 2}: one coordinate with odd kappa-pairing
  // is determined by the others.
  ClassVector kappa(n);
  kappa[0] = 1;
  IntVec kf = layout.lattice.functional(kappa);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (mod2(kf[i]) == 1) { pivot = i; break; }
  if (pivot == n) throw input_error("kappa pairs evenly with the whole lattice");

  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) free_idx.push_back(i);
  if (free_idx.size() >= 63 ||
      (std::uint64_t{1} << free_idx.size()) > limits.max_states) {
    report.truncated = true;
    return report;
  }

  std::unordered_set<std::uint64_t> candidates;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_idx.size());
       ++mask) {
    Mod2Class w;
    w.bits.assign(n, 0);
    int dot = 0;
    for (std::size_t b = 0; b < free_idx.size(); ++b)
      if ((mask >> b) & 1) {
        w.bits[free_idx[b]] = 1;
        dot ^= mod2(kf[free_idx[b]]);
      }
    w.bits[pivot] = static_cast<std::uint8_t>(dot ^ 1);
    if (square_mod4(layout.lattice, w) == report.a_mod4)
      candidates.insert(pack_bits(w));
  }
  report.candidate_count = candidates.size();

  // Precompute generator actions as packed column masks.
  std::vector<std::vector<std::uint64_t>> action;
  for (const auto& g : generators) {
    std::vector<std::uint64_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t col = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mod2(g.matrix().at(i, j))) col |= std::uint64_t{1} << i;
      cols[j] = col;
    }
    action.push_back(std::move(cols));
  }
  auto apply = [&](std::size_t gi, std::uint64_t w) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < n; ++j)
      if ((w >> j) & 1) out ^= action[gi][j];
    return out;
  };

  std::unordered_map<std::uint64_t, std::size_t> orbit_of;
  std::size_t visited = 0;
  for (std::uint64_t seed : candidates) {
    if (orbit_of.count(seed)) continue;
    std::size_t id = report.orbits.size();
    report.orbits.emplace_back();
    std::vector<std::uint64_t> queue{seed};
    orbit_of[seed] = id;
    while (!queue.empty()) {
      std::uint64_t w = queue.back();
      queue.pop_back();
      report.orbits[id].push_back(unpack_bits(w, n));
      if (++visited > limits.max_states) {
        report.truncated = true;
        break;
      }
      for (std::size_t gi = 0; gi < action.size(); ++gi) {
        std::uint64_t img = apply(gi, w);
        if (!candidates.count(img))
          throw input_error("generator does not preserve the candidate set");
        if (!orbit_of.count(img)) {
          orbit_of[img] = id;
          queue.push_back(img);
        }
      }
    }
    if (report.truncated) break;
  }

  for (auto& orbit : report.orbits) std::sort(orbit.begin(), orbit.end());
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  report.single_orbit = !report.truncated && report.orbits.size() == 1 &&
                        report.candidate_count > 0;
  return report;
}

}  // namespace ellsurf
