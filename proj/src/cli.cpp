#include "ellsurf/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ellsurf/classify.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/invariants.hpp"
#include "ellsurf/surface_spec.hpp"
#include "ellsurf/walls.hpp"

namespace ellsurf {

namespace {

int to_small(const Int& v, const std::string& what) {
  if (v < -1000000 || v > 1000000)
    throw input_error(what + " out of supported range");
  return static_cast<int>(v);
}

std::string wall_line(const WallClass& w) {
  return vec_str(w.zeta) + " square=" + w.square.str();
}

struct InvariantArgs {
  std::string spec, t, p, c;
};

void run_invariant(const InvariantArgs& a, std::ostream& out) {
  SurfaceModel model = parse_surface_spec(read_text_file(a.spec));
  InvariantParams params = params_of(model);
  int given = !a.t.empty() + !a.p.empty() + !a.c.empty();
  if (given != 1)
    throw input_error("exactly one of --t, --p, --c is required");
  if (!a.t.empty()) {
    int t = to_small(parse_int(a.t, "--t"), "--t");
    out << "gamma_" << t << " = " << gamma_small(params, t).str() << "\n";
  } else if (!a.p.empty()) {
    Rat an = leading_coeff_so3_even(params, parse_int(a.p, "--p"));
    out << "a_n = " << format_rat(an) << "\n";
  } else {
    Rat an = leading_coeff_su2(params, parse_int(a.c, "--c"));
    out << "a_n = " << format_rat(an) << "\n";
  }
}

struct SeriesArgs {
  std::string spec, order;
};

void run_series(const SeriesArgs& a, std::ostream& out) {
  SurfaceModel model = parse_surface_spec(read_text_file(a.spec));
  InvariantParams params = params_of(model);
  int order = to_small(parse_int(a.order, "--order"), "--order");
  if (order < 0) throw input_error("--order must be nonnegative");
  for (int t = 0; t <= order; ++t)
    out << "gamma_" << t << " = " << gamma_t_conjectural(params, t).str()
        << "\n";
}

struct WallsArgs {
  std::string spec, delta, c, x, y, dump, jobs;
};

void run_walls(const WallsArgs& a, std::ostream& out) {
  if (!a.jobs.empty()) {
    Int jobs = parse_int(a.jobs, "--jobs");
    if (jobs < 1) throw input_error("--jobs must be at least 1");
    // Partitioning hint only; output is identical for any value.
  }
  ChamberContext ctx = context_of(parse_surface_spec(read_text_file(a.spec)));
  ClassVector delta = parse_class(a.delta, "--delta");
  Int c = parse_int(a.c, "--c");
  Polarization x = make_polarization(ctx, parse_class(a.x, "--x"));
  Polarization y = make_polarization(ctx, parse_class(a.y, "--y"));
  std::vector<WallClass> walls = separating_walls(ctx, x, y, delta, c);
  if (a.dump.empty()) {
    for (const WallClass& w : walls) out << wall_line(w) << "\n";
    return;
  }
  std::ofstream file(a.dump, std::ios::binary);
  if (!file) throw input_error("cannot open file: " + a.dump);
  for (const WallClass& w : walls) file << wall_line(w) << "\n";
  out << "count = " << walls.size() << "\n";
}

struct SuitableArgs {
  std::string spec, delta, c, L, mode;
  bool make = false;
};

void run_suitable(const SuitableArgs& a, std::ostream& out) {
  ChamberContext ctx = context_of(parse_surface_spec(read_text_file(a.spec)));
  ClassVector delta = parse_class(a.delta, "--delta");
  Int c = parse_int(a.c, "--c");
  Polarization L = make_polarization(ctx, parse_class(a.L, "--L"));
  if (a.make) {
    SuitableMode mode;
    if (a.mode.empty() || a.mode == "minimal")
      mode = SuitableMode::minimal;
    else if (a.mode == "paper-bound")
      mode = SuitableMode::paper_bound;
    else
      throw input_error("--mode must be 'paper-bound' or 'minimal'");
    MakeSuitableResult made = make_suitable(ctx, L, delta, c, mode);
    out << "n = " << made.n.str() << "\n";
    out << "L = " << vec_str(made.L.cls) << "\n";
    return;
  }
  if (!a.mode.empty()) throw input_error("--mode requires --make");
  SuitabilityResult res = is_suitable(ctx, L, delta, c);
  if (res.suitable) {
    out << "suitable = true\n";
  } else {
    out << "suitable = false witness = " << wall_line(*res.witness) << "\n";
  }
}

struct ChamberArgs {
  std::string spec, delta, c, L1, L2;
};

void run_chamber(const ChamberArgs& a, std::ostream& out) {
  ChamberContext ctx = context_of(parse_surface_spec(read_text_file(a.spec)));
  ClassVector delta = parse_class(a.delta, "--delta");
  Int c = parse_int(a.c, "--c");
  Polarization l1 = make_polarization(ctx, parse_class(a.L1, "--L1"));
  Polarization l2 = make_polarization(ctx, parse_class(a.L2, "--L2"));
  bool same = same_chamber(ctx, l1, l2, delta, c);
  out << "same_chamber = " << (same ? "true" : "false") << "\n";
}

struct OrbitArgs {
  std::string spec, a, limit;
  bool default_gens = false;
};

void run_orbit(const OrbitArgs& a, std::ostream& out) {
  SpecDocument doc = parse_spec_document(read_text_file(a.spec));
  LatticeLayout layout = layout_of(doc.model);
  std::vector<KappaIsometry> gens = std::move(doc.generators);
  if (a.default_gens) {
    for (KappaIsometry& g : default_generators(layout))
      gens.push_back(std::move(g));
  }
  int residue = mod4(parse_int(a.a, "--a"));
  OrbitLimits limits;
  if (!a.limit.empty()) {
    Int lim = parse_int(a.limit, "--limit");
    if (lim < 1) throw input_error("--limit must be at least 1");
    limits.max_states = static_cast<std::size_t>(to_small(lim, "--limit"));
  }
  OrbitReport report = mod2_orbit(layout, residue, gens, limits);
  out << "candidates = " << report.candidate_count << "\n";
  out << "orbits = " << report.orbits.size() << "\n";
  out << "single_orbit = " << (report.single_orbit ? "true" : "false") << "\n";
  out << "truncated = " << (report.truncated ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < report.orbits.size(); ++i)
    out << "orbit " << (i + 1) << ": size = " << report.orbits[i].size()
        << " min = " << report.orbits[i].front().str() << "\n";
}

struct ClassifyArgs {
  std::string A, B, mu, C1, pg;
};

void run_classify(const ClassifyArgs& a, std::ostream& out) {
  bool ab = !a.A.empty() || !a.B.empty();
  bool prod = !a.mu.empty() || !a.C1.empty() || !a.pg.empty();
  if (ab == prod)
    throw input_error("use either --A/--B or --mu/--C1/--pg");
  MultPair pair{1, 1};
  if (ab) {
    if (a.A.empty() || a.B.empty())
      throw input_error("--A and --B are required together");
    pair = recover_from_AB(parse_int(a.A, "--A"), parse_int(a.B, "--B"));
  } else {
    if (a.mu.empty() || a.C1.empty() || a.pg.empty())
      throw input_error("--mu, --C1 and --pg are required together");
    pair = recover_with_product(parse_int(a.mu, "--mu"),
                                parse_int(a.C1, "--C1"),
                                to_small(parse_int(a.pg, "--pg"), "--pg"));
  }
  out << "m = " << pair.str() << "\n";
}

struct DistinguishArgs {
  std::string spec1, spec2;
};

void run_distinguish(const DistinguishArgs& a, std::ostream& out) {
  SurfaceModel ma = parse_surface_spec(read_text_file(a.spec1));
  SurfaceModel mb = parse_surface_spec(read_text_file(a.spec2));
  out << distinguish(ma, mb).str() << "\n";
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  CLI::App app{"Exact wall/chamber, isometry and invariant arithmetic for "
               "elliptic-surface lattices"};
  app.name("ellsurf");
  app.require_subcommand(1);

  InvariantArgs inv_args;
  CLI::App* inv = app.add_subcommand(
      "invariant", "Closed-form invariant data for one surface");
  inv->add_option("spec", inv_args.spec, "surface-spec file")->required();
  inv->add_option("--t", inv_args.t, "print gamma_t (t = 1 or 2)");
  inv->add_option("--p", inv_args.p,
                  "print the leading coefficient at p (one multiplicity even)");
  inv->add_option("--c", inv_args.c,
                  "print the leading coefficient at c (rank-2 route)");

  SeriesArgs series_args;
  CLI::App* series = app.add_subcommand(
      "series", "Conjectural generating-series terms gamma_0..gamma_T");
  series->add_option("spec", series_args.spec, "surface-spec file")
      ->required();
  series->add_option("--order", series_args.order, "last t to print")
      ->required();

  WallsArgs walls_args;
  CLI::App* walls = app.add_subcommand(
      "walls", "Walls of type (delta, c) separating two polarizations");
  walls->add_option("spec", walls_args.spec, "surface-spec file")->required();
  walls->add_option("--delta", walls_args.delta, "class, comma-separated")
      ->required();
  walls->add_option("--c", walls_args.c, "type integer c")->required();
  walls->add_option("--x", walls_args.x, "first polarization")->required();
  walls->add_option("--y", walls_args.y, "second polarization")->required();
  walls->add_option("--dump", walls_args.dump,
                    "write walls to this file; print only the count");
  walls->add_option("--jobs", walls_args.jobs,
                    "partitioning hint; never changes output");

  SuitableArgs suit_args;
  CLI::App* suit = app.add_subcommand(
      "suitable", "Test a polarization, or construct a suitable one");
  suit->add_option("spec", suit_args.spec, "surface-spec file")->required();
  suit->add_option("--delta", suit_args.delta, "class, comma-separated")
      ->required();
  suit->add_option("--c", suit_args.c, "type integer c")->required();
  suit->add_option("--L", suit_args.L, "polarization")->required();
  suit->add_flag("--make", suit_args.make, "construct L + n*fiber instead");
  suit->add_option("--mode", suit_args.mode, "paper-bound or minimal");

  ChamberArgs chamber_args;
  CLI::App* chamber = app.add_subcommand(
      "chamber", "Decide whether two polarizations share their chamber");
  chamber->add_option("spec", chamber_args.spec, "surface-spec file")
      ->required();
  chamber->add_option("--delta", chamber_args.delta, "class, comma-separated")
      ->required();
  chamber->add_option("--c", chamber_args.c, "type integer c")->required();
  chamber->add_option("--L1", chamber_args.L1, "first polarization")
      ->required();
  chamber->add_option("--L2", chamber_args.L2, "second polarization")
      ->required();

  OrbitArgs orbit_args;
  CLI::App* orbit = app.add_subcommand(
      "isometry-orbit", "Mod-2 orbits of classes with w.kappa = 1, w^2 = a");
  orbit->add_option("spec", orbit_args.spec, "surface-spec file")->required();
  orbit->add_option("--a", orbit_args.a, "square residue mod 4")->required();
  orbit->add_flag("--default-gens", orbit_args.default_gens,
                  "add the built-in reflection/translation generators");
  orbit->add_option("--limit", orbit_args.limit, "visited-state cap");

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand(
      "classify", "Recover multiplicities from invariant data");
  classify->add_option("--A", classify_args.A, "(m1^2-1)(m2^2-1)");
  classify->add_option("--B", classify_args.B, "(m1^4-1)(m2^4-1)");
  classify->add_option("--mu", classify_args.mu, "product m1*m2");
  classify->add_option("--C1", classify_args.C1, "degree-2 constant");
  classify->add_option("--pg", classify_args.pg, "geometric genus");

  DistinguishArgs dist_args;
  CLI::App* dist = app.add_subcommand(
      "distinguish", "Compare two surface specs up to deformation");
  dist->add_option("spec1", dist_args.spec1, "first surface-spec file")
      ->required();
  dist->add_option("spec2", dist_args.spec2, "second surface-spec file")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ellsurf");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  std::ostringstream out;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*inv) run_invariant(inv_args, out);
    if (*series) run_series(series_args, out);
    if (*walls) run_walls(walls_args, out);
    if (*suit) run_suitable(suit_args, out);
    if (*chamber) run_chamber(chamber_args, out);
    if (*orbit) run_orbit(orbit_args, out);
    if (*classify) run_classify(classify_args, out);
    if (*dist) run_distinguish(dist_args, out);
    result.out = out.str();
    result.code = 0;
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    result.code = 0;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.code = 2;
  } catch (const input_error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.code = 2;
  } catch (const math_domain_error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.code = 3;
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.code = 2;
  }
  return result;
}

}  // namespace ellsurf
