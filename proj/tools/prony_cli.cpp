// Command-line front end: reconstruct, moeller, evalcount, project, verify.
// Exit status 0 on success, 1 for bad input, 2 when the algorithm cannot
// finish (see prony::io::exit_code).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "vendor/CLI11.hpp"

#include "prony/io.hpp"

using namespace prony;
using io::Json;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string output;
};

struct Source {
  std::string samples;
  std::string generator;
};

struct StructureOpts {
  std::string kind = "hankel";
  std::string rows = "total";
  std::string cols = "total";
  int row_offset = -1;
  std::string variety;         // algebraic set file, relative kinds
  std::string structure_file;  // fixed matrix file
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + c.output);
  out << text;
}

void add_source(CLI::App* app, Source& s) {
  app->add_option("--samples", s.samples, "sample file (JSON)");
  app->add_option("--generator", s.generator, "generator spec (JSON)");
}

void add_structure(CLI::App* app, StructureOpts& s) {
  app->add_option("--structure", s.kind,
                  "hankel, toeplitz, chebyshev, relative, relative-square, fixed")
      ->capture_default_str();
  app->add_option("--rows", s.rows, "row index family: total, max, hyperbolic")
      ->capture_default_str();
  app->add_option("--cols", s.cols, "column index family: total, max, hyperbolic")
      ->capture_default_str();
  app->add_option("--row-offset", s.row_offset, "rows are the row family at d + offset")
      ->capture_default_str();
  app->add_option("--variety", s.variety, "algebraic set file for relative structures");
  app->add_option("--structure-file", s.structure_file, "fixed matrix structure file");
}

// Exact oracle: table entries first, then the generator if any.
struct LoadedOracle {
  std::optional<GeneratorSpec> generator;
  std::unique_ptr<SampleOracle> oracle;
};

LoadedOracle load_oracle(const Source& s) {
  if (s.samples.empty() && s.generator.empty()) {
    throw Error(Errc::InvalidInput, "give --samples, --generator or both");
  }
  LoadedOracle out;
  std::optional<SampleOracle> gen;
  if (!s.generator.empty()) {
    out.generator = io::generator_from_json(io::read_json_file(s.generator));
    gen.emplace(oracle_from_generator(*out.generator));
  }
  if (s.samples.empty()) {
    out.oracle = std::make_unique<SampleOracle>(std::move(*gen));
    return out;
  }
  const io::SampleTable t = io::sample_table_from_json(io::read_json_file(s.samples));
  SampleOracle::Fn fallback;
  if (gen) {
    if (gen->n() != t.n || gen->domain() != t.domain) {
      throw Error(Errc::InvalidInput, "sample file and generator disagree on n or domain");
    }
    auto shared = std::make_shared<SampleOracle>(std::move(*gen));
    fallback = [shared](const LatticeIndex& a) { return shared->query(a); };
  }
  out.oracle = std::make_unique<SampleOracle>(
      SampleOracle::from_table(t.n, t.domain, t.values, fallback));
  return out;
}

PronyStructureSpec make_structure(const StructureOpts& s, std::size_t n) {
  const FamilyKind rows = parse_family(s.rows);
  const FamilyKind cols = parse_family(s.cols);
  if (s.kind == "hankel") return hankel_structure(n, cols, rows, s.row_offset);
  if (s.kind == "toeplitz") return toeplitz_structure(n, cols, rows, s.row_offset);
  if (s.kind == "chebyshev") {
    if (n != 1) throw Error(Errc::InvalidInput, "the Chebyshev structure is univariate");
    return chebyshev_structure();
  }
  if (s.kind == "relative" || s.kind == "relative-square") {
    if (s.variety.empty()) throw Error(Errc::InvalidInput, "relative structures need --variety");
    const AlgebraicSet y = io::algebraic_set_from_json(io::read_json_file(s.variety));
    if (y.n() != n) throw Error(Errc::DimensionMismatch, "variety and samples differ in n");
    return relative_structure(y, cols, rows, s.row_offset, s.kind == "relative-square");
  }
  if (s.kind == "fixed") {
    if (s.structure_file.empty()) {
      throw Error(Errc::InvalidInput, "fixed structures need --structure-file");
    }
    return io::fixed_structure_from_json(io::read_json_file(s.structure_file));
  }
  throw Error(Errc::InvalidInput, "unknown structure '" + s.kind + "'");
}

// Labels decoded back to the generator's own basis where that is defined.
std::optional<Json> decode(const StructureOpts& s, const std::optional<GeneratorSpec>& g,
                           const PointSet& support) {
  if (!g) return std::nullopt;
  if (s.kind == "chebyshev" && std::holds_alternative<ChebPolySpec>(*g)) {
    return Json{{"kind", "chebyshev"},
                {"indices", decode_chebyshev(support, std::get<ChebPolySpec>(*g).base)}};
  }
  if (s.kind == "hankel" && std::holds_alternative<PolySpec>(*g)) {
    const auto& p = std::get<PolySpec>(*g);
    const auto bases = p.bases.empty()
                           ? default_bases(p.kronecker_base ? 1 : p.p.nvars())
                           : p.bases;
    const auto exps = p.kronecker_base
                          ? decode_kronecker(support, bases[0], p.p.nvars(), p.kronecker_base)
                          : decode_monomial(support, bases);
    return Json{{"kind", "monomial"}, {"exponents", exps}};
  }
  return std::nullopt;
}

int cmd_reconstruct(const Common& c, const Source& src, const StructureOpts& so,
                    std::optional<std::size_t> rank_bound, bool automatic,
                    std::size_t max_d, std::optional<std::size_t> degree,
                    const std::string& field, std::optional<double> tol) {
  const int modes = (rank_bound ? 1 : 0) + (automatic ? 1 : 0) + (degree && field == "exact" ? 1 : 0);
  if (field == "float") {
    if (!rank_bound) throw Error(Errc::InvalidInput, "float mode needs --rank-bound");
    if (src.generator.empty() == src.samples.empty()) {
      throw Error(Errc::InvalidInput, "float mode takes exactly one of --samples, --generator");
    }
    std::unique_ptr<FloatOracle> f;
    std::optional<GaussianSpec> gauss;
    if (!src.generator.empty()) {
      const GeneratorSpec g = io::generator_from_json(io::read_json_file(src.generator));
      if (!std::holds_alternative<GaussianSpec>(g)) {
        throw Error(Errc::InvalidInput, "float mode reads Gaussian generators");
      }
      gauss = std::get<GaussianSpec>(g);
      f = std::make_unique<FloatOracle>(float_oracle_from_generator(*gauss));
    } else {
      const auto t = io::float_sample_table_from_json(io::read_json_file(src.samples));
      f = std::make_unique<FloatOracle>(FloatOracle::from_table(t.n, t.domain, t.values));
    }
    FloatStructureSpec fs;
    fs.n = f->n();
    fs.rank_bound = *rank_bound;
    fs.degree = degree.value_or(*rank_bound);
    const double max_residual = tol.value_or(1e-6);
    const FloatOutcome out = run_float_pipeline(fs, *f, c.seed, max_residual);
    Json j = io::to_json(out);
    if (gauss) {
      const auto dec = decode_gaussian(out.support, out.coefficients, gauss->a);
      j["decoded"] = Json{{"kind", "gaussian"}, {"centers", dec.centers},
                          {"coefficients", dec.coeffs}};
    }
    emit(c, io::dump(j));
    return 0;
  }
  if (field != "exact") throw Error(Errc::InvalidInput, "--field is exact or float");
  if (tol) throw Error(Errc::InvalidInput, "--tol applies to float mode only");
  if (modes != 1) {
    throw Error(Errc::InvalidInput, "choose one of --rank-bound, --auto, --degree");
  }
  LoadedOracle lo = load_oracle(src);
  const PronyStructureSpec spec = make_structure(so, lo.oracle->n());
  const Mode mode = rank_bound ? Mode::rank_bound(*rank_bound)
                               : automatic ? Mode::automatic(max_d) : Mode::fixed(*degree);
  PipelineOptions opts;
  opts.seed = c.seed;
  const PronyOutcome out = run_pipeline(spec, *lo.oracle, mode, opts);
  Json j = io::to_json(out);
  if (auto d = decode(so, lo.generator, out.support)) j["decoded"] = *d;
  emit(c, io::dump(j));
  return 0;
}

int cmd_moeller(const Common& c, const std::string& points, const std::string& order,
                const std::string& family, std::size_t degree) {
  const PointSet x = io::point_set_from_json(io::read_json_file(points));
  const MonomialOrder ord = MonomialOrder::parse(order);
  const auto d = family_members({parse_family(family), x.n()}, degree, ord);
  const MoellerBasis mb = moeller_basis(x, d, ord);

  Json g = Json::array();
  for (const auto& p : mb.groebner) g.push_back(p.str());
  Json reduced = Json::array();
  for (const auto& p : reduced_groebner(mb)) reduced.push_back(p.str());
  Json normal = Json::array();
  for (const auto& e : mb.normal_set) normal.push_back(e);

  const std::set<Exponent> dset(d.begin(), d.end());
  const bool normal_in_d = std::all_of(mb.normal_set.begin(), mb.normal_set.end(),
                                       [&dset](const Exponent& e) { return dset.count(e) > 0; });
  // ZL of the vanishing space on D itself, which may be larger than X.
  const auto zs = extended_zero_set(vanishing_space(d, x, ord), ord);
  const bool zl_mismatch = !zs || !zs->complete || !(zs->points == x);

  const Json out{{"order", ord.name()},
                 {"groebner", g},
                 {"reduced_groebner", reduced},
                 {"normal_set", normal},
                 {"identity",
                  {{"G", mb.groebner.size()},
                   {"D", d.size()},
                   {"border", mb.border.size()},
                   {"X", x.size()},
                   {"holds", mb.groebner.size() + x.size() == d.size() + mb.border.size()}}},
                 {"normal_set_in_D", normal_in_d},
                 {"zl_mismatch", zl_mismatch}};
  emit(c, io::dump(out));
  return 0;
}

int cmd_evalcount(const Common& c, std::size_t n, std::size_t d, const std::string& rows,
                  const std::string& cols, int row_offset) {
  const auto e = evaluation_counts(n, parse_family(rows), parse_family(cols), d, row_offset);
  const Json out{{"n", n},         {"d", d},
                 {"rows", rows},   {"cols", cols},
                 {"row_offset", row_offset},
                 {"hankel", e.hankel}, {"toeplitz", e.toeplitz}};
  emit(c, io::dump(out));
  return 0;
}

LatticeIndex parse_direction(const std::string& text) {
  LatticeIndex a;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "direction must look like 1,1");
    }
  }
  return a;
}

int cmd_project(const Common& c, const Source& src, const std::string& direction,
                std::size_t count) {
  LoadedOracle lo = load_oracle(src);
  const LatticeIndex alpha = parse_direction(direction);
  if (alpha.size() != lo.oracle->n()) {
    throw Error(Errc::DimensionMismatch, "direction length differs from n");
  }
  SampleOracle g = projection_oracle(*lo.oracle, alpha);
  std::vector<LatticeIndex> idx;
  for (std::size_t k = 0; k < count; ++k) idx.push_back({static_cast<int>(k)});
  std::vector<LatticeIndex> needed;
  for (const auto& k : idx) {
    LatticeIndex t(alpha.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = k[0] * alpha[i];
    needed.push_back(t);
  }
  lo.oracle->require(needed);
  emit(c, io::dump(io::to_json(io::tabulate(g, idx))));
  return 0;
}

int cmd_verify(const Common& c, const std::string& result, const Source& src,
               const StructureOpts& so, const std::string& support_file) {
  const PronyOutcome o = io::outcome_from_json(io::read_json_file(result));
  LoadedOracle lo = load_oracle(src);
  const PronyStructureSpec spec = make_structure(so, lo.oracle->n());
  if (o.support.size() && o.support.n() != spec.n) {
    throw Error(Errc::DimensionMismatch, "result and samples differ in n");
  }
  const PointSet known = support_file.empty()
                             ? o.support
                             : io::point_set_from_json(io::read_json_file(support_file));
  Json out = Json::object();
  const auto bad = verify_model(spec, *lo.oracle, o.degree_used, o.support, o.coefficients,
                                c.seed, PipelineOptions().extra_checks);
  out["model_reproduces_samples"] = !bad;
  if (bad) out["failing_index"] = *bad;
  const ConditionReport r = verify_prony_conditions(spec, *lo.oracle, known, o.degree_used);
  out["conditions"] = to_string(r.verdict);
  out["zero_locus_matches"] = r.zero_locus_matches;
  out["vanishing_contained"] = r.vanishing_contained;
  if (r.zero_locus) out["zero_locus"] = io::to_json(*r.zero_locus)["points"];
  out["verdict"] = bad ? std::string("VerificationFailed") : to_string(r.verdict);
  emit(c, io::dump(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse reconstruction from samples via structured kernels"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "seed for randomized steps")->capture_default_str();
  app.add_option("-o,--output", common.output, "write JSON here instead of stdout");

  Source src;
  StructureOpts so;
  std::optional<std::size_t> rank_bound;
  bool automatic = false;
  std::size_t max_d = 10;
  std::optional<std::size_t> degree;
  std::string field = "exact";
  std::optional<double> tol;
  auto* rec = app.add_subcommand("reconstruct", "recover support and coefficients");
  add_source(rec, src);
  add_structure(rec, so);
  rec->add_option("--rank-bound", rank_bound, "upper bound on the number of terms");
  rec->add_flag("--auto", automatic, "search the degree by rank stabilization");
  rec->add_option("--max-d", max_d, "largest degree tried by --auto")->capture_default_str();
  rec->add_option("--degree", degree, "fixed degree (float mode: column degree)");
  rec->add_option("--field", field, "exact or float")->capture_default_str();
  rec->add_option("--tol", tol, "float mode: largest accepted relative residual");

  std::string points;
  std::string order = "degrevlex";
  std::string family = "total";
  std::size_t mdeg = 1;
  auto* moe = app.add_subcommand("moeller", "Groebner basis of the ideal of a point set");
  moe->add_option("--points", points, "point set file")->required();
  moe->add_option("--order", order, "lex, grlex, degrevlex")->capture_default_str();
  moe->add_option("--family", family, "degree set family")->capture_default_str();
  moe->add_option("--degree", mdeg, "degree set order d")->capture_default_str();

  std::size_t en = 2;
  std::size_t ed = 2;
  std::string erows = "total";
  std::string ecols = "total";
  int eoff = 0;
  auto* ev = app.add_subcommand("evalcount", "Hankel and Toeplitz evaluation counts");
  ev->add_option("--n", en, "variables")->capture_default_str();
  ev->add_option("--d", ed, "degree")->capture_default_str();
  ev->add_option("--rows", erows, "row family")->capture_default_str();
  ev->add_option("--cols", ecols, "column family")->capture_default_str();
  ev->add_option("--row-offset", eoff, "rows are the row family at d + offset")
      ->capture_default_str();

  Source psrc;
  std::string direction;
  std::size_t count = 10;
  auto* proj = app.add_subcommand("project", "univariate samples k -> f(k alpha)");
  add_source(proj, psrc);
  proj->add_option("--direction", direction, "alpha, e.g. 1,1")->required();
  proj->add_option("--count", count, "number of samples k = 0..count-1")->capture_default_str();

  Source vsrc;
  StructureOpts vso;
  std::string result;
  std::string support_file;
  auto* ver = app.add_subcommand("verify", "check a result and both kernel conditions");
  add_source(ver, vsrc);
  add_structure(ver, vso);
  ver->add_option("--result", result, "result file from reconstruct")->required();
  ver->add_option("--support", support_file, "known support point set file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*rec) return cmd_reconstruct(common, src, so, rank_bound, automatic, max_d, degree, field, tol);
    if (*moe) return cmd_moeller(common, points, order, family, mdeg);
    if (*ev) return cmd_evalcount(common, en, ed, erows, ecols, eoff);
    if (*proj) return cmd_project(common, psrc, direction, count);
    if (*ver) return cmd_verify(common, result, vsrc, vso, support_file);
  } catch (const MissingSampleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io::exit_code(e.code());
  }
  return 1;
}
