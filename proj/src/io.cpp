#include "prony/io.hpp"

#include <fstream>
#include <sstream>

namespace prony::io {

int exit_code(Errc code) {
  switch (code) {
    case Errc::MalformedLiteral:
    case Errc::ZeroDenominator:
    case Errc::NonFinite:
    case Errc::BadBase:
    case Errc::DimensionMismatch:
    case Errc::NotOrderIdeal:
    case Errc::DomainMismatch:
    case Errc::SpecInvalid:
    case Errc::NonCommuting:
    case Errc::NotGroebner:
    case Errc::MissingSample:
    case Errc::ZeroDirection:
    case Errc::InvalidInput:
      return 1;
    default:
      return 2;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::InvalidInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("'") + key + "' must be a natural number");
  return v.get<std::size_t>();
}

Domain domain_from(const std::string& s) {
  if (s == "nat") return Domain::nat;
  if (s == "int") return Domain::integer;
  bad("domain must be 'nat' or 'int', got '" + s + "'");
}

LatticeIndex index_from_json(const Json& j) {
  if (!j.is_array()) bad("index must be an array of integers");
  LatticeIndex out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("index must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<double> doubles_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) bad("expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  Vector out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json exponents_to_json(const std::vector<Exponent>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(to_json(e));
  return out;
}

}  // namespace

Exponent parse_exponent_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') {
    bad("exponent key '" + key + "' must look like (2,0)");
  }
  Exponent e;
  std::stringstream ss(key.substr(1, key.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      e.push_back(v);
    } catch (const std::exception&) {
      bad("exponent key '" + key + "' has a bad entry");
    }
  }
  return e;
}

std::string exponent_key(const Exponent& e) { return to_string(e); }

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational values are strings like \"3/4\"");
}

Json to_json(const Exponent& e) { return Json(e); }

Json to_json(const Point& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(to_json(v));
  return out;
}

Point point_from_json(const Json& j) { return vector_from_json(j); }

Json to_json(const PointSet& x) {
  Json pts = Json::array();
  for (const auto& p : x.points()) pts.push_back(to_json(p));
  return Json{{"n", x.n()}, {"points", pts}};
}

PointSet point_set_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  std::vector<Point> pts;
  const Json& arr = field(j, "points");
  if (!arr.is_array()) bad("'points' must be an array");
  for (const auto& p : arr) pts.push_back(point_from_json(p));
  return PointSet(n, std::move(pts));
}

Json poly_to_json(const Poly& p) {
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) terms[exponent_key(e)] = to_json(c);
  return Json{{"terms", terms}};
}

Poly poly_from_json(const Json& j, std::size_t n) {
  const Json& terms = field(j, "terms");
  if (!terms.is_object()) bad("'terms' must map exponent keys to rationals");
  Poly p(n);
  for (const auto& [key, value] : terms.items()) {
    const Exponent e = parse_exponent_key(key);
    if (e.size() != n) bad("exponent " + key + " does not have " + std::to_string(n) + " entries");
    p.add_term(e, rational_from_json(value));
  }
  return p;
}

Json to_json(const AlgebraicSet& y) {
  Json gens = Json::array();
  for (const auto& g : y.generators()) gens.push_back(poly_to_json(g));
  return Json{{"n", y.n()}, {"order", y.order().name()}, {"generators", gens}};
}

AlgebraicSet algebraic_set_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const MonomialOrder ord = j.contains("order")
                                ? MonomialOrder::parse(j.at("order").get<std::string>())
                                : MonomialOrder();
  std::vector<Poly> gens;
  for (const auto& g : field(j, "generators")) gens.push_back(poly_from_json(g, n));
  return AlgebraicSet(n, std::move(gens), ord);
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) bad("matrix rows differ in length");
  }
  return Matrix::from_rows(rows);
}

Json to_json(const SampleTable& t) {
  Json samples = Json::array();
  for (const auto& [idx, v] : t.values) {
    samples.push_back(Json{{"index", idx}, {"value", to_json(v)}});
  }
  return Json{{"n", t.n},
              {"domain", to_string(t.domain)},
              {"field", "rational"},
              {"samples", samples}};
}

SampleTable sample_table_from_json(const Json& j) {
  SampleTable t;
  t.n = size_field(j, "n");
  t.domain = j.contains("domain") ? domain_from(j.at("domain").get<std::string>())
                                  : Domain::nat;
  if (j.contains("field") && j.at("field") != "rational") {
    bad("exact sample files use \"field\": \"rational\"");
  }
  for (const auto& s : field(j, "samples")) {
    LatticeIndex idx = index_from_json(field(s, "index"));
    if (idx.size() != t.n) bad("sample index has the wrong length");
    if (t.domain == Domain::nat && !is_natural(idx)) {
      bad("negative sample index in an N^n sample file");
    }
    if (!t.values.emplace(std::move(idx), rational_from_json(field(s, "value"))).second) {
      bad("duplicate sample index");
    }
  }
  return t;
}

SampleTable tabulate(SampleOracle& f, const std::vector<LatticeIndex>& indices) {
  SampleTable t;
  t.n = f.n();
  t.domain = f.domain();
  for (const auto& a : indices) t.values.emplace(a, f(a));
  return t;
}

Json to_json(const FloatSampleTable& t) {
  Json samples = Json::array();
  for (const auto& [idx, v] : t.values) {
    samples.push_back(Json{{"index", idx}, {"value", v}});
  }
  return Json{{"n", t.n},
              {"domain", to_string(t.domain)},
              {"field", "float"},
              {"samples", samples}};
}

FloatSampleTable float_sample_table_from_json(const Json& j) {
  FloatSampleTable t;
  t.n = size_field(j, "n");
  t.domain = j.contains("domain") ? domain_from(j.at("domain").get<std::string>())
                                  : Domain::integer;
  for (const auto& s : field(j, "samples")) {
    LatticeIndex idx = index_from_json(field(s, "index"));
    if (idx.size() != t.n) bad("sample index has the wrong length");
    const Json& v = field(s, "value");
    if (!v.is_number()) bad("float sample values are numbers");
    t.values.emplace(std::move(idx), Approx(v.get<double>()).value());
  }
  return t;
}

Json generator_to_json(const GeneratorSpec& g) {
  return std::visit(
      [](const auto& s) -> Json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ExpSumSpec>) {
          Json terms = Json::array();
          for (const auto& t : s.terms) {
            terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"base", to_json(t.base)}});
          }
          return Json{{"kind", "expsum"}, {"n", s.n}, {"domain", to_string(s.domain)},
                      {"terms", terms}};
        } else if constexpr (std::is_same_v<S, ChebSumSpec>) {
          Json terms = Json::array();
          for (const auto& t : s.terms) {
            terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"base", to_json(t.base)}});
          }
          return Json{{"kind", "chebsum"}, {"terms", terms}};
        } else if constexpr (std::is_same_v<S, ChebPolySpec>) {
          Json coeffs = Json::object();
          for (const auto& [k, c] : s.coeffs) coeffs[std::to_string(k)] = to_json(c);
          return Json{{"kind", "chebpoly"}, {"coeffs", coeffs}, {"base", to_json(s.base)}};
        } else if constexpr (std::is_same_v<S, PolySpec>) {
          Json out{{"kind", "polynomial"}, {"n", s.p.nvars()}};
          out["terms"] = poly_to_json(s.p)["terms"];
          if (!s.bases.empty()) out["bases"] = vector_to_json(s.bases);
          if (s.kronecker_base) out["kronecker"] = s.kronecker_base;
          return out;
        } else if constexpr (std::is_same_v<S, GaussianSpec>) {
          Json terms = Json::array();
          for (const auto& t : s.terms) {
            terms.push_back(Json{{"coeff", t.coeff}, {"center", t.center}});
          }
          return Json{{"kind", "gaussian"}, {"n", s.n}, {"A", matrix_to_json(s.a)},
                      {"terms", terms}};
        } else {
          Json phi = Json::array();
          for (const auto& m : s.phi) phi.push_back(matrix_to_json(m));
          return Json{{"kind", "operator"}, {"phi", phi}, {"delta", vector_to_json(s.delta)},
                      {"f", vector_to_json(s.start)}};
        }
      },
      g);
}

GeneratorSpec generator_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  GeneratorSpec out;
  if (kind == "expsum") {
    ExpSumSpec s;
    s.n = size_field(j, "n");
    s.domain = j.contains("domain") ? domain_from(j.at("domain").get<std::string>())
                                    : Domain::nat;
    for (const auto& t : field(j, "terms")) {
      s.terms.push_back({rational_from_json(field(t, "coeff")),
                         point_from_json(field(t, "base"))});
    }
    out = s;
  } else if (kind == "chebsum") {
    ChebSumSpec s;
    for (const auto& t : field(j, "terms")) {
      s.terms.push_back({rational_from_json(field(t, "coeff")),
                         rational_from_json(field(t, "base"))});
    }
    out = s;
  } else if (kind == "chebpoly") {
    ChebPolySpec s;
    for (const auto& [k, c] : field(j, "coeffs").items()) {
      std::size_t used = 0;
      std::size_t idx = 0;
      try {
        idx = std::stoul(k, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != k.size() || k.empty()) bad("Chebyshev index '" + k + "' is not a natural");
      s.coeffs[idx] = rational_from_json(c);
    }
    if (j.contains("base")) s.base = rational_from_json(j.at("base"));
    out = s;
  } else if (kind == "polynomial") {
    PolySpec s;
    const std::size_t n = size_field(j, "n");
    s.p = poly_from_json(j, n);
    if (j.contains("bases")) s.bases = vector_from_json(j.at("bases"));
    if (j.contains("kronecker")) s.kronecker_base = size_field(j, "kronecker");
    out = s;
  } else if (kind == "gaussian") {
    GaussianSpec s;
    s.n = size_field(j, "n");
    s.a = matrix_from_json(field(j, "A"));
    for (const auto& t : field(j, "terms")) {
      const Json& c = field(t, "coeff");
      if (!c.is_number()) bad("Gaussian coefficients are numbers");
      s.terms.push_back({c.get<double>(), doubles_from_json(field(t, "center"))});
    }
    out = s;
  } else if (kind == "operator") {
    OperatorSpec s;
    for (const auto& m : field(j, "phi")) s.phi.push_back(matrix_from_json(m));
    s.delta = vector_from_json(field(j, "delta"));
    s.start = vector_from_json(field(j, "f"));
    out = s;
  } else {
    bad("unknown generator kind '" + kind + "'");
  }
  validate(out);
  return out;
}

Json to_json(const PronyOutcome& o) {
  Json support = Json::array();
  for (const auto& p : o.support.points()) support.push_back(to_json(p));
  return Json{{"support", support},
              {"coefficients", vector_to_json(o.coefficients)},
              {"degree_used", o.degree_used},
              {"mode", to_string(o.mode.kind)},
              {"exact", o.exact},
              {"evaluations", o.evaluations},
              {"normal_set", exponents_to_json(o.normal_set)}};
}

PronyOutcome outcome_from_json(const Json& j) {
  PronyOutcome o;
  std::vector<Point> pts;
  for (const auto& p : field(j, "support")) pts.push_back(point_from_json(p));
  const std::size_t n = pts.empty() ? (j.contains("n") ? size_field(j, "n") : 1)
                                    : pts.front().size();
  o.support = PointSet(n, std::move(pts));
  o.coefficients = vector_from_json(field(j, "coefficients"));
  if (o.coefficients.size() != o.support.size()) {
    bad("support and coefficients differ in length");
  }
  o.degree_used = size_field(j, "degree_used");
  const std::string mode = field(j, "mode").get<std::string>();
  if (mode == "rank_bound") {
    o.mode.kind = ModeKind::rank_bound;
  } else if (mode == "fixed") {
    o.mode.kind = ModeKind::fixed;
  } else if (mode == "stabilized") {
    o.mode.kind = ModeKind::automatic;
  } else {
    bad("unknown mode '" + mode + "'");
  }
  o.exact = field(j, "exact").get<bool>();
  o.evaluations = size_field(j, "evaluations");
  if (j.contains("normal_set")) {
    for (const auto& e : j.at("normal_set")) o.normal_set.push_back(index_from_json(e));
  }
  return o;
}

Json to_json(const FloatOutcome& o) {
  return Json{{"support", o.support},
              {"coefficients", o.coefficients},
              {"degree_used", o.degree_used},
              {"mode", "rank_bound"},
              {"exact", false},
              {"evaluations", o.evaluations},
              {"residual", o.residual},
              {"normal_set", exponents_to_json(o.normal_set)}};
}

PronyStructureSpec fixed_structure_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Matrix m = matrix_from_json(field(j, "matrix"));
  std::vector<Exponent> cols;
  for (const auto& c : field(j, "columns")) {
    Exponent e = index_from_json(c);
    if (e.size() != n || !is_natural(e)) bad("column labels are exponents in N^n");
    cols.push_back(std::move(e));
  }
  if (cols.size() != m.cols()) bad("column labels do not match the matrix width");
  return fixed_structure(n, m, std::move(cols));
}

}  // namespace prony::io
