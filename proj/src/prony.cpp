#include "prony/prony.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace prony {

std::vector<Exponent> PronyStructureSpec::row_set(std::size_t d) const {
  const long dl = static_cast<long>(d) + row_offset;
  return family_members(rows, static_cast<std::size_t>(std::max(dl, 0L)), order);
}

std::vector<Exponent> PronyStructureSpec::column_set(std::size_t d) const {
  if (columns) return columns(d);
  return family_members(cols, d, order);
}

VanishingSpace PronyStructureSpec::relation_space(
    std::size_t d, const std::vector<Poly>& kernel) const {
  if (relations) return relations(d, kernel);
  VanishingSpace v;
  v.n = n;
  v.degree_set = column_set(d);
  order.sort(v.degree_set);
  v.basis = kernel;
  return v;
}

Rational PronyStructureSpec::value(const Point& x, const Exponent& g) const {
  if (basis_value) return basis_value(x, g);
  return monomial_value(x, g);
}

std::string to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::rank_bound: return "rank_bound";
    case ModeKind::fixed: return "fixed";
    case ModeKind::automatic: return "stabilized";
  }
  return "rank_bound";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ok: return "ok";
    case Verdict::zl_mismatch: return "zl_mismatch";
    case Verdict::vanishing_violation: return "vanishing_violation";
  }
  return "ok";
}

std::vector<Poly> kernel_polys(const PronyStructureSpec& spec, std::size_t d,
                               SampleOracle& f) {
  const Matrix p = spec.builder(d, f);
  const std::vector<Exponent> cols = spec.column_set(d);
  if (p.cols() != cols.size()) {
    throw Error(Errc::DimensionMismatch,
                "structure matrix width differs from its column set");
  }
  return polys_from_vectors(kernel_basis(p), cols, spec.n);
}

std::vector<Rational> coefficient_solve(const PronyStructureSpec& spec,
                                        const PointSet& support,
                                        SampleOracle& f,
                                        const std::vector<Exponent>& normal_set) {
  if (normal_set.size() != support.size()) {
    throw Error(Errc::DimensionMismatch,
                "normal set and support differ in size");
  }
  const std::size_t r = support.size();
  f.require(normal_set);
  Matrix a(r, r);
  Vector b(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      a(i, k) = spec.value(support[k], normal_set[i]);
    }
    b[i] = f(normal_set[i]);
  }
  return solve_square(a, b);
}

std::vector<Rational> coefficient_solve(const PointSet& support, SampleOracle& f,
                                        const std::vector<Exponent>& normal_set) {
  PronyStructureSpec plain;
  plain.n = support.n();
  return coefficient_solve(plain, support, f, normal_set);
}

std::optional<LatticeIndex> verify_model(const PronyStructureSpec& spec,
                                         SampleOracle& f, std::size_t d,
                                         const PointSet& support,
                                         const std::vector<Rational>& coeffs,
                                         std::uint64_t seed, std::size_t extra) {
  std::vector<LatticeIndex> grid =
      spec.check_indices ? spec.check_indices(d) : spec.column_set(d);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const long span = static_cast<long>(d) + 1;
  std::uniform_int_distribution<long> nat(0, 2 * span);
  std::uniform_int_distribution<long> sym(-span, span);
  for (std::size_t k = 0; k < extra; ++k) {
    LatticeIndex g(spec.n);
    for (auto& c : g) {
      c = static_cast<int>(spec.domain == Domain::nat ? nat(rng) : sym(rng));
    }
    grid.push_back(std::move(g));
  }
  for (const auto& g : grid) {
    if (!f.has(g)) continue;
    Rational model(0);
    for (std::size_t k = 0; k < support.size(); ++k) {
      model += coeffs[k] * spec.value(support[k], g);
    }
    if (model != f(g)) return g;
  }
  return std::nullopt;
}

namespace {

bool recoverable(Errc code) {
  switch (code) {
    case Errc::DegreeInsufficient:
    case Errc::NotZeroDimensional:
    case Errc::IrrationalSpectrum:
    case Errc::RepeatedEigenvalues:
    case Errc::VerificationFailed:
    case Errc::Singular:
      return true;
    default:
      return false;
  }
}

PronyOutcome attempt(const PronyStructureSpec& spec, SampleOracle& f,
                     std::size_t d, Mode mode, const PipelineOptions& opts) {
  const auto kernel = kernel_polys(spec, d, f);
  const QuotientModel model =
      quotient_model(spec.relation_space(d, kernel), spec.order);
  std::mt19937_64 rng(opts.seed);
  const ZeroLocus zl = zero_locus_exact(model, rng, opts.redraws);
  if (zl.points.size() != model.normal_set.size()) {
    throw Error(Errc::VerificationFailed,
                "zero locus is smaller than the normal set");
  }
  const auto coeffs =
      coefficient_solve(spec, zl.points, f, model.normal_set);

  PronyOutcome out;
  out.degree_used = d;
  out.mode = mode;
  out.exact = true;
  out.normal_set = model.normal_set;
  std::vector<Point> kept;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    kept.push_back(zl.points[k]);
    out.coefficients.push_back(coeffs[k]);
  }
  out.support = PointSet(spec.n, std::move(kept));
  out.evaluations = f.count();
  if (auto bad = verify_model(spec, f, d, out.support, out.coefficients,
                              opts.seed, opts.extra_checks)) {
    throw Error(Errc::VerificationFailed,
                "model disagrees with the samples at " + to_string(*bad));
  }
  // Points sorted for a canonical answer, coefficients permuted along.
  std::vector<std::size_t> idx(out.support.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&out](std::size_t a, std::size_t b) {
    return out.support[a] < out.support[b];
  });
  std::vector<Point> pts;
  std::vector<Rational> cs;
  for (auto i : idx) {
    pts.push_back(out.support[i]);
    cs.push_back(out.coefficients[i]);
  }
  out.support = PointSet(spec.n, std::move(pts));
  out.coefficients = std::move(cs);
  return out;
}

std::size_t rank_bound_degree(const PronyStructureSpec& spec, std::size_t r) {
  const auto need = family_members({FamilyKind::total, spec.n}, r);
  for (std::size_t d = 0;; ++d) {
    const bool all = std::all_of(need.begin(), need.end(), [&](const Exponent& e) {
      return family_contains(spec.cols, d, e);
    });
    if (all) return d;
  }
}

}  // namespace

std::size_t estimate_degree(const PronyStructureSpec& spec, SampleOracle& f,
                            Mode mode, const PipelineOptions& opts) {
  switch (mode.kind) {
    case ModeKind::rank_bound: return rank_bound_degree(spec, mode.value);
    case ModeKind::fixed: return mode.value;
    case ModeKind::automatic: return run_pipeline(spec, f, mode, opts).degree_used;
  }
  return mode.value;
}

PronyOutcome run_pipeline(const PronyStructureSpec& spec, SampleOracle& f,
                          Mode mode, const PipelineOptions& opts) {
  if (f.n() != spec.n) {
    throw Error(Errc::DimensionMismatch, "oracle and structure dimensions");
  }
  if (spec.domain == Domain::integer && f.domain() == Domain::nat) {
    throw Error(Errc::DomainMismatch, "structure needs samples on Z^n");
  }
  if (mode.kind != ModeKind::automatic) {
    const std::size_t d = estimate_degree(spec, f, mode, opts);
    return attempt(spec, f, d, mode, opts);
  }

  std::optional<Error> last;
  std::size_t prev_rank = rank(spec.builder(0, f));
  for (std::size_t d = 0; d <= mode.value; ++d) {
    const std::size_t next_rank = rank(spec.builder(d + 1, f));
    const bool stable = prev_rank == next_rank;
    prev_rank = next_rank;
    if (!stable) continue;
    try {
      return attempt(spec, f, d, mode, opts);
    } catch (const MissingSampleError&) {
      throw;
    } catch (const Error& e) {
      if (!recoverable(e.code())) throw;
      last = e;
    }
  }
  if (last && last->code() == Errc::VerificationFailed) {
    throw Error(Errc::VerificationFailed,
                "no degree up to " + std::to_string(mode.value) +
                    " reproduces the samples");
  }
  throw Error(Errc::DegreeExhausted,
              "no admissible degree up to " + std::to_string(mode.value) +
                  (last ? std::string(" (last: ") + last->what() + ")" : ""));
}

namespace {

// Span of the relations and all their multiples by monomials of degree <= k.
VanishingSpace macaulay_extension(const VanishingSpace& v, std::size_t k,
                                  const MonomialOrder& ord) {
  const auto shifts = family_members({FamilyKind::total, v.n}, k, ord);
  VanishingSpace out;
  out.n = v.n;
  out.degree_set = minkowski_sum(v.degree_set, shifts);
  ord.sort(out.degree_set);
  for (const auto& p : v.basis) {
    for (const auto& s : shifts) out.basis.push_back(p.shifted(s));
  }
  return out;
}

}  // namespace

std::optional<RationalZeroSet> extended_zero_set(const VanishingSpace& v,
                                                 const MonomialOrder& ord,
                                                 std::size_t max_extra) {
  for (std::size_t k = 0; k <= max_extra; ++k) {
    try {
      const VanishingSpace ext = k == 0 ? v : macaulay_extension(v, k, ord);
      return rational_zero_set(quotient_model(ext, ord));
    } catch (const Error& e) {
      if (e.code() != Errc::DegreeInsufficient &&
          e.code() != Errc::NotZeroDimensional) {
        throw;
      }
    }
  }
  return std::nullopt;
}

ConditionReport verify_prony_conditions(const PronyStructureSpec& spec,
                                        SampleOracle& f,
                                        const PointSet& known_support,
                                        std::size_t d) {
  ConditionReport report;
  const Matrix p = spec.builder(d, f);
  const std::vector<Exponent> cols = spec.column_set(d);
  const auto kernel = polys_from_vectors(kernel_basis(p), cols, spec.n);

  const auto zs = extended_zero_set(spec.relation_space(d, kernel), spec.order);
  if (zs) report.zero_locus = zs->points;
  report.zero_locus_matches = zs && zs->complete && zs->points == known_support;

  report.vanishing_contained = true;
  for (const auto& q : vanishing_space(cols, known_support, spec.order).basis) {
    Vector c(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) c[j] = q.coeff(cols[j]);
    const Vector image = p * c;
    if (std::any_of(image.begin(), image.end(),
                    [](const Rational& x) { return !x.is_zero(); })) {
      report.vanishing_contained = false;
      break;
    }
  }
  if (!report.zero_locus_matches) {
    report.verdict = Verdict::zl_mismatch;
  } else if (!report.vanishing_contained) {
    report.verdict = Verdict::vanishing_violation;
  }
  return report;
}

// ----------------------------------------------------------- float mode

namespace {

double power(const std::vector<double>& z, const Exponent& g) {
  double v = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) v *= std::pow(z[i], g[i]);
  return v;
}

}  // namespace

FloatOutcome run_float_pipeline(const FloatStructureSpec& spec, FloatOracle& f,
                                std::uint64_t seed, double max_residual) {
  if (f.domain() != Domain::integer) {
    throw Error(Errc::DomainMismatch, "float pipeline samples Z^n");
  }
  const MonomialOrder ord;
  const auto cols = family_members({FamilyKind::total, spec.n}, spec.degree, ord);
  const auto& rows = cols;
  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nc = static_cast<Eigen::Index>(cols.size());

  Eigen::MatrixXd t(nr, nc);
  for (Eigen::Index i = 0; i < nr; ++i) {
    for (Eigen::Index j = 0; j < nc; ++j) {
      t(i, j) = f(sub(cols[static_cast<std::size_t>(j)],
                      rows[static_cast<std::size_t>(i)]));
    }
  }

  FloatOutcome out;
  out.degree_used = spec.degree;
  out.evaluations = f.count();

  // Greedy ascending column selection by relative residual after projection.
  std::vector<std::size_t> chosen;
  Eigen::MatrixXd q(nr, 0);
  for (Eigen::Index j = 0; j < nc && chosen.size() < spec.rank_bound; ++j) {
    Eigen::VectorXd v = t.col(j);
    const double nv = v.norm();
    if (nv == 0.0) continue;
    Eigen::VectorXd r = v - q * (q.transpose() * v);
    r -= q * (q.transpose() * r);
    if (r.norm() / nv <= spec.selection_tol) continue;
    chosen.push_back(static_cast<std::size_t>(j));
    q.conservativeResize(nr, q.cols() + 1);
    q.col(q.cols() - 1) = r / r.norm();
  }
  for (auto j : chosen) out.normal_set.push_back(cols[j]);
  if (out.normal_set.empty()) return out;
  if (!is_order_ideal(out.normal_set)) {
    throw Error(Errc::DegreeInsufficient, "selected columns are not an order ideal");
  }

  const auto r = static_cast<Eigen::Index>(chosen.size());
  Eigen::MatrixXd a(nr, r);
  Eigen::VectorXd scale(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    a.col(k) = t.col(static_cast<Eigen::Index>(chosen[static_cast<std::size_t>(k)]));
    scale(k) = a.col(k).norm();
    a.col(k) /= scale(k);
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  FloatModel model;
  model.n = spec.n;
  model.normal_set = out.normal_set;
  for (std::size_t i = 0; i < spec.n; ++i) {
    Eigen::MatrixXd b(nr, r);
    for (Eigen::Index k = 0; k < r; ++k) {
      Exponent m = out.normal_set[static_cast<std::size_t>(k)];
      ++m[i];
      auto it = std::find(cols.begin(), cols.end(), m);
      if (it == cols.end()) {
        throw Error(Errc::DegreeInsufficient,
                    "border monomial " + to_string(m) + " outside the columns");
      }
      b.col(k) = t.col(static_cast<Eigen::Index>(it - cols.begin()));
    }
    Eigen::MatrixXd m = cod.solve(b);
    for (Eigen::Index k = 0; k < r; ++k) m.row(k) /= scale(k);
    model.mult.push_back(std::move(m));
  }
  std::mt19937_64 rng(seed);
  const FloatZeroLocus zl = zero_locus_float(model, spec.imag_tol, rng);
  out.support = zl.points;

  // Least squares for the coefficients over every sampled index, rows
  // equilibrated by the largest label power.
  std::set<Exponent> sampled;
  for (const auto& b : cols) {
    for (const auto& a2 : rows) sampled.insert(sub(b, a2));
  }
  const auto ns = static_cast<Eigen::Index>(sampled.size());
  const auto np = static_cast<Eigen::Index>(out.support.size());
  Eigen::MatrixXd v(ns, np);
  Eigen::VectorXd rhs(ns);
  Eigen::Index row = 0;
  for (const auto& g : sampled) {
    double w = 0.0;
    for (Eigen::Index k = 0; k < np; ++k) {
      v(row, k) = power(out.support[static_cast<std::size_t>(k)], g);
      w = std::max(w, std::abs(v(row, k)));
    }
    rhs(row) = f(g);
    if (w > 0.0) {
      v.row(row) /= w;
      rhs(row) /= w;
    }
    ++row;
  }
  const Eigen::VectorXd mu = v.colPivHouseholderQr().solve(rhs);
  out.coefficients.assign(mu.data(), mu.data() + mu.size());

  for (const auto& g : sampled) {
    double model_value = 0.0, mag = 0.0;
    for (std::size_t k = 0; k < out.support.size(); ++k) {
      const double term = out.coefficients[k] * power(out.support[k], g);
      model_value += term;
      mag += std::abs(term);
    }
    const double sample = f(g);
    const double denom = std::max({mag, std::abs(sample), 1e-300});
    out.residual = std::max(out.residual, std::abs(model_value - sample) / denom);
  }
  if (out.residual > max_residual) {
    throw Error(Errc::ResidualTooLarge, "float model misses the samples");
  }
  return out;
}

}  // namespace prony
