#include "prony/zerodim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <set>

namespace prony {

namespace {

// Dense univariate polynomials over Q, ascending coefficients, no trailing
// zeros (the zero polynomial is empty).
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Rational eval(const UPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * Rational(static_cast<long>(i)));
  }
  trim(d);
  return d;
}

// a = q b + r with deg r < deg b. Precondition: b nonzero.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

UPoly monic_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational inv = a.back().inv();
    for (auto& c : a) c *= inv;
  }
  return a;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = eval(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq = {p, derivative(p)};
  while (!seq.back().empty()) {
    UPoly q, r;
    divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

// Integer roots of a monic integer polynomial q within [lo, hi].
void integer_roots(const UPoly& q, const std::vector<UPoly>& seq,
                   const mpz_class& lo, const mpz_class& hi,
                   std::vector<mpz_class>& out) {
  const Rational half(mpz_class(1), mpz_class(2));
  const int count = sign_variations(seq, Rational(lo) - half) -
                    sign_variations(seq, Rational(hi) + half);
  if (count == 0) return;
  if (lo == hi) {
    if (eval(q, Rational(lo)).is_zero()) out.push_back(lo);
    return;
  }
  mpz_class mid;
  mpz_class sum = lo + hi;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
  integer_roots(q, seq, lo, mid, out);
  integer_roots(q, seq, mid + 1, hi, out);
}

Matrix combination(const std::vector<Matrix>& mats,
                   const std::vector<long>& coeffs) {
  Matrix acc(mats.front().rows(), mats.front().cols());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Rational c(coeffs[i]);
    for (std::size_t r = 0; r < acc.rows(); ++r) {
      for (std::size_t s = 0; s < acc.cols(); ++s) {
        if (!mats[i](r, s).is_zero()) acc(r, s) += c * mats[i](r, s);
      }
    }
  }
  return acc;
}

std::vector<long> draw_coefficients(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, kCombinationBound);
  std::vector<long> c(n);
  for (auto& v : c) v = dist(rng);
  return c;
}

bool satisfies(const std::vector<Poly>& relations, const Point& x) {
  return std::all_of(relations.begin(), relations.end(),
                     [&x](const Poly& p) { return p.eval(x).is_zero(); });
}

}  // namespace

std::size_t QuotientModel::index_of(const Exponent& m) const {
  auto it = std::lower_bound(
      normal_set.begin(), normal_set.end(), m,
      [this](const Exponent& a, const Exponent& b) { return order.less(a, b); });
  if (it == normal_set.end() || *it != m) {
    throw Error(Errc::InvalidInput, "monomial not in the normal set");
  }
  return static_cast<std::size_t>(it - normal_set.begin());
}

QuotientModel quotient_model(const VanishingSpace& v, const MonomialOrder& ord) {
  QuotientModel model;
  model.n = v.n;
  model.order = ord;
  model.relations = v.basis;

  std::vector<Exponent> desc = v.degree_set;
  ord.sort(desc);
  std::reverse(desc.begin(), desc.end());

  Matrix coeffs(v.basis.size(), desc.size());
  for (std::size_t i = 0; i < v.basis.size(); ++i) {
    for (const auto& [e, c] : v.basis[i].terms()) {
      auto it = std::find(desc.begin(), desc.end(), e);
      if (it == desc.end()) {
        throw Error(Errc::DimensionMismatch,
                    "relation has a term outside the degree set");
      }
      coeffs(i, static_cast<std::size_t>(it - desc.begin())) = c;
    }
  }
  const RrefResult rr = rref(coeffs);

  std::vector<bool> is_lead(desc.size(), false);
  for (auto p : rr.pivots) is_lead[p] = true;
  const Exponent one = zero_exponent(v.n);
  for (auto p : rr.pivots) {
    // A nonzero constant in the span: the locus is empty.
    if (desc[p] == one) return model;
  }
  for (std::size_t j = desc.size(); j-- > 0;) {
    if (!is_lead[j]) model.normal_set.push_back(desc[j]);
  }
  if (model.normal_set.empty()) {
    throw Error(Errc::DegreeInsufficient, "degree set lacks the monomial 1");
  }
  if (!is_order_ideal(model.normal_set)) {
    throw Error(Errc::DegreeInsufficient,
                "normal set is not closed under divisibility");
  }

  const std::size_t r = model.normal_set.size();
  for (std::size_t k = 0; k < r; ++k) {
    Vector unit(r, Rational(0));
    unit[k] = Rational(1);
    model.reduction.emplace(model.normal_set[k], std::move(unit));
  }
  for (std::size_t row = 0; row < rr.rank; ++row) {
    const std::size_t p = rr.pivots[row];
    Vector red(r, Rational(0));
    for (std::size_t j = p + 1; j < desc.size(); ++j) {
      if (is_lead[j] || rr.r(row, j).is_zero()) continue;
      red[model.index_of(desc[j])] = -rr.r(row, j);
    }
    model.reduction.emplace(desc[p], std::move(red));
  }

  for (std::size_t i = 0; i < v.n; ++i) {
    Matrix m(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      Exponent t = model.normal_set[k];
      ++t[i];
      auto it = model.reduction.find(t);
      if (it == model.reduction.end()) {
        throw Error(Errc::DegreeInsufficient,
                    "border monomial " + to_string(t) +
                        " lies outside the degree set");
      }
      for (std::size_t s = 0; s < r; ++s) m(s, k) = it->second[s];
    }
    model.mult.push_back(std::move(m));
  }
  // Drop reductions of monomials that are not on the border of N.
  std::set<Exponent> keep(model.normal_set.begin(), model.normal_set.end());
  for (const auto& m : model.normal_set) {
    for (std::size_t i = 0; i < v.n; ++i) {
      Exponent t = m;
      ++t[i];
      keep.insert(t);
    }
  }
  for (auto it = model.reduction.begin(); it != model.reduction.end();) {
    it = keep.count(it->first) ? std::next(it) : model.reduction.erase(it);
  }

  for (std::size_t i = 0; i < v.n; ++i) {
    for (std::size_t j = i + 1; j < v.n; ++j) {
      if (!(model.mult[i] * model.mult[j] == model.mult[j] * model.mult[i])) {
        throw Error(Errc::NotZeroDimensional,
                    "multiplication matrices do not commute");
      }
    }
  }
  return model;
}

RationalRoots rational_roots(const Poly& p) {
  UPoly c = univariate_coeffs(p);
  trim(c);
  if (c.empty()) throw Error(Errc::InvalidInput, "roots of the zero polynomial");
  RationalRoots out;
  const std::size_t degree = c.size() - 1;
  if (degree == 0) {
    out.fully_split = true;
    return out;
  }

  UPoly sq, rem;
  divmod(c, monic_gcd(c, derivative(c)), sq, rem);

  // Integer coefficients a_0..a_k of the squarefree part.
  mpz_class den = 1;
  for (const auto& v : sq) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.value().get_den_mpz_t());
  }
  std::vector<mpz_class> a;
  for (const auto& v : sq) a.push_back(v.numerator() * (den / v.denominator()));
  const std::size_t k = a.size() - 1;
  const mpz_class lead = a[k];

  // y = lead x turns lead^{k-1} S(y / lead) into a monic integer polynomial.
  UPoly q(k + 1);
  mpz_class bound = 0;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(),
               static_cast<unsigned long>(k - 1 - i));
    mpz_class b = a[i] * scale;
    q[i] = Rational(b);
    if (abs(b) > bound) bound = abs(b);
  }
  q[k] = Rational(1);
  bound += 1;

  std::vector<mpz_class> ys;
  integer_roots(q, sturm_sequence(q), -bound, bound, ys);

  for (const auto& y : ys) {
    const Rational x(y, lead);
    std::size_t mult = 0;
    UPoly rest = c;
    const UPoly lin = {-x, Rational(1)};
    for (;;) {
      UPoly quo, r;
      divmod(rest, lin, quo, r);
      if (!r.empty()) break;
      ++mult;
      rest = std::move(quo);
    }
    out.roots.push_back(x);
    out.multiplicities.push_back(mult);
  }
  std::vector<std::size_t> order(out.roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&out](std::size_t i, std::size_t j) {
    return out.roots[i] < out.roots[j];
  });
  RationalRoots sorted;
  std::size_t total = 0;
  for (auto i : order) {
    sorted.roots.push_back(out.roots[i]);
    sorted.multiplicities.push_back(out.multiplicities[i]);
    total += out.multiplicities[i];
  }
  sorted.fully_split = total == degree;
  return sorted;
}

ZeroLocus zero_locus_exact(const QuotientModel& model, std::mt19937_64& rng,
                           int redraws) {
  ZeroLocus out;
  out.points = PointSet(model.n);
  if (model.normal_set.empty()) return out;
  const std::size_t r = model.normal_set.size();
  const std::size_t one = model.index_of(zero_exponent(model.n));

  for (int attempt = 0; attempt <= redraws; ++attempt) {
    const Matrix mc = combination(model.mult, draw_coefficients(model.n, rng));
    const RationalRoots rr = rational_roots(char_poly(mc));
    if (!rr.fully_split) {
      throw Error(Errc::IrrationalSpectrum,
                  "characteristic polynomial has non-rational roots");
    }
    const bool simple =
        std::all_of(rr.multiplicities.begin(), rr.multiplicities.end(),
                    [](std::size_t m) { return m == 1; });
    if (!simple) continue;

    const Matrix mct = mc.transpose();
    std::vector<Point> points;
    for (const auto& lambda : rr.roots) {
      Matrix shifted = mct;
      for (std::size_t i = 0; i < r; ++i) shifted(i, i) -= lambda;
      const auto ker = kernel_basis(shifted);
      if (ker.size() != 1 || ker[0][one].is_zero()) {
        throw Error(Errc::NotZeroDimensional,
                    "eigenvector is not an evaluation functional");
      }
      const Rational scale = ker[0][one].inv();
      Point x(model.n, Rational(0));
      for (std::size_t i = 0; i < model.n; ++i) {
        for (std::size_t m = 0; m < r; ++m) {
          if (!model.mult[i](m, one).is_zero()) {
            x[i] += model.mult[i](m, one) * ker[0][m] * scale;
          }
        }
      }
      if (satisfies(model.relations, x)) points.push_back(std::move(x));
    }
    out.points = PointSet(model.n, std::move(points));
    return out;
  }
  throw Error(Errc::RepeatedEigenvalues,
              "eigenvalue collision persisted after re-randomization");
}

RationalZeroSet rational_zero_set(const QuotientModel& model) {
  RationalZeroSet out;
  out.points = PointSet(model.n);
  if (model.normal_set.empty()) return out;
  std::vector<std::vector<Rational>> coords;
  for (const auto& m : model.mult) {
    const RationalRoots rr = rational_roots(char_poly(m));
    if (!rr.fully_split) out.complete = false;
    coords.push_back(rr.roots);
  }
  std::vector<Point> found;
  Point cur(model.n);
  // Cartesian product of per-coordinate eigenvalues, filtered by relations.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == model.n) {
      if (satisfies(model.relations, cur)) found.push_back(cur);
      return;
    }
    for (const auto& v : coords[i]) {
      cur[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
  out.points = PointSet(model.n, std::move(found));
  return out;
}

FloatModel to_float(const QuotientModel& model) {
  FloatModel f;
  f.n = model.n;
  f.normal_set = model.normal_set;
  const auto r = static_cast<Eigen::Index>(model.normal_set.size());
  for (const auto& m : model.mult) {
    Eigen::MatrixXd d(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < r; ++j) {
        d(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                      .to_double();
      }
    }
    f.mult.push_back(std::move(d));
  }
  return f;
}

FloatZeroLocus zero_locus_float(const FloatModel& model, double tol,
                                std::mt19937_64& rng) {
  FloatZeroLocus out;
  if (model.normal_set.empty()) return out;
  const auto c = draw_coefficients(model.n, rng);
  const Eigen::Index r = model.mult.front().rows();
  Eigen::MatrixXd mc = Eigen::MatrixXd::Zero(r, r);
  for (std::size_t i = 0; i < model.n; ++i) {
    mc += static_cast<double>(c[i]) * model.mult[i];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(mc);
  if (es.info() != Eigen::Success) {
    throw Error(Errc::EigenFailure, "eigen-decomposition did not converge");
  }
  const Eigen::MatrixXcd u = es.eigenvectors();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(u);
  if (!std::isfinite(std::abs(lu.determinant())) ||
      std::abs(lu.determinant()) == 0.0) {
    throw Error(Errc::EigenFailure, "eigenvector basis is singular");
  }
  std::vector<Eigen::MatrixXcd> diag;
  for (const auto& m : model.mult) {
    diag.push_back(lu.solve(m.cast<std::complex<double>>() * u));
  }
  for (Eigen::Index k = 0; k < r; ++k) {
    std::vector<double> x(model.n);
    bool real = true;
    for (std::size_t i = 0; i < model.n; ++i) {
      const std::complex<double> z = diag[i](k, k);
      if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z))) real = false;
      x[i] = z.real();
    }
    if (real) out.points.push_back(std::move(x));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

FloatZeroLocus zero_locus_float(const QuotientModel& model, double tol,
                                std::mt19937_64& rng, double max_residual) {
  FloatZeroLocus out = zero_locus_float(to_float(model), tol, rng);
  for (const auto& x : out.points) {
    for (const auto& p : model.relations) {
      double value = 0.0;
      double scale = 0.0;
      for (const auto& [e, c] : p.terms()) {
        double term = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], e[i]);
        value += term;
        scale += std::abs(term);
      }
      if (scale > 0) out.residual = std::max(out.residual, std::abs(value) / scale);
    }
  }
  if (out.residual > max_residual) {
    throw Error(Errc::ResidualTooLarge, "relations not satisfied at the points");
  }
  return out;
}

}  // namespace prony
