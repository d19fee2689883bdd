#include "prony/vanish.hpp"

#include <algorithm>
#include <set>

namespace prony {

PointSet::PointSet(std::size_t n, std::vector<Point> points)
    : n_(n), points_(std::move(points)) {
  std::set<Point> seen;
  for (const auto& p : points_) {
    if (p.size() != n_) {
      throw Error(Errc::DimensionMismatch, "point has wrong dimension");
    }
    if (!seen.insert(p).second) {
      throw Error(Errc::InvalidInput, "duplicate point in point set");
    }
  }
}

bool PointSet::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::sorted() const {
  PointSet s(n_);
  s.points_ = points_;
  std::sort(s.points_.begin(), s.points_.end());
  return s;
}

Matrix vandermonde(const std::vector<Exponent>& d, const PointSet& x) {
  Matrix v(x.size(), d.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      v(i, j) = monomial_value(x[i], d[j]);
    }
  }
  v.set_col_labels(d);
  return v;
}

Vector evaluate(const Poly& p, const PointSet& x) {
  Vector out;
  out.reserve(x.size());
  for (const auto& pt : x.points()) out.push_back(p.eval(pt));
  return out;
}

std::vector<Poly> polys_from_vectors(const std::vector<Vector>& vecs,
                                     const std::vector<Exponent>& support,
                                     std::size_t n) {
  std::vector<Poly> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) out.push_back(from_coefficients(support, v, n));
  return out;
}

VanishingSpace vanishing_space(std::vector<Exponent> d, const PointSet& x,
                               const MonomialOrder& ord) {
  ord.sort(d);
  VanishingSpace vs;
  vs.n = x.n();
  vs.degree_set = d;
  vs.basis = polys_from_vectors(kernel_basis(vandermonde(d, x)), d, x.n());
  return vs;
}

MoellerBasis moeller_basis(const PointSet& x, std::vector<Exponent> d,
                           const MonomialOrder& ord) {
  const std::size_t n = x.n();
  ord.sort(d);
  if (!is_distinguished(d, n, ord)) {
    throw Error(Errc::NotDistinguished,
                "degree set is not a distinguished order ideal");
  }
  const Matrix vd = vandermonde(d, x);
  if (rank(vd) < x.size()) {
    throw Error(Errc::NotSurjective,
                "evaluation on the degree set does not reach every point");
  }

  MoellerBasis out;
  out.order = ord;
  out.degree_set = d;
  out.border = border(d, n, ord);

  // Greedy ascending choice of C: keep t when its evaluation column is
  // independent of the columns already kept.
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < d.size() && kept.size() < x.size(); ++j) {
    std::vector<std::size_t> trial = kept;
    trial.push_back(j);
    if (rank(vd.select_cols(trial)) == trial.size()) kept = std::move(trial);
  }
  for (auto j : kept) out.normal_set.push_back(d[j]);
  const Matrix vc = vd.select_cols(kept);

  std::vector<Exponent> all = d;
  all.insert(all.end(), out.border.begin(), out.border.end());
  ord.sort(all);
  const std::set<Exponent> c(out.normal_set.begin(), out.normal_set.end());
  for (const auto& t : all) {
    if (c.count(t)) continue;
    Vector rhs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = monomial_value(x[i], t);
    const Vector a = solve_square(vc, rhs);
    Poly q = Poly::monomial(t);
    for (std::size_t k = 0; k < a.size(); ++k) {
      q.add_term(out.normal_set[k], -a[k]);
    }
    out.groebner.push_back(std::move(q));
  }
  return out;
}

std::vector<Poly> reduced_groebner(const MoellerBasis& basis) {
  std::vector<Exponent> leads;
  for (const auto& g : basis.groebner) {
    leads.push_back(g.leading_exponent(basis.order));
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < leads.size() && minimal; ++j) {
      if (j != i && divides(leads[j], leads[i])) minimal = false;
    }
    if (minimal) out.push_back(basis.groebner[i].monic(basis.order));
  }
  return out;
}

bool ideal_membership(const Poly& p, const MoellerBasis& basis) {
  return normal_form(p, basis.groebner, basis.order).is_zero();
}

namespace {

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace

bool buchberger_criterion(const std::vector<Poly>& g, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].is_zero() || g[j].is_zero()) continue;
      // Coprime leading terms: the S-polynomial reduces to zero.
      if (coprime(g[i].leading_exponent(ord), g[j].leading_exponent(ord))) {
        continue;
      }
      if (!normal_form(s_polynomial(g[i], g[j], ord), g, ord).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace prony
