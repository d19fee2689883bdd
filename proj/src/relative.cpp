#include "prony/relative.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "prony/structures.hpp"
#include "prony/zerodim.hpp"

namespace prony {

AlgebraicSet::AlgebraicSet(std::size_t n, std::vector<Poly> generators,
                           MonomialOrder order)
    : n_(n), order_(std::move(order)) {
  for (auto& g : generators) {
    if (g.nvars() != n) {
      throw Error(Errc::DimensionMismatch, "generator has the wrong variable count");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  std::vector<Exponent> leads;
  for (const auto& g : gens_) leads.push_back(g.leading_exponent(order_));
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (std::size_t j = 0; j < leads.size(); ++j) {
      if (i != j && divides(leads[i], leads[j])) {
        throw Error(Errc::NotGroebner, "leading terms are not auto-reduced");
      }
    }
  }
  if (gens_.size() <= 4 && !buchberger_criterion(gens_, order_)) {
    throw Error(Errc::NotGroebner, "an S-polynomial does not reduce to zero");
  }
}

bool AlgebraicSet::contains(const Point& x) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&x](const Poly& g) { return g.eval(x).is_zero(); });
}

CoordinateBasis coordinate_basis(const AlgebraicSet& y,
                                 const std::vector<Exponent>& degree_set) {
  const std::set<Exponent> members(degree_set.begin(), degree_set.end());
  CoordinateBasis out;
  for (const auto& a : degree_set) {
    const Poly m = Poly::monomial(a);
    Poly nf = normal_form(m, y.generators(), y.order());
    if (nf == m) {
      out.retained.push_back(a);
      continue;
    }
    for (const auto& [e, c] : nf.terms()) {
      if (!members.count(e)) {
        throw Error(Errc::DegreeLeak, "normal form of " + to_string(a) +
                                          " leaves the column set at " +
                                          to_string(e));
      }
    }
    out.reduction.emplace(a, std::move(nf));
  }
  return out;
}

Matrix relative_hankel(std::size_t d, SampleOracle& f, const AlgebraicSet& y,
                       IndexFamily rows, IndexFamily cols, int row_offset) {
  const long dr = static_cast<long>(d) + row_offset;
  const auto h = coordinate_basis(y, family_members(cols, d, y.order()));
  return hankel_matrix(
      family_members(rows, static_cast<std::size_t>(std::max(dr, 0L)), y.order()),
      h.retained, f);
}

Matrix relative_hankel_square(std::size_t d, SampleOracle& f,
                              const AlgebraicSet& y, IndexFamily cols) {
  const auto h = coordinate_basis(y, family_members(cols, d, y.order()));
  return hankel_matrix(h.retained, h.retained, f);
}

VanishingSpace relative_relations(const std::vector<Poly>& kernel,
                                  const AlgebraicSet& y,
                                  std::vector<Exponent> degree_set) {
  const std::set<Exponent> members(degree_set.begin(), degree_set.end());
  VanishingSpace v;
  v.n = y.n();
  v.basis = kernel;
  int top = 0;
  for (const auto& a : degree_set) top = std::max(top, total_degree(a));
  for (const auto& g : y.generators()) {
    const int dg = g.degree();
    for (const auto& a : degree_set) {
      if (total_degree(a) + dg > top) continue;
      const Poly s = g.shifted(a);
      const bool inside = std::all_of(
          s.terms().begin(), s.terms().end(),
          [&members](const auto& t) { return members.count(t.first) > 0; });
      if (inside) v.basis.push_back(s);
    }
  }
  y.order().sort(degree_set);
  v.degree_set = std::move(degree_set);
  return v;
}

PointSet relative_zero_locus(const std::vector<Poly>& kernel,
                             const AlgebraicSet& y,
                             const std::vector<Exponent>& degree_set) {
  const QuotientModel model =
      quotient_model(relative_relations(kernel, y, degree_set), y.order());
  std::mt19937_64 rng(0);
  try {
    return zero_locus_exact(model, rng).points;
  } catch (const Error& e) {
    if (e.code() != Errc::RepeatedEigenvalues) throw;
  }
  RationalZeroSet z = rational_zero_set(model);
  if (!z.complete) {
    throw Error(Errc::IrrationalSpectrum, "zero locus has non-rational points");
  }
  return z.points;
}

PronyStructureSpec relative_structure(const AlgebraicSet& y, FamilyKind cols,
                                      FamilyKind rows, int row_offset,
                                      bool square) {
  PronyStructureSpec s;
  s.kind = square ? "relative_square" : "relative";
  s.n = y.n();
  s.cols = {cols, y.n()};
  s.rows = {rows, y.n()};
  s.row_offset = row_offset;
  s.order = y.order();
  s.domain = Domain::nat;
  auto ys = std::make_shared<AlgebraicSet>(y);
  const IndexFamily cf = s.cols;
  const IndexFamily rf = s.rows;
  s.columns = [ys, cf](std::size_t d) {
    return coordinate_basis(*ys, family_members(cf, d, ys->order())).retained;
  };
  if (square) {
    s.builder = [ys, cf](std::size_t d, SampleOracle& f) {
      return relative_hankel_square(d, f, *ys, cf);
    };
  } else {
    s.builder = [ys, cf, rf, row_offset](std::size_t d, SampleOracle& f) {
      return relative_hankel(d, f, *ys, rf, cf, row_offset);
    };
  }
  s.relations = [ys, cf](std::size_t d, const std::vector<Poly>& kernel) {
    return relative_relations(kernel, *ys, family_members(cf, d, ys->order()));
  };
  // Model checks on the full column family: H_d alone can miss samples
  // that only the reductions modulo I(Y) relate to the support.
  s.check_indices = [cf](std::size_t d) { return family_members(cf, d); };
  return s;
}

}  // namespace prony
