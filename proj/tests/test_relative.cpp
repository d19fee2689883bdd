#include <gtest/gtest.h>

#include "prony/relative.hpp"
#include "prony/structures.hpp"
#include "support/gen.hpp"

using namespace prony;

namespace {

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

Poly poly2(std::initializer_list<std::pair<Exponent, long>> terms) {
  Poly p(2);
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

AlgebraicSet circle() {
  return AlgebraicSet(2, {poly2({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}})});
}
AlgebraicSet axis() { return AlgebraicSet(2, {poly2({{{0, 1}, 1}})}); }
AlgebraicSet torus() {
  return AlgebraicSet(2, {poly2({{{1, 1}, 1}, {{0, 0}, -1}})});
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidInput;
}

SampleOracle expsum(std::vector<ExpSumTerm> terms) {
  return oracle_from_generator(ExpSumSpec{2, Domain::nat, std::move(terms)});
}

const IndexFamily kT2{FamilyKind::total, 2};

}  // namespace

TEST(AlgebraicSetType, RejectsNonGroebner) {
  // Leading terms X1^2 and X1^2 X2 are not auto-reduced.
  EXPECT_EQ(code_of([] {
              AlgebraicSet(2, {poly2({{{2, 0}, 1}, {{0, 0}, -1}}),
                               poly2({{{2, 1}, 1}, {{0, 1}, -1}})});
            }),
            Errc::NotGroebner);
  // {X1 X2 - 1, X1^2 - X2}: S-polynomial X1 - X2^2 does not reduce.
  EXPECT_EQ(code_of([] {
              AlgebraicSet(2, {poly2({{{1, 1}, 1}, {{0, 0}, -1}}),
                               poly2({{{2, 0}, 1}, {{0, 1}, -1}})});
            }),
            Errc::NotGroebner);
  EXPECT_NO_THROW(circle());
}

TEST(CoordinateBasisOp, Examples) {
  const auto t2 = family_members(kT2, 2);
  auto h = coordinate_basis(circle(), t2).retained;
  std::set<Exponent> got(h.begin(), h.end());
  EXPECT_EQ(got, (std::set<Exponent>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}));
  EXPECT_EQ(coordinate_basis(circle(), t2).reduction.at({2, 0}).str(),
            "-X2^2 + 1");

  EXPECT_EQ(coordinate_basis(AlgebraicSet(2, {}), t2).retained, t2);

  h = coordinate_basis(axis(), t2).retained;
  got = std::set<Exponent>(h.begin(), h.end());
  EXPECT_EQ(got, (std::set<Exponent>{{0, 0}, {1, 0}, {2, 0}}));
}

TEST(CoordinateBasisOp, DegreeLeak) {
  // Under lex with X1 first, X1 reduces to X2^3, outside T_1.
  const AlgebraicSet y(2, {poly2({{{1, 0}, 1}, {{0, 3}, -1}})},
                       MonomialOrder(OrderKind::lex));
  EXPECT_EQ(code_of([&] { coordinate_basis(y, family_members(kT2, 1)); }),
            Errc::DegreeLeak);
}

TEST(RelativeHankel, CircleInstance) {
  auto f = expsum({{q(1), pt({q(3, 5), q(4, 5)})}, {q(1), pt({q(1), q(0)})}});
  const Matrix m = relative_hankel(2, f, circle(), kT2, kT2);
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 5u);
  const Matrix sq = relative_hankel_square(2, f, circle(), kT2);
  EXPECT_EQ(sq.rows(), 5u);
  EXPECT_EQ(sq.cols(), 5u);
  const auto h = coordinate_basis(circle(), family_members(kT2, 2)).retained;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) EXPECT_EQ(sq(i, j), f(add(h[i], h[j])));
  }

  const auto out = run_pipeline(relative_structure(circle()), f, Mode::rank_bound(2));
  EXPECT_EQ(out.support, PointSet(2, {pt({q(3, 5), q(4, 5)}), pt({q(1), q(0)})}));
  EXPECT_EQ(out.coefficients, (std::vector<Rational>{q(1), q(1)}));
}

TEST(RelativeHankel, FullSpaceMatchesPlain) {
  auto f = expsum({{q(2), pt({q(2), q(3)})}});
  const AlgebraicSet all(2, {});
  for (std::size_t d = 0; d <= 3; ++d) {
    EXPECT_EQ(relative_hankel(d, f, all, kT2, kT2), hankel_structure(2).builder(d, f));
    const auto t = family_members(kT2, d);
    EXPECT_EQ(relative_hankel_square(d, f, all, kT2), hankel_matrix(t, t, f));
  }
  EXPECT_EQ(relative_hankel_square(0, f, all, kT2).str(), "[[2]]");
}

TEST(RelativeZeroLocus, Examples) {
  const auto t2 = family_members(kT2, 2);
  // Finite Y = {(1,0), (-1,0)}: empty kernel gives all of Y.
  const AlgebraicSet two(2, {poly2({{{0, 1}, 1}}),
                             poly2({{{2, 0}, 1}, {{0, 0}, -1}})});
  EXPECT_EQ(relative_zero_locus({}, two, t2),
            PointSet(2, {pt({q(1), q(0)}), pt({q(-1), q(0)})}));
  EXPECT_EQ(relative_zero_locus({Poly::constant(2, q(1))}, circle(), t2).size(), 0u);

  auto f = expsum({{q(1), pt({q(3, 5), q(4, 5)})}, {q(1), pt({q(1), q(0)})}});
  const auto s = relative_structure(circle());
  EXPECT_EQ(relative_zero_locus(kernel_polys(s, 2, f), circle(), t2),
            PointSet(2, {pt({q(3, 5), q(4, 5)}), pt({q(1), q(0)})}));
}

namespace {

Point circle_point(check::Gen& g) {
  // Pythagorean parameterization ((1 - s^2) / (1 + s^2), 2 s / (1 + s^2)).
  const Rational s = g.rational(4, 3);
  const Rational den = Rational(1) + s * s;
  return {(Rational(1) - s * s) / den, Rational(2) * s / den};
}

}  // namespace

TEST(RelativeProperties, ColumnDeletionConsistency) {
  check::Gen g(61);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExpSumTerm> terms;
    for (int k = 0; k < 3; ++k) terms.push_back({g.nonzero_rational(), circle_point(g)});
    auto f = expsum(terms);
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 4));
    const auto cols = family_members(kT2, d);
    const auto h = coordinate_basis(circle(), cols).retained;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (std::find(h.begin(), h.end(), cols[j]) != h.end()) keep.push_back(j);
    }
    const Matrix plain = hankel_structure(2).builder(d, f);
    const Matrix rel = relative_hankel(d, f, circle(), kT2, kT2);
    EXPECT_EQ(rel, plain.select_cols(keep));
  }
}

TEST(RelativeProperties, RoundTripOnCurves) {
  check::Gen g(62);
  const AlgebraicSet ys[] = {circle(), axis(), torus()};
  for (int trial = 0; trial < 18; ++trial) {
    const int which = trial % 3;
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
    std::set<Point> pts;
    while (pts.size() < r) {
      if (which == 0) {
        pts.insert(circle_point(g));
      } else if (which == 1) {
        pts.insert({g.rational(5, 2), Rational(0)});
      } else {
        const Rational t = g.nonzero_rational(5, 3);
        pts.insert({t, t.inv()});
      }
    }
    std::vector<ExpSumTerm> terms;
    std::vector<Rational> coeffs;
    for (const auto& p : pts) {
      coeffs.push_back(g.nonzero_rational());
      terms.push_back({coeffs.back(), p});
    }
    const PointSet support(2, {pts.begin(), pts.end()});

    auto fr = expsum(terms);
    const auto s = relative_structure(ys[which]);
    const auto rel = run_pipeline(s, fr, Mode::rank_bound(r));
    EXPECT_EQ(rel.support, support);
    EXPECT_EQ(rel.coefficients, coeffs);

    auto fo = expsum(terms);
    const auto ord = run_pipeline(hankel_structure(2), fo, Mode::rank_bound(r));
    EXPECT_EQ(ord.support, rel.support);
    // Fewer columns exactly when I(Y) meets the column span.
    const auto cols = hankel_structure(2).column_set(rel.degree_used);
    const auto cb = coordinate_basis(ys[which], cols);
    if (!cb.reduction.empty()) {
      EXPECT_LT(cb.retained.size(), cols.size());
    } else {
      EXPECT_EQ(cb.retained.size(), cols.size());
    }
    EXPECT_EQ(s.column_set(rel.degree_used), cb.retained);
  }
}

TEST(RelativeProperties, SquareVariantRoundTrip) {
  check::Gen g(63);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
    std::set<Point> pts;
    while (pts.size() < r) pts.insert(circle_point(g));
    std::vector<ExpSumTerm> terms;
    for (const auto& p : pts) terms.push_back({q(1), p});
    auto f = expsum(terms);
    const auto s = relative_structure(circle(), FamilyKind::total,
                                      FamilyKind::total, -1, true);
    const auto out = run_pipeline(s, f, Mode::rank_bound(r));
    EXPECT_EQ(out.support, PointSet(2, {pts.begin(), pts.end()}));
  }
}
