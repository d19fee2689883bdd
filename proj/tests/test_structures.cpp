#include <gtest/gtest.h>

#include <cmath>

#include "prony/structures.hpp"
#include "support/gen.hpp"

using namespace prony;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidInput;
}

SampleOracle expsum(std::size_t n, Domain dom, std::vector<ExpSumTerm> terms) {
  return oracle_from_generator(ExpSumSpec{n, dom, std::move(terms)});
}

SampleOracle cheb_y3() {
  ChebPolySpec s;
  // Y^3 = (3 T_1 + T_3) / 4
  s.coeffs = {{1, q(3, 4)}, {3, q(1, 4)}};
  s.base = q(2);
  return oracle_from_generator(s);
}

Matrix diag(std::vector<long> v) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = Rational(v[i]);
  return m;
}

}  // namespace

TEST(Builders, HankelTwoExponentials) {
  auto f = expsum(1, Domain::nat, {{q(1), pt({2})}, {q(1), pt({3})}});
  auto s = hankel_structure(1);
  EXPECT_EQ(s.builder(2, f).str(), "[[2,5,13],[5,13,35]]");
  EXPECT_EQ(f.count(), 4u);
}

TEST(Builders, HankelZeroBase) {
  auto f = expsum(1, Domain::nat, {{q(1), pt({0})}});
  EXPECT_EQ(hankel_structure(1).builder(1, f).str(), "[[1,0]]");
}

TEST(Builders, HankelZeroOracle) {
  SampleOracle f(1, Domain::nat, [](const LatticeIndex&) { return Rational(0); });
  EXPECT_TRUE(hankel_structure(1).builder(3, f).is_zero());
}

TEST(Builders, ToeplitzReciprocalEntries) {
  auto f = expsum(1, Domain::integer, {{q(1), pt({2})}});
  auto s = toeplitz_structure(1, FamilyKind::total, FamilyKind::total, 0);
  const Matrix t = s.builder(1, f);
  EXPECT_EQ(t.str(), "[[1,2],[1/2,1]]");
  const auto k = kernel_basis(t);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{q(-2), q(1)}));
  EXPECT_EQ(s.builder(0, f).str(), "[[1]]");
}

TEST(Builders, ToeplitzRejectsNaturalOracle) {
  auto f = expsum(1, Domain::nat, {{q(1), pt({2})}});
  EXPECT_EQ(code_of([&] { toeplitz_matrix({{0}}, {{0}, {1}}, f); }),
            Errc::DomainMismatch);
}

TEST(Builders, MissingSamplesListed) {
  auto f = SampleOracle::from_table(1, Domain::nat, {{{0}, q(1)}, {{1}, q(2)}});
  try {
    hankel_matrix({{0}, {1}}, {{0}, {1}, {2}}, f);
    FAIL();
  } catch (const MissingSampleError& e) {
    EXPECT_EQ(e.indices(), (std::vector<LatticeIndex>{{2}, {3}}));
  }
}

TEST(Chebyshev, WorkedExampleByteExact) {
  auto f = cheb_y3();
  EXPECT_EQ(f({0}), q(1));
  EXPECT_EQ(f({1}), q(8));
  EXPECT_EQ(f({2}), q(343));
  EXPECT_EQ(f({3}), q(17576));
  EXPECT_EQ(chebyshev_raw(2, f).str(), "[[2,16,686],[16,344,17584]]");
  EXPECT_EQ(chebyshev_psi(2).str(), "[[1,0,1/2],[0,1,0],[0,0,1/2]]");
  const Matrix p = chebyshev_matrix(2, f);
  EXPECT_EQ(p.str(), "[[2,16,344],[16,344,8800]]");
  const auto k = kernel_basis(p);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{q(52), q(-28), q(1)}));

  const auto out = run_pipeline(chebyshev_structure(), f, Mode::rank_bound(2));
  EXPECT_EQ(out.support, PointSet(1, {pt({2}), pt({26})}));
  EXPECT_EQ(decode_chebyshev(out.support, q(2)),
            (std::vector<std::size_t>{1, 3}));
  // Y^3 = 3/4 T_1 + 1/4 T_3.
  EXPECT_EQ(out.coefficients, (std::vector<Rational>{q(3, 4), q(1, 4)}));
}

TEST(Chebyshev, PsiMatchesMonomialExpansion) {
  // Column j of psi applied to T_0..T_d at x reproduces x^j.
  check::Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.integer(0, 7));
    const Rational x = g.rational();
    const Matrix psi = chebyshev_psi(d);
    for (std::size_t j = 0; j <= d; ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k <= d; ++k) acc += psi(k, j) * chebyshev_t(k, x);
      EXPECT_EQ(acc, x.pow(static_cast<long>(j)));
    }
  }
}

TEST(Chebyshev, Linearize) {
  using V = std::vector<std::pair<std::size_t, Rational>>;
  EXPECT_EQ(cheb_linearize(1, 1), (V{{2, q(1, 2)}, {0, q(1, 2)}}));
  EXPECT_EQ(cheb_linearize(3, 1), (V{{4, q(1, 2)}, {2, q(1, 2)}}));
  EXPECT_EQ(cheb_linearize(0, 5), (V{{5, q(1)}}));
  check::Gen g(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto i = static_cast<std::size_t>(g.integer(0, 8));
    const auto j = static_cast<std::size_t>(g.integer(0, 8));
    const Rational x = g.rational();
    Rational rhs(0);
    for (const auto& [k, w] : cheb_linearize(i, j)) rhs += w * chebyshev_t(k, x);
    EXPECT_EQ(chebyshev_t(i, x) * chebyshev_t(j, x), rhs);
  }
}

TEST(Chebyshev, DecodeRejectsForeignLabel) {
  EXPECT_EQ(code_of([] { decode_chebyshev(PointSet(1, {pt({5})}), q(2)); }),
            Errc::DecodeFailure);
}

TEST(Operators, DiagonalGivesExponentialHankel) {
  OperatorSpec s{{diag({2, 3})}, {q(1), q(1)}, {q(1), q(1)}};
  EXPECT_EQ(operator_builder(2, s, {FamilyKind::total, 1}, {FamilyKind::total, 1})
                .str(),
            "[[2,5,13],[5,13,35]]");
}

TEST(Operators, IdentityGivesConstant) {
  OperatorSpec s{{Matrix::identity(1)}, {q(1)}, {q(7)}};
  const Matrix m =
      operator_builder(2, s, {FamilyKind::total, 1}, {FamilyKind::total, 1});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), q(7));
  }
}

TEST(Operators, BivariateSupport) {
  OperatorSpec s{{diag({2, 3}), diag({5, 7})}, {q(1), q(1)}, {q(1), q(1)}};
  auto f = oracle_from_generator(s);
  const auto out = run_pipeline(hankel_structure(2), f, Mode::rank_bound(2));
  EXPECT_EQ(out.support, PointSet(2, {pt({2, 5}), pt({3, 7})}));
  EXPECT_EQ(out.coefficients, (std::vector<Rational>{q(1), q(1)}));
}

TEST(Operators, NonCommutingRejected) {
  Matrix a = Matrix::from_rows({{q(1), q(1)}, {q(0), q(1)}});
  Matrix b = Matrix::from_rows({{q(1), q(0)}, {q(1), q(1)}});
  OperatorSpec s{{a, b}, {q(1), q(0)}, {q(1), q(0)}};
  EXPECT_EQ(code_of([&] {
              operator_builder(1, s, {FamilyKind::total, 2}, {FamilyKind::total, 2});
            }),
            Errc::NonCommuting);
}

TEST(Operators, NonDiagonalizableStillCommuting) {
  // A Jordan block commutes with itself; the oracle is k 2^{k-1} + 2^k.
  Matrix j = Matrix::from_rows({{q(2), q(1)}, {q(0), q(2)}});
  OperatorSpec s{{j}, {q(1), q(0)}, {q(1), q(1)}};
  auto f = oracle_from_generator(s);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(f({k}), Rational(k) * q(2).pow(k) / q(2) + q(2).pow(k));
  }
}

TEST(Generators, PolynomialTransfer) {
  PolySpec s;
  s.p = Poly::monomial({3}, q(1));
  s.bases = {q(2)};
  auto f = oracle_from_generator(s);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(f({k}), q(8).pow(k));
  EXPECT_EQ(decode_monomial(PointSet(1, {pt({8})}), {q(2)}),
            (std::vector<Exponent>{{3}}));
}

TEST(Generators, DefaultBasesArePrimes) {
  EXPECT_EQ(default_bases(4), (std::vector<Rational>{q(2), q(3), q(5), q(7)}));
}

TEST(Generators, GaussianOracle) {
  GaussianSpec s;
  s.n = 1;
  s.a = Matrix::from_rows({{q(1)}});
  s.terms = {{1.0, {1.0}}};
  auto f = float_oracle_from_generator(s);
  for (int k = -3; k <= 3; ++k) {
    EXPECT_NEAR(f({k}) / std::exp(2.0 * k - 1.0), 1.0, 1e-12);
  }
  const auto dec = decode_gaussian({{std::exp(2.0)}}, {std::exp(-1.0)}, s.a);
  EXPECT_NEAR(dec.centers[0][0], 1.0, 1e-6);
  EXPECT_NEAR(dec.coeffs[0], 1.0, 1e-6);
}

TEST(Generators, GaussianRejectsIndefinite) {
  GaussianSpec s;
  s.n = 2;
  s.a = Matrix::from_rows({{q(1), q(2)}, {q(2), q(1)}});
  s.terms = {{1.0, {0.0, 0.0}}};
  EXPECT_EQ(code_of([&] { validate(s); }), Errc::SpecInvalid);
  s.a = Matrix::from_rows({{q(2), q(1)}, {q(0), q(2)}});
  EXPECT_EQ(code_of([&] { validate(s); }), Errc::SpecInvalid);
}

TEST(Generators, ZeroBaseRejectedOnIntegers) {
  EXPECT_EQ(code_of([] { expsum(1, Domain::integer, {{q(1), pt({0})}}); }),
            Errc::SpecInvalid);
}

TEST(Projection, DiagonalDirection) {
  auto f = expsum(2, Domain::nat, {{q(1), pt({2, 3})}});
  auto g = projection_oracle(f, {1, 1});
  for (int k = 0; k < 5; ++k) EXPECT_EQ(g({k}), q(6).pow(k));

  auto h = expsum(2, Domain::nat, {{q(1), pt({2, 3})}, {q(1), pt({3, 2})}});
  auto hp = projection_oracle(h, {1, 1});
  const auto out = run_pipeline(hankel_structure(1), hp, Mode::rank_bound(2));
  EXPECT_EQ(out.support, PointSet(1, {pt({6})}));
  EXPECT_EQ(out.coefficients, (std::vector<Rational>{q(2)}));

  auto m = projection_oracle(h, {1, 0});
  for (int k = 0; k < 4; ++k) EXPECT_EQ(m({k}), h({k, 0}));
  EXPECT_EQ(code_of([&] { projection_oracle(f, {0, 0}); }), Errc::ZeroDirection);
}

TEST(Projection, SubArrayIdentity) {
  check::Gen g(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExpSumTerm> terms;
    for (const auto& p : g.distinct_points(3, 2, [&] { return g.nonzero_integer(-4, 4); })) {
      terms.push_back({g.nonzero_rational(), p});
    }
    auto f = expsum(2, Domain::nat, terms);
    const LatticeIndex alpha = {static_cast<int>(g.integer(0, 2)),
                                static_cast<int>(g.integer(1, 2))};
    auto fa = projection_oracle(f, alpha);
    const std::size_t d = 3;
    const Matrix h1 = hankel_matrix(family_members({FamilyKind::total, 1}, d),
                                    family_members({FamilyKind::total, 1}, d), fa);
    std::vector<Exponent> line;
    for (std::size_t k = 0; k <= d; ++k) {
      line.push_back({static_cast<int>(k) * alpha[0], static_cast<int>(k) * alpha[1]});
    }
    EXPECT_EQ(h1, hankel_matrix(line, line, f).select_cols({0, 1, 2, 3}));
  }
}

TEST(Factorization, HankelAndToeplitz) {
  check::Gen g(21);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 4));
    const auto pts =
        g.distinct_points(r, n, [&] { return g.nonzero_integer(-5, 5); });
    std::vector<ExpSumTerm> terms;
    Matrix c(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      terms.push_back({g.nonzero_rational(), pts[k]});
      c(k, k) = terms.back().coeff;
    }
    const PointSet x(n, pts);
    std::vector<Point> inv;
    for (const auto& p : pts) {
      Point ip;
      for (const auto& v : p) ip.push_back(Rational(1) / v);
      inv.push_back(ip);
    }
    const PointSet xi(n, inv);
    const std::size_t d = static_cast<std::size_t>(g.integer(0, 3));
    const auto rows = family_members({FamilyKind::total, n}, d > 0 ? d - 1 : 0);
    const auto cols = family_members({FamilyKind::total, n}, d);

    auto fh = expsum(n, Domain::nat, terms);
    const Matrix h = hankel_matrix(rows, cols, fh);
    const Matrix vh = vandermonde(rows, x).transpose() * c * vandermonde(cols, x);
    EXPECT_EQ(h, vh);

    auto ft = expsum(n, Domain::integer, terms);
    const Matrix t = toeplitz_matrix(rows, cols, ft);
    const Matrix vt = vandermonde(rows, xi).transpose() * c * vandermonde(cols, x);
    EXPECT_EQ(t, vt);
  }
}

TEST(EvaluationCounts, MinkowskiFormulas) {
  const auto e = evaluation_counts(2, FamilyKind::total, FamilyKind::total, 2);
  EXPECT_EQ(e.hankel, 15u);
  EXPECT_EQ(e.toeplitz, 19u);
}

TEST(EvaluationCounts, MatchOracleCounter) {
  for (auto fam : {FamilyKind::total, FamilyKind::max, FamilyKind::hyperbolic}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t d = 0; d <= 3; ++d) {
        auto fh = expsum(n, Domain::nat, {{q(1), Point(n, q(2))}});
        auto ft = expsum(n, Domain::integer, {{q(1), Point(n, q(2))}});
        hankel_structure(n, fam, fam, 0).builder(d, fh);
        toeplitz_structure(n, fam, fam, 0).builder(d, ft);
        const auto e = evaluation_counts(n, fam, fam, d);
        EXPECT_EQ(fh.count(), e.hankel);
        EXPECT_EQ(ft.count(), e.toeplitz);
      }
    }
  }
}

TEST(Transfer, SparsePolynomialRoundTrip) {
  check::Gen g(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
    const std::size_t t = static_cast<std::size_t>(g.integer(1, 3));
    std::set<Exponent> seen;
    PolySpec s;
    s.p = Poly(n);
    while (seen.size() < t) {
      const Exponent e = g.exponent(n, 4);
      if (seen.insert(e).second) s.p = s.p + Poly::monomial(e, g.nonzero_rational());
    }
    auto f = oracle_from_generator(s);
    const auto out = run_pipeline(hankel_structure(n), f, Mode::rank_bound(t));
    const auto exps = decode_monomial(out.support, default_bases(n));
    ASSERT_EQ(exps.size(), t);
    for (std::size_t k = 0; k < t; ++k) {
      EXPECT_EQ(out.coefficients[k], s.p.coeff(exps[k]));
    }
  }
}

TEST(Transfer, KroneckerRoundTrip) {
  PolySpec s;
  s.p = Poly::monomial({1, 2}, q(3)) + Poly::monomial({3, 0}, q(-1));
  s.kronecker_base = 4;
  auto f = oracle_from_generator(s);
  const auto out = run_pipeline(hankel_structure(1), f, Mode::rank_bound(2));
  const auto exps = decode_kronecker(out.support, q(2), 2, 4);
  std::set<Exponent> got(exps.begin(), exps.end());
  EXPECT_EQ(got, (std::set<Exponent>{{1, 2}, {3, 0}}));
}

TEST(Transfer, ChebyshevRoundTrip) {
  check::Gen g(9);
  for (int trial = 0; trial < 10; ++trial) {
    ChebPolySpec s;
    const std::size_t t = static_cast<std::size_t>(g.integer(1, 3));
    while (s.coeffs.size() < t) {
      s.coeffs[static_cast<std::size_t>(g.integer(0, 6))] = g.nonzero_rational();
    }
    auto f = oracle_from_generator(s);
    const auto out = run_pipeline(chebyshev_structure(), f, Mode::rank_bound(t));
    const auto idx = decode_chebyshev(out.support, s.base);
    ASSERT_EQ(idx.size(), t);
    for (std::size_t k = 0; k < t; ++k) {
      EXPECT_EQ(out.coefficients[k], s.coeffs.at(idx[k]));
    }
  }
}

TEST(Transfer, GaussianRoundTrip) {
  check::Gen g(10);
  for (int trial = 0; trial < 5; ++trial) {
    GaussianSpec s;
    s.n = 1;
    s.a = Matrix::from_rows({{q(1, 2)}});
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 2));
    std::vector<double> centers;
    while (centers.size() < r) {
      const double c = static_cast<double>(g.integer(-4, 4)) / 2.0;
      if (std::find(centers.begin(), centers.end(), c) == centers.end()) {
        centers.push_back(c);
      }
    }
    std::sort(centers.begin(), centers.end());
    for (double c : centers) s.terms.push_back({g.real(0.5, 2.0), {c}});
    auto f = float_oracle_from_generator(s);
    FloatStructureSpec fs;
    fs.n = 1;
    fs.degree = r;
    fs.rank_bound = r;
    const auto out = run_float_pipeline(fs, f);
    const auto dec = decode_gaussian(out.support, out.coefficients, s.a);
    ASSERT_EQ(dec.centers.size(), r);
    for (std::size_t k = 0; k < r; ++k) {
      EXPECT_NEAR(dec.centers[k][0], s.terms[k].center[0], 1e-6);
      EXPECT_NEAR(dec.coeffs[k], s.terms[k].coeff, 1e-6);
    }
  }
}
