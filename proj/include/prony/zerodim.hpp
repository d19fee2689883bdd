#ifndef PRONY_ZERODIM_HPP
#define PRONY_ZERODIM_HPP

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "prony/linalg.hpp"
#include "prony/poly.hpp"
#include "prony/vanish.hpp"

namespace prony {

// Quotient algebra K[X]/<V> in the basis of the normal set N.
struct QuotientModel {
  std::size_t n = 0;
  MonomialOrder order;
  std::vector<Exponent> normal_set;      // ascending; empty iff 1 is in <V>
  std::map<Exponent, Vector> reduction;  // N u border(N) -> coords over N
  std::vector<Matrix> mult;              // M_i(:, m) = reduction of X_i m
  std::vector<Poly> relations;           // the spanning polynomials of V

  std::size_t index_of(const Exponent& m) const;
};

// Pivot monomials of V (columns in descending order) are leading terms,
// the remaining monomials of the degree set form N.
// Throws DegreeInsufficient when N is not an order ideal or some X_i m
// with m in N leaves the degree set; NotZeroDimensional when the
// multiplication matrices do not commute.
QuotientModel quotient_model(const VanishingSpace& v,
                             const MonomialOrder& ord = MonomialOrder());

enum class Exactness { exact, approximate };

struct ZeroLocus {
  PointSet points;
  Exactness exactness = Exactness::exact;
  double residual = 0.0;
};

struct RationalRoots {
  std::vector<Rational> roots;                // distinct, ascending
  std::vector<std::size_t> multiplicities;    // parallel to roots
  bool fully_split = false;                   // sum of multiplicities = degree
};

// Rational roots of a nonzero univariate polynomial. Integer roots of the
// monic rescaling of the squarefree part are isolated by Sturm bisection, so
// no integer factoring is needed.
RationalRoots rational_roots(const Poly& p);

inline constexpr int kDefaultRedraws = 5;
inline constexpr long kCombinationBound = 1009;

// Common zeros via the characteristic polynomial of a random combination
// sum c_i M_i with c_i in {1..1009} drawn from `rng`. Throws
// IrrationalSpectrum or RepeatedEigenvalues (after `redraws` new draws).
ZeroLocus zero_locus_exact(const QuotientModel& model, std::mt19937_64& rng,
                           int redraws = kDefaultRedraws);

// Set-theoretic rational zero locus that tolerates repeated eigenvalues:
// rational eigenvalues of each M_i are combined and filtered by the
// relations. `complete` is false when some M_i has a non-rational
// eigenvalue, so points outside Q^n may be missing.
struct RationalZeroSet {
  PointSet points;
  bool complete = true;
};
RationalZeroSet rational_zero_set(const QuotientModel& model);

// Floating-point multiplication matrices over an ascending normal set.
struct FloatModel {
  std::size_t n = 0;
  std::vector<Exponent> normal_set;
  std::vector<Eigen::MatrixXd> mult;
};

FloatModel to_float(const QuotientModel& model);

struct FloatZeroLocus {
  std::vector<std::vector<double>> points;
  double residual = 0.0;
};

// Eigen-decomposition of a random combination; coordinates are read off by
// diagonalizing each M_i in the combination's eigenbasis. Eigenvalues with
// |imag| > tol are rejected. Throws EigenFailure.
FloatZeroLocus zero_locus_float(const FloatModel& model, double tol,
                                std::mt19937_64& rng);

// Float path for an exact model; residual is the largest relative value of
// a relation at a recovered point. Throws ResidualTooLarge above max_residual.
FloatZeroLocus zero_locus_float(const QuotientModel& model, double tol,
                                std::mt19937_64& rng,
                                double max_residual = 1e-6);

}  // namespace prony

#endif  // PRONY_ZERODIM_HPP
