#ifndef PRONY_STRUCTURES_HPP
#define PRONY_STRUCTURES_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "prony/linalg.hpp"
#include "prony/oracle.hpp"
#include "prony/prony.hpp"

namespace prony {

// ------------------------------------------------------------ builders

// (f(a + b)) over rows x cols, columns labeled by `cols`.
Matrix hankel_matrix(const std::vector<Exponent>& rows,
                     const std::vector<Exponent>& cols, SampleOracle& f);

// (f(b - a)) over rows x cols. Throws DomainMismatch for N^n oracles.
Matrix toeplitz_matrix(const std::vector<Exponent>& rows,
                       const std::vector<Exponent>& cols, SampleOracle& f);

// Univariate Chebyshev structure: raw (f(i+j) + f(|i-j|)) for
// i < max(d,1), j <= d, and its product with the basis change `psi`.
Matrix chebyshev_raw(std::size_t d, SampleOracle& f);
// Column j holds the coordinates of X^j in T_0..T_d.
Matrix chebyshev_psi(std::size_t d);
Matrix chebyshev_matrix(std::size_t d, SampleOracle& f);

// T_i T_j = (T_{i+j} + T_{|i-j|}) / 2; equal indices are merged.
std::vector<std::pair<std::size_t, Rational>> cheb_linearize(std::size_t i,
                                                             std::size_t j);

// T_i(x) by the three-term recurrence.
Rational chebyshev_t(std::size_t i, const Rational& x);

// Hankel over f(g) = delta . phi^g v. Throws NonCommuting.
struct OperatorSpec {
  std::vector<Matrix> phi;
  Vector delta;
  Vector start;
};
Matrix operator_builder(std::size_t d, const OperatorSpec& spec,
                        IndexFamily rows, IndexFamily cols, int row_offset = -1);

// ---------------------------------------------------------- generators

struct ExpSumTerm {
  Rational coeff;
  Point base;
};
struct ExpSumSpec {
  std::size_t n = 1;
  Domain domain = Domain::nat;
  std::vector<ExpSumTerm> terms;
};

// f(i) = sum c T_i(base).
struct ChebSumTerm {
  Rational coeff;
  Rational base;
};
struct ChebSumSpec {
  std::vector<ChebSumTerm> terms;
};

// p = sum c_j T_j sampled as f(i) = p(T_i(base)).
struct ChebPolySpec {
  std::map<std::size_t, Rational> coeffs;
  Rational base = Rational(2);
};

// f(a) = p(b_1^a_1, ..., b_n^a_n). With kronecker_base > 0 the univariate
// q(Z) = p(Z, Z^D, Z^{D^2}, ...) with D = kronecker_base is sampled as
// f(k) = q(b_1^k) instead.
struct PolySpec {
  Poly p;
  std::vector<Rational> bases;  // empty: first n primes
  std::size_t kronecker_base = 0;
};

struct GaussianTerm {
  double coeff = 0.0;
  std::vector<double> center;
};
// g(x) = sum c exp(-(x - t)^T A (x - t)), sampled as f(a) = g(a) e^{a^T A a}.
struct GaussianSpec {
  std::size_t n = 1;
  Matrix a;
  std::vector<GaussianTerm> terms;
};

using GeneratorSpec = std::variant<ExpSumSpec, ChebSumSpec, ChebPolySpec,
                                   PolySpec, GaussianSpec, OperatorSpec>;

std::vector<Rational> default_bases(std::size_t n);  // first n primes

// Exact oracle for every kind except Gaussian (SpecInvalid).
SampleOracle oracle_from_generator(const GeneratorSpec& g);
// Gaussian sums on Z^n. Checks A symmetric positive definite.
FloatOracle float_oracle_from_generator(const GaussianSpec& g);

// Variables n and domain an oracle for `g` uses.
std::size_t generator_dimension(const GeneratorSpec& g);

void validate(const GeneratorSpec& g);  // throws SpecInvalid

// ------------------------------------------------------------ decoding

// Exponent whose coordinate j satisfies bases[j]^e_j = label_j.
std::vector<Exponent> decode_monomial(const PointSet& labels,
                                      const std::vector<Rational>& bases);
// Exponents of p recovered from Kronecker labels b^k.
std::vector<Exponent> decode_kronecker(const PointSet& labels,
                                       const Rational& base, std::size_t n,
                                       std::size_t kron);
// Indices i with T_i(base) = label.
std::vector<std::size_t> decode_chebyshev(const PointSet& labels,
                                          const Rational& base);
// Centers t with e^{2 A t} = label, and Gaussian coefficients from the
// exponential-sum ones: c = mu e^{t^T A t}.
struct GaussianDecoded {
  std::vector<std::vector<double>> centers;
  std::vector<double> coeffs;
};
GaussianDecoded decode_gaussian(const std::vector<std::vector<double>>& labels,
                                const std::vector<double>& mu, const Matrix& a);

// --------------------------------------------------- pullback and projection

// k-variate oracle g -> base(sum g_j gens_j). `base` must outlive the result.
SampleOracle pullback_oracle(SampleOracle& base,
                             const std::vector<LatticeIndex>& gens);
// Univariate k -> base(k alpha). Throws ZeroDirection.
SampleOracle projection_oracle(SampleOracle& base, const LatticeIndex& alpha);

// ------------------------------------------------------ structure factories

PronyStructureSpec hankel_structure(std::size_t n,
                                    FamilyKind cols = FamilyKind::total,
                                    FamilyKind rows = FamilyKind::total,
                                    int row_offset = -1);
PronyStructureSpec toeplitz_structure(std::size_t n,
                                      FamilyKind cols = FamilyKind::total,
                                      FamilyKind rows = FamilyKind::total,
                                      int row_offset = -1);
PronyStructureSpec chebyshev_structure();
// Fixed matrix at every degree; columns labeled by `cols`.
PronyStructureSpec fixed_structure(std::size_t n, Matrix m,
                                   std::vector<Exponent> cols);

// Evaluation count of Hankel |I_d + J_d| and Toeplitz |J_d - I_d|.
struct EvalCounts {
  std::size_t hankel = 0;
  std::size_t toeplitz = 0;
};
EvalCounts evaluation_counts(std::size_t n, FamilyKind rows, FamilyKind cols,
                             std::size_t d, int row_offset = 0);

}  // namespace prony

#endif  // PRONY_STRUCTURES_HPP
