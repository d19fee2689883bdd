#ifndef PRONY_PRONY_HPP
#define PRONY_PRONY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prony/linalg.hpp"
#include "prony/oracle.hpp"
#include "prony/poly.hpp"
#include "prony/vanish.hpp"
#include "prony/zerodim.hpp"

namespace prony {

// A family of matrices P_d(f) built from samples, together with what the
// pipeline needs to read its kernel and to check a candidate model.
struct PronyStructureSpec {
  std::string kind = "custom";
  std::size_t n = 1;
  IndexFamily rows{FamilyKind::total, 1};
  IndexFamily cols{FamilyKind::total, 1};
  // Rows at degree d are the row family at max(d + row_offset, 0).
  int row_offset = -1;
  MonomialOrder order;
  Domain domain = Domain::nat;

  // |rows(d)| x |columns(d)| matrix whose column labels are columns(d).
  std::function<Matrix(std::size_t d, SampleOracle& f)> builder;

  // Column monomials at degree d. Defaults to the column family members.
  std::function<std::vector<Exponent>(std::size_t d)> columns;

  // Degree set and spanning polynomials handed to the zero-locus step.
  // Defaults to the kernel polynomials over columns(d).
  std::function<VanishingSpace(std::size_t d, const std::vector<Poly>& kernel)>
      relations;

  // Value at lattice index g of the basis element labeled x; the model is
  // f(g) = sum_x c_x basis_value(x, g). Defaults to the monomial x^g.
  std::function<Rational(const Point& x, const Exponent& g)> basis_value;

  // Index set on which the recovered model is compared with the oracle,
  // besides the random extra points. Defaults to columns(d).
  std::function<std::vector<Exponent>(std::size_t d)> check_indices;

  std::vector<Exponent> row_set(std::size_t d) const;
  std::vector<Exponent> column_set(std::size_t d) const;
  VanishingSpace relation_space(std::size_t d,
                                const std::vector<Poly>& kernel) const;
  Rational value(const Point& x, const Exponent& g) const;
};

enum class ModeKind { rank_bound, fixed, automatic };

struct Mode {
  ModeKind kind = ModeKind::rank_bound;
  std::size_t value = 0;  // rank bound, fixed degree or max degree

  static Mode rank_bound(std::size_t r) { return {ModeKind::rank_bound, r}; }
  static Mode fixed(std::size_t d) { return {ModeKind::fixed, d}; }
  static Mode automatic(std::size_t max_d) { return {ModeKind::automatic, max_d}; }
};

std::string to_string(ModeKind kind);

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::size_t extra_checks = 10;
  int redraws = kDefaultRedraws;
};

struct PronyOutcome {
  PointSet support;
  std::vector<Rational> coefficients;
  std::size_t degree_used = 0;
  Mode mode;
  bool exact = true;
  std::size_t evaluations = 0;  // distinct oracle queries before verification
  std::vector<Exponent> normal_set;
};

// Kernel of P_d(f) as polynomials over the column monomials.
std::vector<Poly> kernel_polys(const PronyStructureSpec& spec, std::size_t d,
                               SampleOracle& f);

// rank_bound(r): least d whose column set contains every monomial of total
// degree <= r. fixed(d): d. automatic(max_d): least d <= max_d with
// rank P_d = rank P_{d+1} at which the zero-locus step succeeds.
std::size_t estimate_degree(const PronyStructureSpec& spec, SampleOracle& f,
                            Mode mode, const PipelineOptions& opts = {});

// Kernel, zero locus, coefficients and verification at the degree chosen by
// `mode`. Throws DegreeExhausted or VerificationFailed (automatic mode
// continues past recoverable failures), and propagates DegreeInsufficient,
// IrrationalSpectrum and MissingSample otherwise.
PronyOutcome run_pipeline(const PronyStructureSpec& spec, SampleOracle& f,
                          Mode mode, const PipelineOptions& opts = {});

// Solves sum_x c_x basis_value(x, g) = f(g) for g in the normal set.
std::vector<Rational> coefficient_solve(const PronyStructureSpec& spec,
                                        const PointSet& support,
                                        SampleOracle& f,
                                        const std::vector<Exponent>& normal_set);

// Exponential-sum model with monomial basis values.
std::vector<Rational> coefficient_solve(const PointSet& support, SampleOracle& f,
                                        const std::vector<Exponent>& normal_set);

// Checks the model against the oracle on check_indices(d) plus
// `extra` seeded random lattice points the oracle can answer. Returns the
// first failing index, if any.
std::optional<LatticeIndex> verify_model(const PronyStructureSpec& spec,
                                         SampleOracle& f, std::size_t d,
                                         const PointSet& support,
                                         const std::vector<Rational>& coeffs,
                                         std::uint64_t seed, std::size_t extra);

// Rational zero set of the span of `v`, retrying with all monomial
// multiples up to degree k = 1..max_extra when the normal set's border
// leaves the degree set. Empty when no extension settles the locus.
std::optional<RationalZeroSet> extended_zero_set(const VanishingSpace& v,
                                                 const MonomialOrder& ord,
                                                 std::size_t max_extra = 3);

enum class Verdict { ok, zl_mismatch, vanishing_violation };
std::string to_string(Verdict v);

struct ConditionReport {
  Verdict verdict = Verdict::ok;
  bool zero_locus_matches = false;
  bool vanishing_contained = false;
  // Rational zero locus of the kernel when it could be determined.
  std::optional<PointSet> zero_locus;
};

// Both defining conditions at degree d, independently: ZL(ker P_d) equals
// the support, and the vanishing space of the support on columns(d) lies in
// ker P_d. The zero locus is read from the kernel, extended by monomial
// multiples over a few extra degrees when the kernel alone does not cover
// the border of its normal set.
ConditionReport verify_prony_conditions(const PronyStructureSpec& spec,
                                        SampleOracle& f,
                                        const PointSet& known_support,
                                        std::size_t d);

// ----------------------------------------------------------- float mode

struct FloatStructureSpec {
  std::size_t n = 1;
  std::size_t degree = 1;                // columns are total degree <= degree
  std::size_t rank_bound = 1;            // cap on the selected normal set
  double selection_tol = 1e-9;           // relative column residual
  double imag_tol = 1e-6;
};

struct FloatOutcome {
  std::vector<std::vector<double>> support;  // labels, ascending
  std::vector<double> coefficients;
  std::vector<Exponent> normal_set;
  std::size_t degree_used = 0;
  std::size_t evaluations = 0;
  double residual = 0.0;  // relative misfit on all sampled indices
};

// Toeplitz matrix (f(b - a)) over total-degree rows and columns on Z^n,
// normal set by greedy ascending column selection, multiplication matrices
// by least squares, eigen-decomposition, then least-squares coefficients.
// Throws ResidualTooLarge when the model misses the samples by more than
// max_residual.
FloatOutcome run_float_pipeline(const FloatStructureSpec& spec, FloatOracle& f,
                                std::uint64_t seed = 0,
                                double max_residual = 1e-6);

}  // namespace prony

#endif  // PRONY_PRONY_HPP
