#ifndef PRONY_ERROR_HPP
#define PRONY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prony {

enum class Errc {
  MalformedLiteral,
  ZeroDenominator,
  DivisionByZero,
  NonFinite,
  BadBase,
  BoundExceeded,
  DimensionMismatch,
  NotOrderIdeal,
  Singular,
  NotDistinguished,
  NotSurjective,
  DegreeInsufficient,
  NotZeroDimensional,
  IrrationalSpectrum,
  RepeatedEigenvalues,
  EigenFailure,
  ResidualTooLarge,
  DegreeExhausted,
  VerificationFailed,
  IrrationalSupport,
  DomainMismatch,
  SpecInvalid,
  DecodeFailure,
  NonCommuting,
  DegreeLeak,
  NotGroebner,
  MissingSample,
  ZeroDirection,
  InvalidInput,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown when an oracle backed by a finite sample table is asked for
// indices it does not hold. Carries every index the failing step needed.
class MissingSampleError : public Error {
 public:
  explicit MissingSampleError(std::vector<std::vector<int>> indices);

  const std::vector<std::vector<int>>& indices() const noexcept {
    return indices_;
  }

 private:
  std::vector<std::vector<int>> indices_;
};

}  // namespace prony

#endif  // PRONY_ERROR_HPP
