#include "prony/arith.hpp"

#include <cctype>
#include <cmath>

namespace prony {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedLiteral: return "MalformedLiteral";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonFinite: return "NonFinite";
    case Errc::BadBase: return "BadBase";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotOrderIdeal: return "NotOrderIdeal";
    case Errc::Singular: return "Singular";
    case Errc::NotDistinguished: return "NotDistinguished";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::DegreeInsufficient: return "DegreeInsufficient";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::IrrationalSpectrum: return "IrrationalSpectrum";
    case Errc::RepeatedEigenvalues: return "RepeatedEigenvalues";
    case Errc::EigenFailure: return "EigenFailure";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::DegreeExhausted: return "DegreeExhausted";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::IrrationalSupport: return "IrrationalSupport";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::DecodeFailure: return "DecodeFailure";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::DegreeLeak: return "DegreeLeak";
    case Errc::NotGroebner: return "NotGroebner";
    case Errc::MissingSample: return "MissingSample";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

namespace {

std::string describe_indices(const std::vector<std::vector<int>>& indices) {
  std::string out = "needed lattice indices:";
  for (const auto& idx : indices) {
    out += " (";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(idx[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace

MissingSampleError::MissingSampleError(std::vector<std::vector<int>> indices)
    : Error(Errc::MissingSample, describe_indices(indices)),
      indices_(std::move(indices)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "denominator is zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) {
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(Errc::MalformedLiteral,
                "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(Errc::ZeroDenominator,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  // 0^0 = 1 falls out of mpz_pow_ui.
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ + b.v_));
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ - b.v_));
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ * b.v_));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator+=(const Rational& b) {
  v_ += b.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& b) {
  v_ -= b.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& b) {
  v_ *= b.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= b.v_;
  return *this;
}

Approx::Approx(double value) : v_(value) {
  if (!std::isfinite(value)) {
    throw Error(Errc::NonFinite, "non-finite floating-point value");
  }
}

Approx operator/(Approx a, Approx b) {
  if (b.v_ == 0.0) throw Error(Errc::DivisionByZero, "division by zero");
  return Approx(a.v_ / b.v_);
}

std::optional<std::uint32_t> try_integer_log(const Rational& value,
                                             const Rational& base,
                                             std::uint32_t bound) {
  if (base.is_zero() || base == Rational(1) || base == Rational(-1)) {
    throw Error(Errc::BadBase, "base must not be 0, 1 or -1, got " +
                                   base.str());
  }
  if (value.is_zero()) return std::nullopt;
  const Rational target = value.abs();
  const Rational step = base.abs();
  const bool growing = step > Rational(1);
  Rational power(1);
  for (std::uint32_t a = 0; a <= bound; ++a) {
    if (power == value) return a;
    const Rational mag = power.abs();
    if (growing ? mag > target : mag < target) return std::nullopt;
    power *= base;
  }
  return std::nullopt;
}

std::uint32_t integer_log(const Rational& value, const Rational& base,
                          std::uint32_t bound) {
  auto a = try_integer_log(value, base, bound);
  if (!a) {
    throw Error(Errc::BoundExceeded, value.str() + " is not a power of " +
                                         base.str() + " up to exponent " +
                                         std::to_string(bound));
  }
  return *a;
}

}  // namespace prony
