#ifndef PRONY_ARITH_HPP
#define PRONY_ARITH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "prony/error.hpp"

namespace prony {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Arithmetic returns new values.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& value) : v_(value) {}
  explicit Rational(mpq_class value);

  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inv() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(long exponent) const;
  double to_double() const { return v_.get_d(); }

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& b);
  Rational& operator-=(const Rational& b);
  Rational& operator*=(const Rational& b);
  Rational& operator/=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline Rational rational_parse(std::string_view text) {
  return Rational::parse(text);
}

// Floating-point scalar for the approximate pipeline. Never holds NaN or
// infinity; any operation producing one throws Errc::NonFinite.
class Approx {
 public:
  Approx() = default;
  Approx(double value);  // NOLINT(google-explicit-constructor)

  double value() const { return v_; }

  friend Approx operator+(Approx a, Approx b) { return Approx(a.v_ + b.v_); }
  friend Approx operator-(Approx a, Approx b) { return Approx(a.v_ - b.v_); }
  friend Approx operator*(Approx a, Approx b) { return Approx(a.v_ * b.v_); }
  friend Approx operator/(Approx a, Approx b);
  Approx operator-() const { return Approx(-v_); }

  friend bool operator==(Approx a, Approx b) = default;
  friend auto operator<=>(Approx a, Approx b) = default;

 private:
  double v_ = 0.0;
};

inline constexpr std::uint32_t kDefaultLogBound = 4096;

// Smallest natural a <= bound with base^a == value. Throws BadBase for
// base in {0, 1, -1} and BoundExceeded when no such exponent exists.
std::uint32_t integer_log(const Rational& value, const Rational& base,
                          std::uint32_t bound = kDefaultLogBound);

// Same search, reporting failure as nullopt instead of BoundExceeded.
std::optional<std::uint32_t> try_integer_log(
    const Rational& value, const Rational& base,
    std::uint32_t bound = kDefaultLogBound);

}  // namespace prony

#endif  // PRONY_ARITH_HPP
