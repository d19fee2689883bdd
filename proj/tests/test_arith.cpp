#include <gtest/gtest.h>

#include "prony/arith.hpp"
#include "support/gen.hpp"

using prony::Approx;
using prony::Errc;
using prony::Error;
using prony::Rational;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidInput;
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-0/7").str(), "0");
  EXPECT_EQ(Rational::parse("-0/7").denominator(), 1);
  EXPECT_EQ(Rational::parse("17").str(), "17");
  EXPECT_EQ(Rational::parse("-12/8").str(), "-3/2");
}

TEST(Rational, ParseRejects) {
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), Errc::ZeroDenominator);
  EXPECT_EQ(code_of([] { Rational::parse(""); }), Errc::MalformedLiteral);
  EXPECT_EQ(code_of([] { Rational::parse("1.5"); }), Errc::MalformedLiteral);
  EXPECT_EQ(code_of([] { Rational::parse("1/-2"); }), Errc::MalformedLiteral);
  EXPECT_EQ(code_of([] { Rational::parse("+3"); }), Errc::MalformedLiteral);
  EXPECT_EQ(code_of([] { Rational::parse("--3"); }), Errc::MalformedLiteral);
}

TEST(Rational, FieldOps) {
  EXPECT_EQ(Rational::parse("1/2") + Rational::parse("1/3"),
            Rational::parse("5/6"));
  EXPECT_EQ(Rational::parse("-2/7").inv(), Rational::parse("-7/2"));
  EXPECT_EQ(Rational::parse("1/3") * Rational(3), Rational(1));
  EXPECT_EQ(code_of([] { Rational(0).inv(); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)(Rational(1) / Rational(0)); }),
            Errc::DivisionByZero);
  EXPECT_LT(Rational::parse("-1/2"), Rational::parse("1/3"));
  EXPECT_EQ(Rational(2).pow(-3), Rational::parse("1/8"));
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
}

TEST(Rational, FieldAxiomsProperty) {
  prony::check::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = g.rational(50, 30), b = g.rational(50, 30),
             c = g.rational(50, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), Rational(1));
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_GT(a.denominator(), 0);
    EXPECT_EQ(gcd(a.numerator(), a.denominator()) == 1 || a.is_zero(), true);
  }
}

TEST(IntegerLog, Examples) {
  EXPECT_EQ(prony::integer_log(Rational(8), Rational(2)), 3u);
  EXPECT_EQ(prony::integer_log(Rational(1), Rational(5)), 0u);
  EXPECT_EQ(prony::integer_log(Rational::parse("1/27"), Rational::parse("1/3")),
            3u);
  EXPECT_EQ(prony::integer_log(Rational(-8), Rational(-2)), 3u);
  EXPECT_EQ(prony::integer_log(Rational(16), Rational(-2)), 4u);
}

TEST(IntegerLog, Errors) {
  for (int b : {0, 1, -1}) {
    EXPECT_EQ(code_of([b] { prony::integer_log(Rational(8), Rational(b)); }),
              Errc::BadBase);
  }
  EXPECT_EQ(code_of([] { prony::integer_log(Rational(6), Rational(2)); }),
            Errc::BoundExceeded);
  EXPECT_EQ(code_of([] { prony::integer_log(Rational(-8), Rational(2)); }),
            Errc::BoundExceeded);
  EXPECT_EQ(code_of([] { prony::integer_log(Rational(1024), Rational(2), 9); }),
            Errc::BoundExceeded);
  EXPECT_FALSE(prony::try_integer_log(Rational(0), Rational(3)).has_value());
}

TEST(IntegerLog, InvertsPowersProperty) {
  prony::check::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    Rational b = g.nonzero_rational(7, 4);
    if (b.abs() == Rational(1)) continue;
    const auto a = static_cast<long>(g.integer(0, 60));
    EXPECT_EQ(prony::integer_log(b.pow(a), b), static_cast<std::uint32_t>(a));
  }
}

TEST(Approx, RejectsNonFinite) {
  EXPECT_EQ(code_of([] { Approx(1.0) / Approx(0.0); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { Approx(1e308) * Approx(1e308); }), Errc::NonFinite);
  EXPECT_DOUBLE_EQ((Approx(1.5) + Approx(2.0)).value(), 3.5);
}
