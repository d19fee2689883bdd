#ifndef PRONY_TESTS_GEN_HPP
#define PRONY_TESTS_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "prony/arith.hpp"
#include "prony/poly.hpp"

namespace prony::check {

// Hand-rolled generators for property tests. Every test owns its engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  Rational rational(long num_bound = 9, long den_bound = 5) {
    return Rational(mpz_class(integer(-num_bound, num_bound)),
                    mpz_class(integer(1, den_bound)));
  }

  Rational nonzero_rational(long num_bound = 9, long den_bound = 5) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }

  // Integer in [lo, hi] excluding zero.
  Rational nonzero_integer(long lo, long hi) {
    for (;;) {
      long v = integer(lo, hi);
      if (v != 0) return Rational(v);
    }
  }

  Exponent exponent(std::size_t n, int max_entry) {
    Exponent e(n);
    for (auto& v : e) v = static_cast<int>(integer(0, max_entry));
    return e;
  }

  // Distinct points with coordinates drawn by `coord`.
  template <class F>
  std::vector<Point> distinct_points(std::size_t count, std::size_t n, F coord) {
    std::set<Point> seen;
    std::vector<Point> out;
    while (out.size() < count) {
      Point p(n);
      for (auto& c : p) c = coord();
      if (seen.insert(p).second) out.push_back(p);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace prony::check

#endif  // PRONY_TESTS_GEN_HPP
