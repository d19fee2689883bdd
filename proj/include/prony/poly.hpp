#ifndef PRONY_POLY_HPP
#define PRONY_POLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prony/arith.hpp"

namespace prony {

// Exponent vector of a monomial. The same representation with signed
// coordinates serves as a lattice index into Z^n; functions that need N^n
// reject negative entries.
using Exponent = std::vector<int>;
using LatticeIndex = Exponent;

// Candidate support label in K^n.
using Point = std::vector<Rational>;

Exponent zero_exponent(std::size_t n);
Exponent unit_exponent(std::size_t n, std::size_t var);
int total_degree(const Exponent& e);
bool is_natural(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent add(const Exponent& a, const Exponent& b);
Exponent sub(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent scale(const Exponent& a, int k);
std::string to_string(const Exponent& e);

// x^e with 0^0 = 1; negative exponents invert (x must be nonzero there).
Rational monomial_value(const Point& x, const Exponent& e);

enum class OrderKind { lex, grlex, degrevlex };

class MonomialOrder {
 public:
  // Variables ranked by `precedence`: precedence[0] is the largest variable.
  // An empty precedence means the natural ranking X1 > X2 > ... > Xn.
  explicit MonomialOrder(OrderKind kind = OrderKind::degrevlex,
                         std::vector<std::size_t> precedence = {});

  static MonomialOrder parse(const std::string& name);

  OrderKind kind() const { return kind_; }
  std::string name() const;

  // -1, 0 or +1.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) < 0;
  }
  void sort(std::vector<Exponent>& exps) const;

 private:
  std::size_t var(std::size_t rank, std::size_t n) const;

  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

enum class Ordering { LT, EQ, GT };
Ordering order_compare(const MonomialOrder& ord, const Exponent& a,
                       const Exponent& b);

enum class FamilyKind { total, max, hyperbolic };

FamilyKind parse_family(const std::string& name);
std::string to_string(FamilyKind kind);

struct IndexFamily {
  FamilyKind kind = FamilyKind::total;
  std::size_t n = 1;
};

bool family_contains(const IndexFamily& fam, std::size_t d, const Exponent& e);

// Members of the family at order d, ascending in `ord`.
std::vector<Exponent> family_members(const IndexFamily& fam, std::size_t d,
                                     const MonomialOrder& ord = MonomialOrder());

// {a + b}, deduplicated and in lexicographic coordinate order.
std::vector<Exponent> minkowski_sum(const std::vector<Exponent>& a,
                                    const std::vector<Exponent>& b);
// {b - a : a in A, b in B}.
std::vector<Exponent> minkowski_difference(const std::vector<Exponent>& b,
                                           const std::vector<Exponent>& a);

bool is_order_ideal(const std::vector<Exponent>& d);

// (X1 D u ... u Xn D) \ D; border of the empty set is {1}. Throws
// NotOrderIdeal when D is not closed under divisibility.
std::vector<Exponent> border(const std::vector<Exponent>& d, std::size_t n,
                             const MonomialOrder& ord = MonomialOrder());

// Every member of D precedes every monomial outside D. Checked as
// order-ideal closure plus max(D) < min(border(D)), which is exact for any
// monomial order: each non-member is divisible by some border monomial.
bool is_distinguished(const std::vector<Exponent>& d, std::size_t n,
                      const MonomialOrder& ord);

// Sparse multivariate polynomial over Q in n variables.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Poly(std::size_t n = 0) : n_(n) {}
  Poly(std::size_t n, Terms terms);

  static Poly constant(std::size_t n, const Rational& c);
  static Poly monomial(const Exponent& e, const Rational& c = Rational(1));
  // Univariate polynomial from coefficients c0 + c1 X + ...
  static Poly univariate(const std::vector<Rational>& coeffs);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  int degree() const;  // total degree; -1 for the zero polynomial
  // Largest term under `ord`. Precondition: nonzero.
  Exponent leading_exponent(const MonomialOrder& ord) const;
  Rational leading_coeff(const MonomialOrder& ord) const;

  Rational eval(const Point& x) const;
  Poly scaled(const Rational& c) const;
  Poly shifted(const Exponent& e) const;  // multiply by X^e
  Poly monic(const MonomialOrder& ord) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str() const;

 private:
  std::size_t n_;
  Terms terms_;
};

Rational poly_eval(const Poly& p, const Point& x);

// Univariate coefficient vector (index = degree) of a polynomial in 1 var.
std::vector<Rational> univariate_coeffs(const Poly& p);

// Remainder of multivariate division of p by `divisors` under `ord`.
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors,
                 const MonomialOrder& ord);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Polynomial with coefficient vector `coeffs` over the monomials `support`.
Poly from_coefficients(const std::vector<Exponent>& support,
                       const std::vector<Rational>& coeffs, std::size_t n);

}  // namespace prony

#endif  // PRONY_POLY_HPP
