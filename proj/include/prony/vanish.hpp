#ifndef PRONY_VANISH_HPP
#define PRONY_VANISH_HPP

#include <cstddef>
#include <vector>

#include "prony/linalg.hpp"
#include "prony/poly.hpp"

namespace prony {

// Finite set of pairwise distinct points of K^n.
class PointSet {
 public:
  explicit PointSet(std::size_t n = 0) : n_(n) {}
  // Throws DimensionMismatch on wrong lengths, InvalidInput on duplicates.
  PointSet(std::size_t n, std::vector<Point> points);

  std::size_t n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  bool contains(const Point& p) const;
  // Points in lexicographic coordinate order; used for set comparison.
  PointSet sorted() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.sorted().points_ == b.sorted().points_;
  }

 private:
  std::size_t n_;
  std::vector<Point> points_;
};

struct VanishingSpace {
  std::size_t n = 0;
  std::vector<Exponent> degree_set;  // ascending in the order used
  std::vector<Poly> basis;           // supported on degree_set
};

struct MoellerBasis {
  std::vector<Poly> groebner;
  std::vector<Exponent> normal_set;  // C, ascending
  MonomialOrder order;
  std::vector<Exponent> degree_set;  // D, ascending
  std::vector<Exponent> border;      // border of D, ascending
};

// Rows indexed by the points, columns by `d` in the given order; entry x^a.
// Negative exponents are allowed for points with nonzero coordinates.
Matrix vandermonde(const std::vector<Exponent>& d, const PointSet& x);

// Values of p at every point of x.
Vector evaluate(const Poly& p, const PointSet& x);

// Kernel of the evaluation map on polynomials supported on d. `d` is sorted
// ascending in `ord` first.
VanishingSpace vanishing_space(std::vector<Exponent> d, const PointSet& x,
                               const MonomialOrder& ord = MonomialOrder());

// Turns a list of coefficient vectors over `support` into polynomials.
std::vector<Poly> polys_from_vectors(const std::vector<Vector>& vecs,
                                     const std::vector<Exponent>& support,
                                     std::size_t n);

// Groebner basis of I(x) with support in D u border(D). Requires D to be a
// distinguished order ideal (NotDistinguished) and ev_{D,x} to be onto
// (NotSurjective).
MoellerBasis moeller_basis(const PointSet& x, std::vector<Exponent> d,
                           const MonomialOrder& ord);

// Reduced Groebner basis extracted from a Moeller basis: the elements whose
// leading monomial is a minimal generator of the initial ideal. Their tails
// already lie in the normal set.
std::vector<Poly> reduced_groebner(const MoellerBasis& basis);

inline std::size_t stabilization_bound(const PointSet& x) { return x.size(); }

// Normal form modulo the basis is zero.
bool ideal_membership(const Poly& p, const MoellerBasis& basis);

// Every S-polynomial of a pair reduces to zero.
bool buchberger_criterion(const std::vector<Poly>& g, const MonomialOrder& ord);

}  // namespace prony

#endif  // PRONY_VANISH_HPP
