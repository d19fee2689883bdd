#ifndef PRONY_RELATIVE_HPP
#define PRONY_RELATIVE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "prony/linalg.hpp"
#include "prony/oracle.hpp"
#include "prony/poly.hpp"
#include "prony/prony.hpp"
#include "prony/vanish.hpp"

namespace prony {

// Algebraic set Y given by a Groebner basis of I(Y). The constructor checks
// that the leading terms are pairwise non-dividing and, for at most four
// generators, that every S-polynomial reduces to zero. Throws NotGroebner.
class AlgebraicSet {
 public:
  AlgebraicSet(std::size_t n, std::vector<Poly> generators,
               MonomialOrder order = MonomialOrder());

  std::size_t n() const { return n_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  bool contains(const Point& x) const;

 private:
  std::size_t n_;
  std::vector<Poly> gens_;
  MonomialOrder order_;
};

// Standard monomials H_d of J_d modulo I(Y), and the normal form of every
// other member of J_d, which is supported on H_d.
struct CoordinateBasis {
  std::vector<Exponent> retained;
  std::map<Exponent, Poly> reduction;
};

// Throws DegreeLeak when a normal form leaves J_d.
CoordinateBasis coordinate_basis(const AlgebraicSet& y,
                                 const std::vector<Exponent>& degree_set);

// Hankel over rows x H_d, H_d taken from `cols` at degree d.
Matrix relative_hankel(std::size_t d, SampleOracle& f, const AlgebraicSet& y,
                       IndexFamily rows, IndexFamily cols, int row_offset = -1);
// Hankel over H_d x H_d.
Matrix relative_hankel_square(std::size_t d, SampleOracle& f,
                              const AlgebraicSet& y, IndexFamily cols);

// Span of the kernel and the multiples m g of the generators supported in
// `degree_set`, as vanishing data for the zero-locus step.
VanishingSpace relative_relations(const std::vector<Poly>& kernel,
                                  const AlgebraicSet& y,
                                  std::vector<Exponent> degree_set);

// Common rational zeros of the kernel and I(Y) at the given degree set.
// Propagates DegreeInsufficient and IrrationalSpectrum.
PointSet relative_zero_locus(const std::vector<Poly>& kernel,
                             const AlgebraicSet& y,
                             const std::vector<Exponent>& degree_set);

// Pipeline structure whose columns are H_d. With `square` the rows are H_d
// as well, otherwise the row family at max(d + row_offset, 0).
PronyStructureSpec relative_structure(const AlgebraicSet& y,
                                      FamilyKind cols = FamilyKind::total,
                                      FamilyKind rows = FamilyKind::total,
                                      int row_offset = -1, bool square = false);

}  // namespace prony

#endif  // PRONY_RELATIVE_HPP
