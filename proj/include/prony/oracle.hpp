#ifndef PRONY_ORACLE_HPP
#define PRONY_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "prony/arith.hpp"
#include "prony/poly.hpp"

namespace prony {

enum class Domain { nat, integer };

inline std::string to_string(Domain d) { return d == Domain::nat ? "nat" : "int"; }

// Memoized black-box access to a sequence on N^n or Z^n. The counter is the
// number of distinct indices asked for. A table-backed oracle without a
// fallback function answers only the indices it holds.
template <class T>
class BasicOracle {
 public:
  using Fn = std::function<T(const LatticeIndex&)>;

  BasicOracle(std::size_t n, Domain domain, Fn fn)
      : n_(n), domain_(domain), fn_(std::move(fn)) {}

  static BasicOracle from_table(std::size_t n, Domain domain,
                                std::map<LatticeIndex, T> table,
                                Fn fallback = nullptr) {
    BasicOracle o(n, domain, std::move(fallback));
    o.table_ = std::move(table);
    return o;
  }

  std::size_t n() const { return n_; }
  Domain domain() const { return domain_; }
  std::size_t count() const { return cache_.size(); }
  void reset_count() { cache_.clear(); }

  bool in_domain(const LatticeIndex& a) const {
    return a.size() == n_ && (domain_ == Domain::integer || is_natural(a));
  }

  bool has(const LatticeIndex& a) const {
    return in_domain(a) && (fn_ || table_.count(a));
  }

  // Throws MissingSample naming every index in `needed` the oracle cannot
  // answer, DomainMismatch for indices outside the domain.
  void require(const std::vector<LatticeIndex>& needed) const {
    std::set<LatticeIndex> missing;
    for (const auto& a : needed) {
      check_domain(a);
      if (!has(a)) missing.insert(a);
    }
    if (!missing.empty()) {
      throw MissingSampleError({missing.begin(), missing.end()});
    }
  }

  T operator()(const LatticeIndex& a) { return query(a); }

  T query(const LatticeIndex& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    check_domain(a);
    T value;
    auto t = table_.find(a);
    if (t != table_.end()) {
      value = t->second;
    } else if (fn_) {
      value = fn_(a);
    } else {
      throw MissingSampleError({a});
    }
    if constexpr (std::is_floating_point_v<T>) {
      if (!std::isfinite(value)) {
        throw Error(Errc::NonFinite, "oracle value is not finite");
      }
    }
    cache_.emplace(a, value);
    return value;
  }

 private:
  void check_domain(const LatticeIndex& a) const {
    if (a.size() != n_) {
      throw Error(Errc::DimensionMismatch, "lattice index has wrong length");
    }
    if (domain_ == Domain::nat && !is_natural(a)) {
      throw Error(Errc::DomainMismatch,
                  "negative index " + to_string(a) + " for an N^n oracle");
    }
  }

  std::size_t n_;
  Domain domain_;
  Fn fn_;
  std::map<LatticeIndex, T> table_;
  std::map<LatticeIndex, T> cache_;
};

using SampleOracle = BasicOracle<Rational>;
using FloatOracle = BasicOracle<double>;

}  // namespace prony

#endif  // PRONY_ORACLE_HPP
