#include "prony/structures.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

namespace prony {

// ------------------------------------------------------------ builders

Matrix hankel_matrix(const std::vector<Exponent>& rows,
                     const std::vector<Exponent>& cols, SampleOracle& f) {
  std::vector<LatticeIndex> needed;
  for (const auto& a : rows) {
    for (const auto& b : cols) needed.push_back(add(a, b));
  }
  f.require(needed);
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = f(add(rows[i], cols[j]));
  }
  m.set_row_labels(rows);
  m.set_col_labels(cols);
  return m;
}

Matrix toeplitz_matrix(const std::vector<Exponent>& rows,
                       const std::vector<Exponent>& cols, SampleOracle& f) {
  if (f.domain() != Domain::integer) {
    throw Error(Errc::DomainMismatch, "Toeplitz structure needs samples on Z^n");
  }
  std::vector<LatticeIndex> needed;
  for (const auto& a : rows) {
    for (const auto& b : cols) needed.push_back(sub(b, a));
  }
  f.require(needed);
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = f(sub(cols[j], rows[i]));
  }
  m.set_row_labels(rows);
  m.set_col_labels(cols);
  return m;
}

Matrix chebyshev_raw(std::size_t d, SampleOracle& f) {
  const std::size_t nrows = std::max<std::size_t>(d, 1);
  std::vector<LatticeIndex> needed;
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      needed.push_back({static_cast<int>(i + j)});
      needed.push_back({static_cast<int>(i > j ? i - j : j - i)});
    }
  }
  f.require(needed);
  Matrix m(nrows, d + 1);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      m(i, j) = f({static_cast<int>(i + j)}) +
                f({static_cast<int>(i > j ? i - j : j - i)});
    }
  }
  return m;
}

Matrix chebyshev_psi(std::size_t d) {
  Matrix psi(d + 1, d + 1);
  // X^0 = T_0; X^j = X * X^{j-1} with X T_0 = T_1, X T_k = (T_{k+1} + T_{k-1}) / 2.
  Vector cur(d + 1, Rational(0));
  cur[0] = Rational(1);
  const Rational half(mpz_class(1), mpz_class(2));
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t k = 0; k <= d; ++k) psi(k, j) = cur[k];
    Vector next(d + 2, Rational(0));
    for (std::size_t k = 0; k <= d; ++k) {
      if (cur[k].is_zero()) continue;
      if (k == 0) {
        next[1] += cur[0];
      } else {
        next[k + 1] += cur[k] * half;
        next[k - 1] += cur[k] * half;
      }
    }
    next.resize(d + 1);
    cur = std::move(next);
  }
  return psi;
}

Matrix chebyshev_matrix(std::size_t d, SampleOracle& f) {
  Matrix p = chebyshev_raw(d, f) * chebyshev_psi(d);
  std::vector<Exponent> cols;
  for (std::size_t j = 0; j <= d; ++j) cols.push_back({static_cast<int>(j)});
  p.set_col_labels(std::move(cols));
  return p;
}

std::vector<std::pair<std::size_t, Rational>> cheb_linearize(std::size_t i,
                                                             std::size_t j) {
  const Rational half(mpz_class(1), mpz_class(2));
  const std::size_t hi = i + j;
  const std::size_t lo = i > j ? i - j : j - i;
  if (hi == lo) return {{hi, Rational(1)}};
  return {{hi, half}, {lo, half}};
}

Rational chebyshev_t(std::size_t i, const Rational& x) {
  if (i == 0) return Rational(1);
  Rational prev(1);
  Rational cur = x;
  const Rational two_x = x * Rational(2);
  for (std::size_t k = 1; k < i; ++k) {
    Rational next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

void check_operator(const OperatorSpec& s) {
  if (s.phi.empty()) throw Error(Errc::SpecInvalid, "operator list is empty");
  const std::size_t m = s.start.size();
  if (s.delta.size() != m) {
    throw Error(Errc::SpecInvalid, "functional and start vector sizes differ");
  }
  for (const auto& p : s.phi) {
    if (p.rows() != m || p.cols() != m) {
      throw Error(Errc::SpecInvalid, "operator has the wrong shape");
    }
  }
  for (std::size_t i = 0; i < s.phi.size(); ++i) {
    for (std::size_t j = i + 1; j < s.phi.size(); ++j) {
      if (!(s.phi[i] * s.phi[j] == s.phi[j] * s.phi[i])) {
        throw Error(Errc::NonCommuting, "operators do not commute");
      }
    }
  }
}

SampleOracle operator_oracle(const OperatorSpec& s) {
  check_operator(s);
  // Cache of phi^g v; a miss walks down to the nearest cached index.
  auto cache = std::make_shared<std::map<LatticeIndex, Vector>>();
  auto spec = std::make_shared<OperatorSpec>(s);
  const std::size_t n = s.phi.size();
  cache->emplace(LatticeIndex(n, 0), s.start);
  return SampleOracle(n, Domain::nat, [cache, spec](const LatticeIndex& g) {
    std::vector<std::pair<LatticeIndex, std::size_t>> path;
    LatticeIndex h = g;
    auto it = cache->find(h);
    while (it == cache->end()) {
      const auto i = static_cast<std::size_t>(
          std::find_if(h.begin(), h.end(), [](int x) { return x > 0; }) -
          h.begin());
      path.emplace_back(h, i);
      --h[i];
      it = cache->find(h);
    }
    Vector v = it->second;
    for (auto step = path.rbegin(); step != path.rend(); ++step) {
      v = spec->phi[step->second] * v;
      cache->emplace(step->first, v);
    }
    Rational acc(0);
    for (std::size_t k = 0; k < v.size(); ++k) acc += spec->delta[k] * v[k];
    return acc;
  });
}

}  // namespace

Matrix operator_builder(std::size_t d, const OperatorSpec& spec,
                        IndexFamily rows, IndexFamily cols, int row_offset) {
  SampleOracle f = operator_oracle(spec);
  const long dr = static_cast<long>(d) + row_offset;
  return hankel_matrix(
      family_members(rows, static_cast<std::size_t>(std::max(dr, 0L))),
      family_members(cols, d), f);
}

// ---------------------------------------------------------- generators

std::vector<Rational> default_bases(std::size_t n) {
  std::vector<Rational> out;
  for (long c = 2; out.size() < n; ++c) {
    bool prime = true;
    for (long p = 2; p * p <= c; ++p) prime = prime && c % p != 0;
    if (prime) out.emplace_back(c);
  }
  return out;
}

namespace {

std::vector<Rational> poly_bases(const PolySpec& s) {
  const std::size_t n = s.p.nvars();
  if (s.bases.empty()) return default_bases(s.kronecker_base ? 1 : n);
  return s.bases;
}

bool positive_definite(const Matrix& a) {
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const Poly cp = char_poly(a.select(idx, idx));
    // det = (-1)^k cp(0)
    Rational det = cp.coeff({0});
    if (k % 2) det = -det;
    if (det.sign() <= 0) return false;
  }
  return true;
}

}  // namespace

void validate(const GeneratorSpec& g) {
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ExpSumSpec>) {
          for (const auto& t : s.terms) {
            if (t.base.size() != s.n) {
              throw Error(Errc::SpecInvalid, "base has the wrong dimension");
            }
            if (s.domain == Domain::integer) {
              for (const auto& b : t.base) {
                if (b.is_zero()) {
                  throw Error(Errc::SpecInvalid,
                              "bases must be nonzero on the Z^n domain");
                }
              }
            }
          }
        } else if constexpr (std::is_same_v<S, PolySpec>) {
          const auto bases = poly_bases(s);
          const std::size_t want = s.kronecker_base ? 1 : s.p.nvars();
          if (bases.size() != want) {
            throw Error(Errc::SpecInvalid, "wrong number of evaluation bases");
          }
          for (const auto& b : bases) {
            if (b.is_zero() || b.abs() == Rational(1)) {
              throw Error(Errc::SpecInvalid, "evaluation base must not be 0 or +-1");
            }
          }
          if (s.kronecker_base) {
            for (const auto& [e, c] : s.p.terms()) {
              for (int v : e) {
                if (v >= static_cast<int>(s.kronecker_base)) {
                  throw Error(Errc::SpecInvalid,
                              "exponent exceeds the Kronecker base");
                }
              }
            }
          }
        } else if constexpr (std::is_same_v<S, GaussianSpec>) {
          if (s.a.rows() != s.n || s.a.cols() != s.n) {
            throw Error(Errc::SpecInvalid, "A must be n x n");
          }
          if (!(s.a == s.a.transpose()) || !positive_definite(s.a)) {
            throw Error(Errc::SpecInvalid, "A must be symmetric positive definite");
          }
          for (const auto& t : s.terms) {
            if (t.center.size() != s.n) {
              throw Error(Errc::SpecInvalid, "center has the wrong dimension");
            }
          }
        } else if constexpr (std::is_same_v<S, OperatorSpec>) {
          check_operator(s);
        } else if constexpr (std::is_same_v<S, ChebPolySpec>) {
          if (s.base.is_zero()) throw Error(Errc::SpecInvalid, "zero Chebyshev base");
        }
      },
      g);
}

std::size_t generator_dimension(const GeneratorSpec& g) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ExpSumSpec>) return s.n;
        if constexpr (std::is_same_v<S, PolySpec>) {
          return s.kronecker_base ? 1 : s.p.nvars();
        }
        if constexpr (std::is_same_v<S, GaussianSpec>) return s.n;
        if constexpr (std::is_same_v<S, OperatorSpec>) return s.phi.size();
        return 1;
      },
      g);
}

SampleOracle oracle_from_generator(const GeneratorSpec& g) {
  validate(g);
  if (std::holds_alternative<ExpSumSpec>(g)) {
    const auto s = std::get<ExpSumSpec>(g);
    return SampleOracle(s.n, s.domain, [s](const LatticeIndex& a) {
      Rational acc(0);
      for (const auto& t : s.terms) acc += t.coeff * monomial_value(t.base, a);
      return acc;
    });
  }
  if (std::holds_alternative<ChebSumSpec>(g)) {
    const auto s = std::get<ChebSumSpec>(g);
    return SampleOracle(1, Domain::nat, [s](const LatticeIndex& a) {
      Rational acc(0);
      for (const auto& t : s.terms) {
        acc += t.coeff * chebyshev_t(static_cast<std::size_t>(a[0]), t.base);
      }
      return acc;
    });
  }
  if (std::holds_alternative<ChebPolySpec>(g)) {
    const auto s = std::get<ChebPolySpec>(g);
    return SampleOracle(1, Domain::nat, [s](const LatticeIndex& a) {
      const Rational y = chebyshev_t(static_cast<std::size_t>(a[0]), s.base);
      Rational acc(0);
      for (const auto& [j, c] : s.coeffs) acc += c * chebyshev_t(j, y);
      return acc;
    });
  }
  if (std::holds_alternative<PolySpec>(g)) {
    const auto s = std::get<PolySpec>(g);
    const auto bases = poly_bases(s);
    if (s.kronecker_base) {
      // q(Z) = p(Z, Z^D, ...) evaluated at Z = b^k.
      std::vector<std::pair<long, Rational>> q;
      for (const auto& [e, c] : s.p.terms()) {
        long ex = 0;
        long w = 1;
        for (int v : e) {
          ex += v * w;
          w *= static_cast<long>(s.kronecker_base);
        }
        q.emplace_back(ex, c);
      }
      const Rational b = bases[0];
      return SampleOracle(1, Domain::nat, [q, b](const LatticeIndex& a) {
        Rational acc(0);
        for (const auto& [ex, c] : q) acc += c * b.pow(ex * a[0]);
        return acc;
      });
    }
    const std::size_t n = s.p.nvars();
    return SampleOracle(n, Domain::nat, [s, bases, n](const LatticeIndex& a) {
      Point x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = bases[j].pow(a[j]);
      return s.p.eval(x);
    });
  }
  if (std::holds_alternative<OperatorSpec>(g)) {
    return operator_oracle(std::get<OperatorSpec>(g));
  }
  throw Error(Errc::SpecInvalid, "Gaussian generators need the float oracle");
}

FloatOracle float_oracle_from_generator(const GaussianSpec& s) {
  validate(GeneratorSpec(s));
  const std::size_t n = s.n;
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s.a(i, j).to_double();
  }
  const auto terms = s.terms;
  return FloatOracle(n, Domain::integer, [a, terms, n](const LatticeIndex& g) {
    auto quad = [&a, n](const std::vector<double>& v) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) acc += v[i] * a[i][j] * v[j];
      }
      return acc;
    };
    std::vector<double> x(g.begin(), g.end());
    const double lift = quad(x);
    double acc = 0.0;
    for (const auto& t : terms) {
      std::vector<double> diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - t.center[i];
      acc += t.coeff * std::exp(lift - quad(diff));
    }
    return acc;
  });
}

// ------------------------------------------------------------ decoding

std::vector<Exponent> decode_monomial(const PointSet& labels,
                                      const std::vector<Rational>& bases) {
  std::vector<Exponent> out;
  for (const auto& x : labels.points()) {
    Exponent e(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto a = try_integer_log(x[j], bases.at(j));
      if (!a) {
        throw Error(Errc::DecodeFailure,
                    x[j].str() + " is not a power of " + bases[j].str());
      }
      e[j] = static_cast<int>(*a);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Exponent> decode_kronecker(const PointSet& labels,
                                       const Rational& base, std::size_t n,
                                       std::size_t kron) {
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound *= kron;
  std::vector<Exponent> out;
  for (const auto& x : labels.points()) {
    auto a = try_integer_log(x.at(0), base, static_cast<std::uint32_t>(bound));
    if (!a) {
      throw Error(Errc::DecodeFailure,
                  x[0].str() + " is not a power of " + base.str());
    }
    Exponent e(n);
    std::uint64_t rest = *a;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<int>(rest % kron);
      rest /= kron;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::size_t> decode_chebyshev(const PointSet& labels,
                                          const Rational& base) {
  std::vector<std::size_t> out;
  const bool growing = base.abs() > Rational(1);
  for (const auto& x : labels.points()) {
    const Rational target = x.at(0);
    Rational prev(1);
    Rational cur = base;
    std::optional<std::size_t> found;
    if (target == prev) found = 0;
    for (std::size_t i = 1; !found && i <= kDefaultLogBound; ++i) {
      if (cur == target) {
        found = i;
        break;
      }
      if (growing && cur.abs() > target.abs() + Rational(1)) break;
      Rational next = Rational(2) * base * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (!found) {
      throw Error(Errc::DecodeFailure,
                  target.str() + " is not a Chebyshev value at " + base.str());
    }
    out.push_back(*found);
  }
  return out;
}

GaussianDecoded decode_gaussian(const std::vector<std::vector<double>>& labels,
                                const std::vector<double>& mu, const Matrix& a) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd am(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      am(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                     .to_double();
    }
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(2.0 * am);
  GaussianDecoded out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    Eigen::VectorXd l(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double z = labels[k][static_cast<std::size_t>(i)];
      if (!(z > 0.0)) {
        throw Error(Errc::DecodeFailure, "Gaussian label must be positive");
      }
      l(i) = std::log(z);
    }
    const Eigen::VectorXd t = lu.solve(l);
    out.centers.emplace_back(t.data(), t.data() + t.size());
    out.coeffs.push_back(mu.at(k) * std::exp(t.dot(am * t)));
  }
  return out;
}

// --------------------------------------------------- pullback and projection

SampleOracle pullback_oracle(SampleOracle& base,
                             const std::vector<LatticeIndex>& gens) {
  for (const auto& g : gens) {
    if (g.size() != base.n()) {
      throw Error(Errc::DimensionMismatch, "generator has the wrong dimension");
    }
  }
  SampleOracle* src = &base;
  return SampleOracle(gens.size(), Domain::nat, [src, gens](const LatticeIndex& g) {
    LatticeIndex target(src->n(), 0);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t i = 0; i < target.size(); ++i) target[i] += g[j] * gens[j][i];
    }
    return src->query(target);
  });
}

SampleOracle projection_oracle(SampleOracle& base, const LatticeIndex& alpha) {
  if (std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; })) {
    throw Error(Errc::ZeroDirection, "projection direction is zero");
  }
  return pullback_oracle(base, {alpha});
}

// ------------------------------------------------------ structure factories

PronyStructureSpec hankel_structure(std::size_t n, FamilyKind cols,
                                    FamilyKind rows, int row_offset) {
  PronyStructureSpec s;
  s.kind = "hankel";
  s.n = n;
  s.cols = {cols, n};
  s.rows = {rows, n};
  s.row_offset = row_offset;
  s.domain = Domain::nat;
  s.builder = [s](std::size_t d, SampleOracle& f) {
    return hankel_matrix(s.row_set(d), s.column_set(d), f);
  };
  return s;
}

PronyStructureSpec toeplitz_structure(std::size_t n, FamilyKind cols,
                                      FamilyKind rows, int row_offset) {
  PronyStructureSpec s;
  s.kind = "toeplitz";
  s.n = n;
  s.cols = {cols, n};
  s.rows = {rows, n};
  s.row_offset = row_offset;
  s.domain = Domain::integer;
  s.builder = [s](std::size_t d, SampleOracle& f) {
    return toeplitz_matrix(s.row_set(d), s.column_set(d), f);
  };
  return s;
}

PronyStructureSpec chebyshev_structure() {
  PronyStructureSpec s;
  s.kind = "chebyshev";
  s.n = 1;
  s.builder = [](std::size_t d, SampleOracle& f) { return chebyshev_matrix(d, f); };
  s.basis_value = [](const Point& x, const Exponent& g) {
    return chebyshev_t(static_cast<std::size_t>(g[0]), x[0]);
  };
  return s;
}

PronyStructureSpec fixed_structure(std::size_t n, Matrix m,
                                   std::vector<Exponent> cols) {
  PronyStructureSpec s;
  s.kind = "fixed";
  s.n = n;
  m.set_col_labels(cols);
  s.builder = [m](std::size_t, SampleOracle&) { return m; };
  s.columns = [cols](std::size_t) { return cols; };
  return s;
}

EvalCounts evaluation_counts(std::size_t n, FamilyKind rows, FamilyKind cols,
                             std::size_t d, int row_offset) {
  const long dr = static_cast<long>(d) + row_offset;
  const auto r = family_members({rows, n}, static_cast<std::size_t>(std::max(dr, 0L)));
  const auto c = family_members({cols, n}, d);
  return {minkowski_sum(r, c).size(), minkowski_difference(c, r).size()};
}

}  // namespace prony
