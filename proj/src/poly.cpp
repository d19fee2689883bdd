#include "prony/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace prony {

Exponent zero_exponent(std::size_t n) { return Exponent(n, 0); }

Exponent unit_exponent(std::size_t n, std::size_t var) {
  Exponent e(n, 0);
  e.at(var) = 1;
  return e;
}

int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool is_natural(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int v) { return v >= 0; });
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "exponent lengths differ");
  }
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent sub(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "exponent lengths differ");
  }
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent scale(const Exponent& a, int k) {
  Exponent r(a);
  for (int& v : r) v *= k;
  return r;
}

std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

Rational monomial_value(const Point& x, const Exponent& e) {
  if (x.size() != e.size()) {
    throw Error(Errc::DimensionMismatch, "point and exponent lengths differ");
  }
  Rational r(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) r *= x[i].pow(e[i]);
  }
  return r;
}

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> check = precedence_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) {
      throw Error(Errc::InvalidInput,
                  "variable precedence must be a permutation");
    }
  }
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return MonomialOrder(OrderKind::lex);
  if (name == "grlex") return MonomialOrder(OrderKind::grlex);
  if (name == "degrevlex") return MonomialOrder(OrderKind::degrevlex);
  throw Error(Errc::InvalidInput, "unknown monomial order '" + name + "'");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  return "degrevlex";
}

std::size_t MonomialOrder::var(std::size_t rank, std::size_t n) const {
  if (precedence_.empty()) return rank;
  if (precedence_.size() != n) {
    throw Error(Errc::DimensionMismatch,
                "monomial order defined for a different variable count");
  }
  return precedence_[rank];
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw Error(Errc::DimensionMismatch, "exponent lengths differ");
  }
  if (kind_ != OrderKind::lex) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind_ == OrderKind::degrevlex) {
    for (std::size_t r = n; r-- > 0;) {
      const std::size_t v = var(r, n);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t v = var(r, n);
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

void MonomialOrder::sort(std::vector<Exponent>& exps) const {
  std::sort(exps.begin(), exps.end(),
            [this](const Exponent& a, const Exponent& b) { return less(a, b); });
}

Ordering order_compare(const MonomialOrder& ord, const Exponent& a,
                       const Exponent& b) {
  const int c = ord.compare(a, b);
  return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
}

// ---------------------------------------------------------- index families

FamilyKind parse_family(const std::string& name) {
  if (name == "total" || name == "T") return FamilyKind::total;
  if (name == "max" || name == "M") return FamilyKind::max;
  if (name == "hyperbolic" || name == "C") return FamilyKind::hyperbolic;
  throw Error(Errc::InvalidInput, "unknown index family '" + name + "'");
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::total: return "total";
    case FamilyKind::max: return "max";
    case FamilyKind::hyperbolic: return "hyperbolic";
  }
  return "total";
}

bool family_contains(const IndexFamily& fam, std::size_t d, const Exponent& e) {
  if (e.size() != fam.n || !is_natural(e)) return false;
  const long bound = static_cast<long>(d);
  switch (fam.kind) {
    case FamilyKind::total:
      return total_degree(e) <= bound;
    case FamilyKind::max:
      return std::all_of(e.begin(), e.end(),
                         [bound](int v) { return v <= bound; });
    case FamilyKind::hyperbolic: {
      long prod = 1;
      for (int v : e) {
        prod *= (v + 1);
        if (prod > bound) return false;
      }
      return prod <= bound;
    }
  }
  return false;
}

namespace {

void enumerate(const IndexFamily& fam, std::size_t d, std::size_t var,
               Exponent& cur, long budget, std::vector<Exponent>& out) {
  if (var == fam.n) {
    out.push_back(cur);
    return;
  }
  const long dl = static_cast<long>(d);
  for (long v = 0;; ++v) {
    long next_budget = budget;
    switch (fam.kind) {
      case FamilyKind::total:
        if (v > budget) return;
        next_budget = budget - v;
        break;
      case FamilyKind::max:
        if (v > dl) return;
        break;
      case FamilyKind::hyperbolic:
        // budget holds the remaining product allowance
        if (v + 1 > budget) return;
        next_budget = budget / (v + 1);
        break;
    }
    cur[var] = static_cast<int>(v);
    enumerate(fam, d, var + 1, cur, next_budget, out);
  }
}

}  // namespace

std::vector<Exponent> family_members(const IndexFamily& fam, std::size_t d,
                                     const MonomialOrder& ord) {
  std::vector<Exponent> out;
  Exponent cur(fam.n, 0);
  if (fam.n == 0) {
    out.push_back(cur);
    return out;
  }
  enumerate(fam, d, 0, cur, static_cast<long>(d), out);
  ord.sort(out);
  return out;
}

std::vector<Exponent> minkowski_sum(const std::vector<Exponent>& a,
                                    const std::vector<Exponent>& b) {
  std::set<Exponent> s;
  for (const auto& x : a) {
    for (const auto& y : b) s.insert(add(x, y));
  }
  return {s.begin(), s.end()};
}

std::vector<Exponent> minkowski_difference(const std::vector<Exponent>& b,
                                           const std::vector<Exponent>& a) {
  std::set<Exponent> s;
  for (const auto& y : b) {
    for (const auto& x : a) s.insert(sub(y, x));
  }
  return {s.begin(), s.end()};
}

bool is_order_ideal(const std::vector<Exponent>& d) {
  const std::set<Exponent> members(d.begin(), d.end());
  for (const auto& e : d) {
    if (!is_natural(e)) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Exponent f = e;
      --f[i];
      if (!members.count(f)) return false;
    }
  }
  return true;
}

std::vector<Exponent> border(const std::vector<Exponent>& d, std::size_t n,
                             const MonomialOrder& ord) {
  if (d.empty()) return {zero_exponent(n)};
  if (!is_order_ideal(d)) {
    throw Error(Errc::NotOrderIdeal, "set is not closed under divisibility");
  }
  const std::set<Exponent> members(d.begin(), d.end());
  std::set<Exponent> out;
  for (const auto& e : d) {
    for (std::size_t i = 0; i < n; ++i) {
      Exponent f = e;
      ++f[i];
      if (!members.count(f)) out.insert(f);
    }
  }
  std::vector<Exponent> result(out.begin(), out.end());
  ord.sort(result);
  return result;
}

bool is_distinguished(const std::vector<Exponent>& d, std::size_t n,
                      const MonomialOrder& ord) {
  if (d.empty()) return true;
  if (!is_order_ideal(d)) return false;
  const auto max_d = *std::max_element(
      d.begin(), d.end(),
      [&ord](const Exponent& a, const Exponent& b) { return ord.less(a, b); });
  const auto bd = border(d, n, ord);
  return ord.less(max_d, bd.front());
}

// ------------------------------------------------------------ polynomials

Poly::Poly(std::size_t n, Terms terms) : n_(n) {
  for (auto& [e, c] : terms) {
    if (e.size() != n) {
      throw Error(Errc::DimensionMismatch, "exponent length differs from n");
    }
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

Poly Poly::constant(std::size_t n, const Rational& c) {
  Poly p(n);
  p.add_term(zero_exponent(n), c);
  return p;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::univariate(const std::vector<Rational>& coeffs) {
  Poly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term({static_cast<int>(i)}, coeffs[i]);
  }
  return p;
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) {
    throw Error(Errc::DimensionMismatch, "exponent length differs from n");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Exponent Poly::leading_exponent(const MonomialOrder& ord) const {
  if (terms_.empty()) {
    throw Error(Errc::InvalidInput, "leading term of the zero polynomial");
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (ord.less(best->first, it->first)) best = it;
  }
  return best->first;
}

Rational Poly::leading_coeff(const MonomialOrder& ord) const {
  return coeff(leading_exponent(ord));
}

Rational Poly::eval(const Point& x) const {
  if (x.size() != n_) {
    throw Error(Errc::DimensionMismatch, "point dimension differs from n");
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * monomial_value(x, e);
  return acc;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Poly Poly::shifted(const Exponent& e) const {
  Poly r(n_);
  for (const auto& [m, v] : terms_) r.terms_.emplace(add(m, e), v);
  return r;
}

Poly Poly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(leading_coeff(ord).inv());
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) {
    throw Error(Errc::DimensionMismatch, "polynomials in different rings");
  }
  Poly r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first for readability.
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  MonomialOrder ord;
  std::sort(ts.begin(), ts.end(), [&ord](const auto& x, const auto& y) {
    return ord.less(y.first, x.first);
  });
  for (const auto& [e, c] : ts) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    const bool is_const = total_degree(e) == 0;
    if (!mag.is_one() || is_const) {
      os << mag;
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "X" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Rational poly_eval(const Poly& p, const Point& x) { return p.eval(x); }

std::vector<Rational> univariate_coeffs(const Poly& p) {
  if (p.nvars() != 1) {
    throw Error(Errc::DimensionMismatch, "expected a univariate polynomial");
  }
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1,
                          Rational(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
  return c;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors,
                 const MonomialOrder& ord) {
  std::vector<Exponent> leads;
  std::vector<Rational> lcs;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) {
      leads.emplace_back();
      lcs.emplace_back(0);
      continue;
    }
    leads.push_back(g.leading_exponent(ord));
    lcs.push_back(g.coeff(leads.back()));
  }
  Poly rest = p;
  Poly rem(p.nvars());
  while (!rest.is_zero()) {
    const Exponent lt = rest.leading_exponent(ord);
    const Rational lc = rest.coeff(lt);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].empty() && divisors[i].is_zero()) continue;
      if (!divides(leads[i], lt)) continue;
      const Exponent shift = sub(lt, leads[i]);
      const Rational factor = lc / lcs[i];
      for (const auto& [e, c] : divisors[i].terms()) {
        rest.add_term(add(e, shift), -(factor * c));
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt, lc);
      rest.add_term(lt, -lc);
    }
  }
  return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const Exponent lf = f.leading_exponent(ord);
  const Exponent lg = g.leading_exponent(ord);
  const Exponent l = lcm(lf, lg);
  return f.shifted(sub(l, lf)).scaled(f.coeff(lf).inv()) -
         g.shifted(sub(l, lg)).scaled(g.coeff(lg).inv());
}

Poly from_coefficients(const std::vector<Exponent>& support,
                       const std::vector<Rational>& coeffs, std::size_t n) {
  if (support.size() != coeffs.size()) {
    throw Error(Errc::DimensionMismatch, "support and coefficient counts");
  }
  Poly p(n);
  for (std::size_t i = 0; i < support.size(); ++i) {
    p.add_term(support[i], coeffs[i]);
  }
  return p;
}

}  // namespace prony
