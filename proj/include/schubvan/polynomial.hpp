#pragma once

// Exact sparse multivariate polynomials over Z.
//
// Variables are indexed from 0 (x_1 is variable 0). Monomials are stored
// sparsely as (variable, exponent) pairs, which keeps lifted systems with
// thousands of variables cheap. Coefficients are arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubvan/errors.hpp"

namespace schubvan {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector x_1^{e_1} x_2^{e_2} ... with trailing zeros trimmed.
///
/// Ordered lexicographically on (e_1, e_2, ...): the monomial with the larger
/// entry at the first differing position is the greater one.
class MonomialKey {
 public:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  MonomialKey() = default;

  static MonomialKey from_exponents(std::span<const int> dense) {
    MonomialKey m;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] < 0) throw MalformedInput("negative exponent");
      if (dense[i] > 0)
        m.factors_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(dense[i])});
    }
    return m;
  }

  static MonomialKey from_exponents(std::initializer_list<int> dense) {
    std::vector<int> v(dense);
    return from_exponents(std::span<const int>(v));
  }

  static MonomialKey variable(int var, int exp = 1) {
    MonomialKey m;
    if (exp > 0)
      m.factors_.push_back({static_cast<std::uint32_t>(var), static_cast<std::uint32_t>(exp)});
    return m;
  }

  int exponent(int var) const {
    for (const Factor& f : factors_)
      if (f.var == static_cast<std::uint32_t>(var)) return static_cast<int>(f.exp);
    return 0;
  }

  int degree() const {
    int d = 0;
    for (const Factor& f : factors_) d += static_cast<int>(f.exp);
    return d;
  }

  bool is_constant() const { return factors_.empty(); }

  /// One past the largest variable index present (0 for a constant).
  int span_vars() const { return factors_.empty() ? 0 : static_cast<int>(factors_.back().var) + 1; }

  std::vector<int> dense(int nvars = 0) const {
    std::vector<int> d(std::max(nvars, span_vars()), 0);
    for (const Factor& f : factors_) d[f.var] = static_cast<int>(f.exp);
    return d;
  }

  const std::vector<Factor>& factors() const { return factors_; }

  /// Reverse lexicographic comparison: scan from the highest variable down;
  /// the larger exponent at the first difference wins.
  friend bool revlex_less(const MonomialKey& a, const MonomialKey& b) {
    auto i = a.factors_.rbegin(), j = b.factors_.rbegin();
    for (; i != a.factors_.rend() && j != b.factors_.rend(); ++i, ++j) {
      if (i->var != j->var) return i->var < j->var;
      if (i->exp != j->exp) return i->exp < j->exp;
    }
    return i == a.factors_.rend() && j != b.factors_.rend();
  }

  /// Copy with the exponent of `var` replaced.
  MonomialKey with_exponent(int var, int exp) const {
    MonomialKey m;
    const auto v = static_cast<std::uint32_t>(var);
    bool placed = false;
    for (const Factor& f : factors_) {
      if (!placed && f.var >= v) {
        if (exp > 0) m.factors_.push_back({v, static_cast<std::uint32_t>(exp)});
        placed = true;
        if (f.var == v) continue;
      }
      m.factors_.push_back(f);
    }
    if (!placed && exp > 0) m.factors_.push_back({v, static_cast<std::uint32_t>(exp)});
    return m;
  }

  friend MonomialKey operator*(const MonomialKey& a, const MonomialKey& b) {
    MonomialKey m;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
      if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].var < b.factors_[j].var)) {
        m.factors_.push_back(a.factors_[i++]);
      } else if (i == a.factors_.size() || b.factors_[j].var < a.factors_[i].var) {
        m.factors_.push_back(b.factors_[j++]);
      } else {
        m.factors_.push_back({a.factors_[i].var, a.factors_[i].exp + b.factors_[j].exp});
        ++i;
        ++j;
      }
    }
    return m;
  }

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;

  friend std::strong_ordering operator<=>(const MonomialKey& a, const MonomialKey& b) {
    std::size_t i = 0;
    for (; i < a.factors_.size() && i < b.factors_.size(); ++i) {
      const Factor& fa = a.factors_[i];
      const Factor& fb = b.factors_[i];
      // The side whose next nonzero entry comes first has the larger entry there.
      if (fa.var != fb.var)
        return fa.var < fb.var ? std::strong_ordering::greater : std::strong_ordering::less;
      if (fa.exp != fb.exp) return fa.exp <=> fb.exp;
    }
    if (i < a.factors_.size()) return std::strong_ordering::greater;
    if (i < b.factors_.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Factor> factors_;
};

/// Default variable naming for printing: x1, x2, ...
inline std::string default_variable_name(int var) { return "x" + std::to_string(var + 1); }

class SparsePoly {
 public:
  /// Terms in descending canonical order.
  using TermMap = std::map<MonomialKey, BigInt, std::greater<>>;

  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(MonomialKey{}, c);
    return p;
  }

  static SparsePoly variable(int var, int exp = 1) { return monomial(MonomialKey::variable(var, exp)); }

  static SparsePoly monomial(const MonomialKey& m, const BigInt& c = 1) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c·m, dropping the term if it cancels.
  void add_term(const MonomialKey& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const MonomialKey& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous(int deg) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != deg) return false;
    return true;
  }

  /// One past the largest variable index used.
  int span_vars() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.span_vars());
    return n;
  }

  /// Greatest monomial in the canonical order. Requires a nonzero polynomial.
  const std::pair<const MonomialKey, BigInt>& leading_term() const { return *terms_.begin(); }

  /// Greatest monomial under revlex_less. Linear scan; requires nonzero.
  const std::pair<const MonomialKey, BigInt>& revlex_leading_term() const {
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (revlex_less(best->first, it->first)) best = it;
    return *best;
  }

  SparsePoly& operator+=(const SparsePoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
  friend SparsePoly operator-(const SparsePoly& p) { return scalar_mul(-1, p); }

  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly r;
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
  }

  friend SparsePoly scalar_mul(const BigInt& c, const SparsePoly& p) {
    SparsePoly r;
    if (c == 0) return r;
    for (const auto& [m, cp] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * cp);
    return r;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Printed as `c*x1^a*x2^b + ...`, terms descending; "0" when empty.
  template <class NameFn>
  std::string to_string(NameFn&& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      os << (neg ? BigInt(-c) : c);
      for (const auto& f : m.factors()) {
        os << '*' << name(static_cast<int>(f.var));
        if (f.exp > 1) os << '^' << f.exp;
      }
    }
    return os.str();
  }

  std::string to_string() const { return to_string(default_variable_name); }

 private:
  TermMap terms_;
};

inline SparsePoly add(const SparsePoly& p, const SparsePoly& q) { return p + q; }
inline SparsePoly mul(const SparsePoly& p, const SparsePoly& q) { return p * q; }
inline BigInt coefficient(const SparsePoly& p, const MonomialKey& key) { return p.coefficient(key); }

/// s_i acting on p: exchanges x_i and x_{i+1} (1-based i).
inline SparsePoly swap_variables(int i, const SparsePoly& p) {
  SparsePoly r;
  const int a = i - 1, b = i;
  for (const auto& [m, c] : p.terms()) {
    const int ea = m.exponent(a), eb = m.exponent(b);
    r.add_term(m.with_exponent(a, eb).with_exponent(b, ea), c);
  }
  return r;
}

/// ∂_i p = (p - s_i p) / (x_i - x_{i+1}) for 1-based i >= 1.
///
/// Each term x_i^a x_{i+1}^b (a > b) contributes
/// x_i^b x_{i+1}^b (x_i^{a-b-1} + x_i^{a-b-2} x_{i+1} + ... + x_{i+1}^{a-b-1});
/// a < b contributes the negated mirror image and a == b nothing.
inline SparsePoly divided_difference(int i, const SparsePoly& p) {
  if (i < 1) throw MalformedInput("divided difference index must be >= 1");
  const int va = i - 1, vb = i;
  SparsePoly r;
  for (const auto& [m, c] : p.terms()) {
    const int a = m.exponent(va), b = m.exponent(vb);
    if (a == b) continue;
    const int lo = std::min(a, b), d = std::abs(a - b);
    const BigInt coeff = a > b ? c : BigInt(-c);
    for (int k = 0; k < d; ++k)
      r.add_term(m.with_exponent(va, lo + d - 1 - k).with_exponent(vb, lo + k), coeff);
  }
  return r;
}

/// Evaluates p with values supplied per variable. `T` needs +, *, and
/// construction of coefficients through `from_int`.
template <class T, class VarFn, class CoeffFn>
T evaluate(const SparsePoly& p, VarFn&& value_of, CoeffFn&& from_int) {
  T total = from_int(BigInt(0));
  for (const auto& [m, c] : p.terms()) {
    T term = from_int(c);
    for (const auto& f : m.factors()) {
      const T v = value_of(static_cast<int>(f.var));
      for (std::uint32_t e = 0; e < f.exp; ++e) term = term * v;
    }
    total = total + term;
  }
  return total;
}

}  // namespace schubvan
