#pragma once

// Polynomial systems f_1 = ... = f_m = 0 over named variables and
// parameters, their size measure, the POLYSYS 1 text format, and a forward
// solver for systems written in layered (one new unknown per equation) order.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schubvan/errors.hpp"
#include "schubvan/polynomial.hpp"

namespace schubvan {

/// Symbols are indexed variables first (0..V-1), then parameters
/// (V..V+P-1); equations are SparsePoly over that index space.
class PolySystem {
 public:
  int add_variable(const std::string& name) {
    if (!parameters_.empty())
      throw std::logic_error("variables must be declared before parameters");
    return declare(name, variables_);
  }

  int add_parameter(const std::string& name) {
    return static_cast<int>(variables_.size()) + declare(name, parameters_);
  }

  void add_equation(SparsePoly eq) {
    if (eq.span_vars() > symbol_count())
      throw std::logic_error("equation references an undeclared symbol");
    equations_.push_back(std::move(eq));
  }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw MalformedInput("unknown symbol '" + name + "'");
    return it->second;
  }
  bool has_symbol(const std::string& name) const { return index_.contains(name); }

  const std::string& name(int index) const {
    const int nv = static_cast<int>(variables_.size());
    return index < nv ? variables_[index] : parameters_[index - nv];
  }
  bool is_parameter(int index) const { return index >= static_cast<int>(variables_.size()); }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  const std::vector<SparsePoly>& equations() const { return equations_; }
  int symbol_count() const { return static_cast<int>(variables_.size() + parameters_.size()); }

  /// Variable `name` as a polynomial.
  SparsePoly var(const std::string& n) const { return SparsePoly::variable(index_of(n)); }

  std::string equation_string(std::size_t k) const {
    return equations_[k].to_string([this](int i) -> const std::string& { return name(i); });
  }

  friend bool operator==(const PolySystem& a, const PolySystem& b) {
    return a.variables_ == b.variables_ && a.parameters_ == b.parameters_ &&
           a.equations_ == b.equations_;
  }

 private:
  int declare(const std::string& name, std::vector<std::string>& list) {
    if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) {
          return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        }))
      throw MalformedInput("symbol name '" + name + "' is not in [a-z0-9_]+");
    const int idx = static_cast<int>(variables_.size() + parameters_.size());
    if (!index_.emplace(name, idx).second) throw MalformedInput("symbol '" + name + "' declared twice");
    list.push_back(name);
    return static_cast<int>(list.size()) - 1;
  }

  std::vector<std::string> variables_;
  std::vector<std::string> parameters_;
  std::vector<SparsePoly> equations_;
  std::map<std::string, int, std::less<>> index_;
};

/// ⌈log₂(|c|+1)⌉ + 1: magnitude bits plus a sign bit.
inline std::uint64_t coefficient_bits(const BigInt& c) {
  if (c == 0) return 1;
  const BigInt a = abs(c);
  return static_cast<std::uint64_t>(boost::multiprecision::msb(a)) + 2;
}

/// φ = Σ deg(f_i) + Σ (bit-lengths of the coefficients of f_i). Degree is the
/// total degree over variables and parameters together.
inline std::uint64_t phi_size(const PolySystem& sys) {
  std::uint64_t total = 0;
  for (const SparsePoly& f : sys.equations()) {
    total += static_cast<std::uint64_t>(std::max(f.degree(), 0));
    for (const auto& [m, c] : f.terms()) total += coefficient_bits(c);
  }
  return total;
}

/// POLYSYS 1: header, VAR lines, PARAM lines, one EQ line per equation.
inline std::string write_polysys(const PolySystem& sys) {
  std::ostringstream os;
  os << "POLYSYS 1\n";
  for (const auto& v : sys.variables()) os << "VAR " << v << '\n';
  for (const auto& p : sys.parameters()) os << "PARAM " << p << '\n';
  for (std::size_t k = 0; k < sys.equations().size(); ++k) os << "EQ " << sys.equation_string(k) << '\n';
  return os.str();
}

namespace detail {

inline SparsePoly parse_term(std::string_view tok, const PolySystem& sys, bool negate) {
  std::size_t star = tok.find('*');
  const std::string_view coeff_text = tok.substr(0, star);
  if (coeff_text.empty() ||
      !std::all_of(coeff_text.begin(), coeff_text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw MalformedInput("bad coefficient in term '" + std::string(tok) + "'");
  BigInt c(std::string{coeff_text});
  if (negate) c = -c;
  MonomialKey m;
  while (star != std::string_view::npos) {
    const std::size_t next = tok.find('*', star + 1);
    std::string_view factor = tok.substr(star + 1, next == std::string_view::npos ? next : next - star - 1);
    int exp = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      exp = std::stoi(std::string(factor.substr(caret + 1)));
      factor = factor.substr(0, caret);
    }
    m = m * MonomialKey::variable(sys.index_of(std::string(factor)), exp);
    star = next;
  }
  return SparsePoly::monomial(m, c);
}

}  // namespace detail

inline PolySystem parse_polysys(std::istream& in) {
  PolySystem sys;
  std::string line;
  if (!std::getline(in, line) || line != "POLYSYS 1") throw MalformedInput("missing 'POLYSYS 1' header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("VAR ", 0) == 0) {
      sys.add_variable(line.substr(4));
    } else if (line.rfind("PARAM ", 0) == 0) {
      sys.add_parameter(line.substr(6));
    } else if (line.rfind("EQ ", 0) == 0) {
      std::istringstream ts(line.substr(3));
      std::string tok;
      SparsePoly eq;
      bool negate = false, expect_term = true;
      while (ts >> tok) {
        if (!expect_term && (tok == "+" || tok == "-")) {
          negate = tok == "-";
          expect_term = true;
          continue;
        }
        if (!expect_term) throw MalformedInput("missing operator before '" + tok + "'");
        std::string_view t = tok;
        if (t.size() > 1 && t.front() == '-') {
          negate = !negate;
          t.remove_prefix(1);
        }
        if (t == "0" && eq.is_zero()) {
          expect_term = false;
          continue;
        }
        eq += detail::parse_term(t, sys, negate);
        negate = false;
        expect_term = false;
      }
      if (expect_term) throw MalformedInput("truncated equation '" + line + "'");
      sys.add_equation(std::move(eq));
    } else {
      throw MalformedInput("unrecognized line '" + line + "'");
    }
  }
  return sys;
}

inline PolySystem parse_polysys(const std::string& text) {
  std::istringstream in(text);
  return parse_polysys(in);
}

/// Per-symbol assignment; unset symbols are unknown.
template <class T>
using Assignment = std::vector<std::optional<T>>;

/// Forward solution of a layered system. Each equation must either introduce
/// exactly one unknown, appearing only in a single degree-1 term with
/// coefficient ±1, or be fully determined, in which case its value is
/// recorded as a residual.
template <class T>
struct ForwardSolution {
  Assignment<T> values;
  std::vector<std::size_t> constraint_equations;  // indices of fully determined equations
  std::vector<T> residuals;                       // their values, same order
};

template <class T, class CoeffFn>
ForwardSolution<T> forward_solve(const PolySystem& sys, Assignment<T> known, CoeffFn&& from_int) {
  known.resize(sys.symbol_count());
  ForwardSolution<T> out;
  for (std::size_t k = 0; k < sys.equations().size(); ++k) {
    const SparsePoly& f = sys.equations()[k];
    int unknown = -1;
    for (const auto& [m, c] : f.terms())
      for (const auto& fac : m.factors()) {
        const int s = static_cast<int>(fac.var);
        if (known[s]) continue;
        if (unknown >= 0 && unknown != s)
          throw NotForwardSolvable("equation " + std::to_string(k) + " has two unknowns: " +
                                   sys.name(unknown) + ", " + sys.name(s));
        unknown = s;
      }
    auto value_of = [&](int s) { return *known[s]; };
    if (unknown < 0) {
      out.constraint_equations.push_back(k);
      out.residuals.push_back(evaluate<T>(f, value_of, from_int));
      continue;
    }
    SparsePoly rest;
    BigInt lead = 0;
    for (const auto& [m, c] : f.terms()) {
      if (m.exponent(unknown) == 0) {
        rest.add_term(m, c);
      } else if (m == MonomialKey::variable(unknown) && lead == 0) {
        lead = c;
      } else {
        throw NotForwardSolvable("unknown " + sys.name(unknown) + " is not isolated in equation " +
                                 std::to_string(k));
      }
    }
    if (lead != 1 && lead != -1)
      throw NotForwardSolvable("unknown " + sys.name(unknown) + " has non-unit coefficient");
    // lead·u + rest = 0  =>  u = -lead·rest
    known[unknown] = evaluate<T>(scalar_mul(-lead, rest), value_of, from_int);
  }
  out.values = std::move(known);
  return out;
}

/// Values of every equation at a complete assignment.
template <class T, class CoeffFn>
std::vector<T> equation_values(const PolySystem& sys, const Assignment<T>& values, CoeffFn&& from_int) {
  std::vector<T> out;
  for (const SparsePoly& f : sys.equations())
    out.push_back(evaluate<T>(f, [&](int s) {
      if (!values[s]) throw NotForwardSolvable("symbol " + sys.name(s) + " is unassigned");
      return *values[s];
    }, from_int));
  return out;
}

}  // namespace schubvan
