#pragma once

// Schubert polynomials and Schubert coefficients, computed exactly.
//
// Two independent constructions are provided: divided differences down from
// the staircase monomial, and enumeration of pipe dreams. Coefficients
// c^w_{u,v} come from the divided-difference calculus; full products are
// expanded by leading-monomial subtraction.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schubvan/permutation.hpp"
#include "schubvan/polynomial.hpp"

namespace schubvan {

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
inline SparsePoly staircase(int n) {
  std::vector<int> e(std::max(n - 1, 0));
  for (int i = 0; i + 1 < n; ++i) e[i] = n - 1 - i;
  return SparsePoly::monomial(MonomialKey::from_exponents(std::span<const int>(e)));
}

/// Memoized divided-difference construction of Schubert polynomials.
///
/// Keys are stabilized (trailing fixed points dropped), so S_w is shared
/// across every S_n that contains w.
class SchubertTable {
 public:
  const SparsePoly& get(const Permutation& w) {
    const Permutation key = w.trimmed();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    SparsePoly value;
    const int n = key.size();
    if (key == Permutation::long_element(n)) {
      value = staircase(n);
    } else {
      // S_w = ∂_i S_{w s_i} for the first ascent i of w.
      int i = 1;
      while (key(i) > key(i + 1)) ++i;
      value = divided_difference(i, get(key.times_simple(i)));
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const { return cache_.size(); }

 private:
  std::map<Permutation, SparsePoly> cache_;
};

inline SparsePoly schubert_dd(const Permutation& w) {
  SchubertTable table;
  return table.get(w);
}

struct PipeDream {
  int n = 0;
  /// Cross cells (row, column), 1-based, row-major order, row + column <= n.
  std::vector<std::pair<int, int>> crosses;

  /// x^H: product of x_row over the crosses.
  MonomialKey weight() const {
    std::vector<int> e(n, 0);
    for (auto [r, c] : crosses) ++e[r - 1];
    return MonomialKey::from_exponents(std::span<const int>(e));
  }

  std::string to_string() const {
    std::ostringstream os;
    if (crosses.empty()) return "-";
    for (std::size_t k = 0; k < crosses.size(); ++k)
      os << (k ? " " : "") << '(' << crosses[k].first << ',' << crosses[k].second << ')';
    return os.str();
  }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
};

namespace detail {

/// Routes the n pipes through a tiling of the staircase. Returns false
/// unless pipe k exits at column w(k) and no two pipes cross twice.
inline bool pipes_realize(int n, const std::vector<char>& cross, const Permutation& w) {
  auto is_cross = [&](int r, int c) { return r + c <= n && cross[(r - 1) * n + (c - 1)]; };
  // first_pipe holds the first pipe seen at each cross; the second closes a pair.
  std::vector<int> first_pipe(n * n, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= n; ++k) {
    int r = k, c = 1;
    bool east = true;
    while (r >= 1) {
      if (is_cross(r, c)) {
        int& slot = first_pipe[(r - 1) * n + (c - 1)];
        if (slot == 0) {
          slot = k;
        } else {
          pairs.emplace_back(slot, k);
        }
      } else {
        east = !east;
      }
      if (east)
        ++c;
      else
        --r;
      if (c > n) return false;
    }
    if (c != w(k)) return false;
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

}  // namespace detail

/// Complete enumeration of RC(w) by depth-first search over the staircase
/// cells, pruned on the cross count (every member has inv(w) crosses).
inline std::vector<PipeDream> pipe_dreams(const Permutation& w) {
  const int n = w.size();
  const int target = w.inversions();
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; r + c <= n; ++c) cells.emplace_back(r, c);

  std::vector<PipeDream> out;
  std::vector<char> cross(n * n, 0);
  const int total = static_cast<int>(cells.size());
  auto dfs = [&](auto&& self, int idx, int placed) -> void {
    if (placed > target || placed + (total - idx) < target) return;
    if (idx == total) {
      if (detail::pipes_realize(n, cross, w)) {
        PipeDream d{n, {}};
        for (auto [r, c] : cells)
          if (cross[(r - 1) * n + (c - 1)]) d.crosses.emplace_back(r, c);
        out.push_back(std::move(d));
      }
      return;
    }
    auto [r, c] = cells[idx];
    cross[(r - 1) * n + (c - 1)] = 1;
    self(self, idx + 1, placed + 1);
    cross[(r - 1) * n + (c - 1)] = 0;
    self(self, idx + 1, placed);
  };
  dfs(dfs, 0, 0);
  return out;
}

/// Σ_{H ∈ RC(w)} x^H.
inline SparsePoly pipe_dream_polynomial(const Permutation& w) {
  SparsePoly p;
  for (const PipeDream& d : pipe_dreams(w)) p.add_term(d.weight(), 1);
  return p;
}

/// True iff ∂_i S_w = 0 for every ascent i of w (i = 1..n).
inline bool forward_check(const Permutation& w) {
  const SparsePoly s = schubert_dd(w);
  for (int i = 1; i <= w.size(); ++i)
    if (!w.has_descent(i) && !divided_difference(i, s).is_zero()) return false;
  return true;
}

/// Coefficient of S_w in the Schubert expansion of a homogeneous F of
/// degree inv(w): applies ∂_{a_l}, ..., ∂_{a_1} along the canonical reduced
/// word (a_1, ..., a_l) of w and reads off the constant.
inline BigInt extract_coefficient(const SparsePoly& f, const Permutation& w) {
  if (!f.is_homogeneous(w.inversions()))
    throw NotHomogeneous("polynomial is not homogeneous of degree " +
                         std::to_string(w.inversions()));
  const std::vector<int> word = reduced_word(w);
  SparsePoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(*it, g);
  if (g.degree() > 0) throw std::logic_error("coefficient extraction left a non-constant");
  return g.coefficient(MonomialKey{});
}

/// Pads three permutations to their common degree.
struct Triple {
  Permutation u, v, w;
  Triple(const Permutation& a, const Permutation& b, const Permutation& c) {
    const int n = std::max({a.size(), b.size(), c.size()});
    u = a.padded(n);
    v = b.padded(n);
    w = c.padded(n);
  }
  int degree() const { return u.size(); }
  bool dimension_ok() const { return u.inversions() + v.inversions() == w.inversions(); }
};

inline BigInt schubert_coefficient(const Permutation& u, const Permutation& v,
                                   const Permutation& w, SchubertTable& table) {
  const Triple t(u, v, w);
  if (!t.dimension_ok()) return 0;
  return extract_coefficient(table.get(t.u) * table.get(t.v), t.w);
}

inline BigInt schubert_coefficient(const Permutation& u, const Permutation& v,
                                   const Permutation& w) {
  SchubertTable table;
  return schubert_coefficient(u, v, w, table);
}

/// S_u · S_v = Σ c^w_{u,v} S_w; keys padded to a common degree.
struct SchubertExpansion {
  int degree = 0;  // inv(u) + inv(v)
  std::map<Permutation, BigInt> terms;

  BigInt coefficient(const Permutation& w) const {
    const int n = terms.empty() ? w.size() : terms.begin()->first.size();
    if (w.trimmed().size() > n) return 0;
    auto it = terms.find(w.trimmed().padded(n));
    return it == terms.end() ? BigInt(0) : it->second;
  }
};

/// Leading-monomial subtraction. Under revlex_less the leading monomial of
/// S_w is x^{code(w)} with coefficient 1 (not so under the printing order:
/// S_132 = x1 + x2). Each step removes the revlex-leading monomial of the
/// remainder, so every w is visited at most once.
inline SchubertExpansion expand_product(const Permutation& u, const Permutation& v,
                                        SchubertTable& table) {
  SchubertExpansion out;
  out.degree = u.inversions() + v.inversions();
  SparsePoly rest = table.get(u) * table.get(v);
  std::map<Permutation, BigInt> found;
  int n = std::max(u.size(), v.size());
  while (!rest.is_zero()) {
    const auto [alpha, c] = rest.revlex_leading_term();
    const std::vector<int> code = alpha.dense();
    const Permutation w = Permutation::from_lehmer_code(code).trimmed();
    const SparsePoly& s = table.get(w);
    const auto& lead = s.revlex_leading_term();
    if (!(lead.first == alpha) || lead.second != 1)
      throw std::logic_error("leading term of S_" + w.to_string() + " is not x^code(w)");
    if (c <= 0) throw std::logic_error("negative Schubert coefficient at " + w.to_string());
    rest -= scalar_mul(c, s);
    n = std::max(n, w.size());
    found.emplace(w, c);
  }
  for (auto& [w, c] : found) out.terms.emplace(w.padded(n), std::move(c));
  return out;
}

inline SchubertExpansion expand_product(const Permutation& u, const Permutation& v) {
  SchubertTable table;
  return expand_product(u, v, table);
}

/// `w<TAB>coefficient` lines, w ascending.
inline std::string format_expansion(const SchubertExpansion& e) {
  std::ostringstream os;
  for (const auto& [w, c] : e.terms) os << w.to_string() << '\t' << c << '\n';
  return os.str();
}

inline bool vanish_exact(const Permutation& u, const Permutation& v, const Permutation& w,
                         SchubertTable& table) {
  return schubert_coefficient(u, v, w, table) == 0;
}

inline bool vanish_exact(const Permutation& u, const Permutation& v, const Permutation& w) {
  SchubertTable table;
  return vanish_exact(u, v, w, table);
}

/// Polynomial-time necessary conditions for c^w_{u,v} != 0. A failing
/// filter proves vanishing; passing filters prove nothing.
struct FilterReport {
  bool dimension = true;  // inv(u) + inv(v) == inv(w)
  bool bruhat = true;     // u <= w and v <= w in strong Bruhat order

  bool proves_vanishing() const { return !dimension || !bruhat; }

  std::string to_string() const {
    std::string s = "dimension=";
    s += dimension ? "pass" : "fail";
    s += " bruhat=";
    s += bruhat ? "pass" : "fail";
    return s;
  }
};

inline FilterReport fast_filters(const Permutation& u, const Permutation& v, const Permutation& w) {
  const Triple t(u, v, w);
  FilterReport r;
  r.dimension = t.dimension_ok();
  r.bruhat = bruhat_leq(t.u, t.w) && bruhat_leq(t.v, t.w);
  return r;
}

}  // namespace schubvan
