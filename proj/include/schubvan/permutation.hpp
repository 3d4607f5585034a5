#pragma once

// Permutations in one-line (window) notation and the statistics the rest of
// the library consumes: inversions, descents, Lehmer codes, rank matrices,
// Bruhat comparison and canonical reduced words.
//
// Positions and values are 1-based throughout. S_n is embedded in S_{n+1}
// by appending the fixed point n+1; binary operations pad the shorter
// operand before acting.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schubvan/errors.hpp"

namespace schubvan {

class Permutation {
 public:
  /// The identity of S_1.
  Permutation() : Permutation(std::vector<int>{1}) {}

  explicit Permutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    if (n == 0) throw MalformedInput("permutation of degree 0");
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
      if (v < 1 || v > n)
        throw MalformedInput("letter " + std::to_string(v) + " out of range [1," +
                             std::to_string(n) + "]");
      if (seen[v]) throw MalformedInput("repeated letter " + std::to_string(v));
      seen[v] = true;
    }
    code_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (window_[j] < window_[i]) ++code_[i];
    inv_ = 0;
    for (int c : code_) inv_ += c;
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
  }

  /// w∘ = (n, n-1, ..., 1).
  static Permutation long_element(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }

  /// Simple transposition s_i = (i, i+1) in S_n, n >= i+1.
  static Permutation simple(int i, int n) {
    Permutation s = identity(std::max(n, i + 1));
    return s.times_simple(i);
  }

  /// Inverse of lehmer_code(). The degree is the smallest n that can carry
  /// `code` (at least `min_degree`).
  static Permutation from_lehmer_code(std::span<const int> code, int min_degree = 1) {
    int n = std::max<int>(min_degree, static_cast<int>(code.size()));
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i] < 0) throw MalformedInput("negative Lehmer code entry");
      n = std::max(n, static_cast<int>(i) + 1 + code[i]);
    }
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
      const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
      w.push_back(pool[c]);
      pool.erase(pool.begin() + c);
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(window_.size()); }

  /// w(i) for 1-based i; fixed beyond the degree.
  int operator()(int i) const { return i <= size() ? window_[i - 1] : i; }

  std::span<const int> window() const { return window_; }
  const std::vector<int>& lehmer_code() const { return code_; }
  int inversions() const { return inv_; }

  /// Des(w) = {i : w(i) > w(i+1)}.
  std::vector<int> descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (window_[i - 1] > window_[i]) d.push_back(i);
    return d;
  }
  int descent_count() const { return static_cast<int>(descents().size()); }
  bool has_descent(int i) const { return i >= 1 && i < size() && window_[i - 1] > window_[i]; }

  bool is_identity() const { return inv_ == 0; }

  /// w·s_i: swaps positions i and i+1.
  Permutation times_simple(int i) const {
    std::vector<int> w = padded(i + 1).window_;
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
  }

  Permutation padded(int n) const {
    if (n <= size()) return *this;
    std::vector<int> w = window_;
    for (int v = size() + 1; v <= n; ++v) w.push_back(v);
    return Permutation(std::move(w));
  }

  /// Drops trailing fixed points (keeps degree >= 1).
  Permutation trimmed() const {
    int n = size();
    while (n > 1 && window_[n - 1] == n) --n;
    if (n == size()) return *this;
    return Permutation(std::vector<int>(window_.begin(), window_.begin() + n));
  }

  /// Digit string when n <= 9, comma-separated otherwise.
  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
      if (size() > 9 && i > 0) os << ',';
      os << window_[i];
    }
    return os.str();
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.window_ == b.window_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.window_ <=> b.window_;
  }

 private:
  std::vector<int> window_;
  std::vector<int> code_;
  int inv_ = 0;
};

/// Equality up to appended fixed points.
inline bool stably_equal(const Permutation& a, const Permutation& b) {
  return a.trimmed() == b.trimmed();
}

inline Permutation parse_permutation(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
  std::vector<int> w;
  const bool separated = std::any_of(text.begin(), text.end(), is_sep);
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw MalformedInput("unexpected character '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      std::string_view tok = text.substr(i, j - i);
      if (tok.size() > 6 || !std::all_of(tok.begin(), tok.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }))
        throw MalformedInput("bad token '" + std::string(tok) + "'");
      w.push_back(std::stoi(std::string(tok)));
      i = j;
    }
  }
  if (w.empty()) throw MalformedInput("empty permutation");
  return Permutation(std::move(w));
}

/// (u∘v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.size());
  for (int i = 1; i <= w.size(); ++i) inv[w(i) - 1] = i;
  return Permutation(std::move(inv));
}

/// Lexicographically smallest reduced word (a_1, ..., a_l) with
/// s_{a_1} ... s_{a_l} = w. Built greedily from the smallest left descent.
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  std::vector<int> cur(w.window().begin(), w.window().end());
  const int n = w.size();
  std::vector<int> pos(n + 1);
  for (;;) {
    for (int i = 0; i < n; ++i) pos[cur[i]] = i;
    int a = 0;
    for (int v = 1; v < n; ++v)
      if (pos[v] > pos[v + 1]) {
        a = v;
        break;
      }
    if (a == 0) break;
    word.push_back(a);
    // s_a∘cur swaps the values a and a+1.
    std::swap(cur[pos[a]], cur[pos[a + 1]]);
  }
  return word;
}

/// Product s_{a_1} ... s_{a_l} in S_n (n grows if a letter needs it).
inline Permutation word_to_permutation(std::span<const int> word, int n = 1) {
  for (int a : word) n = std::max(n, a + 1);
  Permutation w = Permutation::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    w = compose(Permutation::simple(*it, n), w);
  return w;
}

/// a_ij = |{w(1),...,w(j)} ∩ {1,...,i}|.
struct RankMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major, i then j

  int at(int i, int j) const {
    if (i <= 0 || j <= 0) return 0;
    return entries[(i - 1) * n + (j - 1)];
  }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;
};

inline RankMatrix rank_matrix(const Permutation& w) {
  const int n = w.size();
  RankMatrix r{n, std::vector<int>(n * n, 0)};
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = 1; j <= n; ++j) {
      if (w(j) <= i) ++count;
      r.entries[(i - 1) * n + (j - 1)] = count;
    }
  }
  return r;
}

/// Recovers w from the unit increments of its rank matrix.
inline Permutation permutation_from_rank_matrix(const RankMatrix& r) {
  std::vector<int> w(r.n, 0);
  for (int i = 1; i <= r.n; ++i)
    for (int j = 1; j <= r.n; ++j) {
      const int d = r.at(i, j) - r.at(i - 1, j) - r.at(i, j - 1) + r.at(i - 1, j - 1);
      if (d == 1) {
        if (w[j - 1] != 0) throw MalformedInput("rank matrix has two increments in a column");
        w[j - 1] = i;
      } else if (d != 0) {
        throw MalformedInput("rank matrix increment outside {0,1}");
      }
    }
  return Permutation(std::move(w));
}

/// Strong Bruhat order via the Ehresmann rank criterion:
/// u <= w iff a^u_ij >= a^w_ij for all i, j.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  const int n = std::max(u.size(), w.size());
  const RankMatrix ru = rank_matrix(u.padded(n));
  const RankMatrix rw = rank_matrix(w.padded(n));
  for (std::size_t k = 0; k < ru.entries.size(); ++k)
    if (ru.entries[k] < rw.entries[k]) return false;
  return true;
}

/// All permutations of S_n in lexicographic window order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace schubvan
