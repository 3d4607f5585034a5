#pragma once

// Prime-field arithmetic for 64-bit primes, deterministic sampling, and
// Gaussian elimination (determinant and rank) over F_p.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "schubvan/errors.hpp"
#include "schubvan/polynomial.hpp"

namespace schubvan {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin; the first twelve prime bases cover 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw BadPrime(std::to_string(p) + " is not prime");
}

/// Element of F_p carrying its modulus, so generic evaluation code can use it
/// as a value type.
struct ModInt {
  std::uint64_t v = 0;
  std::uint64_t p = 1;

  friend ModInt operator+(ModInt a, ModInt b) { return {add_mod(a.v, b.v, a.p), a.p}; }
  friend ModInt operator-(ModInt a, ModInt b) { return {sub_mod(a.v, b.v, a.p), a.p}; }
  friend ModInt operator-(ModInt a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
  friend ModInt operator*(ModInt a, ModInt b) { return {mul_mod(a.v, b.v, a.p), a.p}; }
  friend bool operator==(ModInt a, ModInt b) { return a.v == b.v; }

  ModInt inverse() const { return {pow_mod(v, p - 2, p), p}; }
  bool is_zero() const { return v == 0; }
};

inline ModInt to_mod(const BigInt& c, std::uint64_t p) {
  BigInt r = c % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r), p};
}

/// Dense row-major matrix of residues.
struct ModMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  static ModMatrix identity(int n) {
    ModMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

inline ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y, std::uint64_t p) {
  if (x.cols != y.rows) throw DimensionMismatch("matrix product shape mismatch");
  ModMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::uint64_t xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = add_mod(z.at(i, j), mul_mod(xik, y.at(k, j), p), p);
    }
  return z;
}

namespace detail {

/// Row-echelon reduction in place; returns (rank, determinant of a square input).
inline std::pair<int, std::uint64_t> eliminate(ModMatrix m, std::uint64_t p) {
  require_prime(p);
  std::uint64_t det = 1 % p;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
      det = det == 0 ? 0 : p - det;
    }
    const std::uint64_t pv = m.at(rank, col) % p;
    det = mul_mod(det, pv, p);
    const std::uint64_t inv = pow_mod(pv, p - 2, p);
    for (int r = rank + 1; r < m.rows; ++r) {
      const std::uint64_t f = mul_mod(m.at(r, col) % p, inv, p);
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j) {
        m.at(r, j) = sub_mod(m.at(r, j) % p, mul_mod(f, m.at(rank, j), p), p);
      }
    }
    ++rank;
  }
  if (rank < m.rows || m.rows != m.cols) det = 0;
  return {rank, det};
}

}  // namespace detail

inline std::uint64_t ff_det(const ModMatrix& m, std::uint64_t p) {
  if (m.rows != m.cols) throw DimensionMismatch("determinant of a non-square matrix");
  return detail::eliminate(m, p).second;
}

inline int ff_rank(const ModMatrix& m, std::uint64_t p) { return detail::eliminate(m, p).first; }

/// SplitMix64 finalizer; derives independent per-sample seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5bd1e995ULL)));
}

/// Uniform residue in [0, p) by masked rejection. Unlike
/// std::uniform_int_distribution, the stream is identical on every standard library.
inline std::uint64_t uniform_mod(std::mt19937_64& rng, std::uint64_t p) {
  std::uint64_t mask = p - 1;
  for (int s = 1; s < 64; s <<= 1) mask |= mask >> s;
  for (;;) {
    const std::uint64_t x = rng() & mask;
    if (x < p) return x;
  }
}

}  // namespace schubvan
