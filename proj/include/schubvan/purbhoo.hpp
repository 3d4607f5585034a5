#pragma once

// Vanishing criterion: c^w_{u,v} != 0 iff, for generic unipotent ρ, ω, τ,
// ρR_uρ⁻¹ + ωR_vω⁻¹ + τR_{w0·w}τ⁻¹ spans the strictly upper triangular
// matrices. Provides a one-sided randomized tester over F_p and an emitter
// of the corresponding parametric polynomial system.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubvan/errors.hpp"
#include "schubvan/lift.hpp"
#include "schubvan/modular.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/polynomial.hpp"
#include "schubvan/polysys.hpp"
#include "schubvan/schubert.hpp"

namespace schubvan {

/// Inversion cells (i, j), i < j, w(i) > w(j), row-major.
struct InversionSupport {
  int n = 0;
  std::vector<std::pair<int, int>> cells;
};

inline InversionSupport inversion_support(const Permutation& w) {
  InversionSupport s{w.size(), {}};
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) s.cells.emplace_back(i, j);
  return s;
}

/// w0·w, i.e. i -> n+1-w(i).
inline Permutation dual_permutation(const Permutation& w) { return compose(Permutation::long_element(w.size()), w); }

/// Strict-upper cells of an n×n matrix in row-major order.
inline std::vector<std::pair<int, int>> strict_upper_cells(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
  return cells;
}

/// Unipotent upper-triangular matrix over F_p with its inverse.
struct UnipotentMatrix {
  int n = 0;
  std::uint64_t p = 0;
  ModMatrix value;
  ModMatrix inverse;

  /// Builds from strict-upper entries (row-major); inverse by back-substitution.
  static UnipotentMatrix from_entries(int n, std::uint64_t p, const std::vector<std::uint64_t>& upper) {
    if (upper.size() != static_cast<std::size_t>(n * (n - 1) / 2))
      throw DimensionMismatch("unipotent matrix needs n(n-1)/2 entries");
    UnipotentMatrix u{n, p, ModMatrix::identity(n), ModMatrix::identity(n)};
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u.value.at(i, j) = upper[k++] % p;
    // (ρ·ρ⁻¹)_{ij} = inv_ij + Σ_{i<k<=j} ρ_ik inv_kj = 0 for i < j.
    for (int j = 0; j < n; ++j)
      for (int i = j - 1; i >= 0; --i) {
        std::uint64_t s = 0;
        for (int m = i + 1; m <= j; ++m) s = add_mod(s, mul_mod(u.value.at(i, m), u.inverse.at(m, j), p), p);
        u.inverse.at(i, j) = s == 0 ? 0 : p - s;
      }
    if (!(mat_mul(u.value, u.inverse, p) == ModMatrix::identity(n)))
      throw std::logic_error("unipotent inverse check failed");
    return u;
  }

  std::vector<std::uint64_t> upper_entries() const {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(value.at(i, j));
    return out;
  }
};

inline UnipotentMatrix random_unipotent(int n, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::uint64_t> upper(static_cast<std::size_t>(n * (n - 1) / 2));
  for (auto& x : upper) x = uniform_mod(rng, p);
  return UnipotentMatrix::from_entries(n, p, upper);
}

/// C(n,2)×C(n,2) matrix whose columns are the strict-upper coordinates of
/// ρe_ijρ⁻¹ (cells of u), ωe_ijω⁻¹ (cells of v), τe_ijτ⁻¹ (cells of w0·w).
struct PurbhooMatrix {
  int n = 0;
  ModMatrix m;
  /// Column labels: (0, 1, 2 for ρ/ω/τ, cell).
  std::vector<std::pair<int, std::pair<int, int>>> columns;
};

inline PurbhooMatrix assemble_matrix(const Permutation& u, const Permutation& v, const Permutation& w,
                                     const UnipotentMatrix& rho, const UnipotentMatrix& omega,
                                     const UnipotentMatrix& tau) {
  const Triple t(u, v, w);
  if (!t.dimension_ok()) throw DimensionMismatch("inv(u) + inv(v) != inv(w)");
  const int n = t.degree();
  if (rho.n != n || omega.n != n || tau.n != n) throw DimensionMismatch("witness degree differs from triple");
  const std::uint64_t p = rho.p;
  const auto rows = strict_upper_cells(n);
  const int dim = static_cast<int>(rows.size());

  PurbhooMatrix out{n, ModMatrix(dim, dim), {}};
  const InversionSupport supports[3] = {inversion_support(t.u), inversion_support(t.v),
                                        inversion_support(dual_permutation(t.w))};
  const UnipotentMatrix* witness[3] = {&rho, &omega, &tau};
  int col = 0;
  for (int s = 0; s < 3; ++s)
    for (auto [i, j] : supports[s].cells) {
      // (g e_ij g⁻¹)_{kl} = g_{ki} (g⁻¹)_{jl}
      for (int r = 0; r < dim; ++r) {
        auto [k, l] = rows[r];
        out.m.at(r, col) = mul_mod(witness[s]->value.at(k - 1, i - 1), witness[s]->inverse.at(j - 1, l - 1), p);
      }
      out.columns.push_back({s, {i, j}});
      ++col;
    }
  if (col != dim) throw std::logic_error("support sizes do not sum to C(n,2)");
  return out;
}

enum class Decision { NonzeroCertified, ZeroWhp, ZeroExact, NonzeroExact };

inline std::string to_string(Decision d) {
  switch (d) {
    case Decision::NonzeroCertified: return "NONZERO_CERTIFIED";
    case Decision::ZeroWhp: return "ZERO_WHP";
    case Decision::ZeroExact: return "ZERO_EXACT";
    default: return "NONZERO_EXACT";
  }
}

/// Reproduces a full-rank evaluation: sample `sample` of the stream seeded by
/// (prime, seed), with the drawn entries of ρ, ω, τ.
struct Witness {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample = 0;
  std::uint64_t det = 0;
  std::vector<std::uint64_t> entries;  // ρ, ω, τ strict-upper entries, row-major

  std::string to_string() const {
    std::ostringstream os;
    os << "witness prime=" << prime << " seed=" << seed << " sample=" << sample << " det=" << det;
    return os.str();
  }
};

struct VanishVerdict {
  Decision decision = Decision::ZeroWhp;
  int samples = 0;
  std::uint64_t prime = kMersenne61;
  std::uint64_t seed = 0;
  BigInt error_num = 0;
  BigInt error_den = 1;
  std::string via;  // dimension | bruhat | exact | purbhoo
  std::optional<Witness> witness;

  bool says_zero() const { return decision == Decision::ZeroWhp || decision == Decision::ZeroExact; }

  std::string record() const {
    std::ostringstream os;
    os << "decision=" << schubvan::to_string(decision) << " samples=" << samples << " prime=" << prime
       << " seed=" << seed << " error_bound=" << error_num << '/' << error_den << " via=" << via;
    return os.str();
  }
};

/// Schwartz-Zippel degree bound for det(M): n³.
inline std::uint64_t purbhoo_degree_bound(int n) {
  const auto m = static_cast<std::uint64_t>(n);
  return m * m * m;
}

/// Draws (ρ, ω, τ) for one sample and returns det(M) with the drawn entries.
inline std::pair<std::uint64_t, std::vector<std::uint64_t>> purbhoo_sample(const Triple& t, std::uint64_t p,
                                                                           std::uint64_t seed,
                                                                           std::uint64_t index) {
  auto rng = sample_rng(seed, index);
  const int n = t.degree();
  const UnipotentMatrix rho = random_unipotent(n, p, rng);
  const UnipotentMatrix omega = random_unipotent(n, p, rng);
  const UnipotentMatrix tau = random_unipotent(n, p, rng);
  std::vector<std::uint64_t> entries;
  for (const UnipotentMatrix* g : {&rho, &omega, &tau}) {
    const auto e = g->upper_entries();
    entries.insert(entries.end(), e.begin(), e.end());
  }
  const PurbhooMatrix m = assemble_matrix(t.u, t.v, t.w, rho, omega, tau);
  return {ff_det(m.m, p), std::move(entries)};
}

inline void require_large_prime(std::uint64_t p) {
  require_prime(p);
  if (p <= (std::uint64_t{1} << 60)) throw BadPrime(std::to_string(p) + " is below 2^60");
}

inline VanishVerdict vanish_randomized(const Permutation& u, const Permutation& v, const Permutation& w,
                                       int samples = 3, std::uint64_t p = kMersenne61, std::uint64_t seed = 0) {
  if (samples < 1) throw MalformedInput("sample count must be >= 1");
  require_large_prime(p);
  const Triple t(u, v, w);
  VanishVerdict out;
  out.prime = p;
  out.seed = seed;
  if (!t.dimension_ok()) {
    out.decision = Decision::ZeroWhp;
    out.via = "dimension";
    return out;
  }
  out.via = "purbhoo";
  for (int k = 0; k < samples; ++k) {
    auto [det, entries] = purbhoo_sample(t, p, seed, static_cast<std::uint64_t>(k));
    if (det != 0) {
      out.decision = Decision::NonzeroCertified;
      out.samples = k + 1;
      out.witness = Witness{p, seed, static_cast<std::uint64_t>(k), det, std::move(entries)};
      return out;
    }
  }
  out.decision = Decision::ZeroWhp;
  out.samples = samples;
  out.error_num = pow(BigInt(purbhoo_degree_bound(t.degree())), static_cast<unsigned>(samples));
  out.error_den = pow(BigInt(p), static_cast<unsigned>(samples));
  return out;
}

/// Recomputes det(M) for a witness from (prime, seed, sample) alone.
inline std::uint64_t replay_witness(const Permutation& u, const Permutation& v, const Permutation& w,
                                    const Witness& wit) {
  return purbhoo_sample(Triple(u, v, w), wit.prime, wit.seed, wit.sample).first;
}

enum class Scalings { Unit, Keep };

/// The system 𝒮(u, v, w0·w): unipotent inverse constraints, one variable
/// per entry of M, and det M = 0 through the path-counting determinant lift.
/// With Scalings::Keep each basis matrix carries its own scaling variable.
inline PolySystem emit_hnp_system(const Permutation& u, const Permutation& v, const Permutation& w,
                                  Scalings scalings = Scalings::Unit) {
  const Triple t(u, v, w);
  if (!t.dimension_ok()) throw DimensionMismatch("inv(u) + inv(v) != inv(w)");
  const int n = t.degree();
  const auto cells = strict_upper_cells(n);
  const int dim = static_cast<int>(cells.size());
  const InversionSupport supports[3] = {inversion_support(t.u), inversion_support(t.v),
                                        inversion_support(dual_permutation(t.w))};
  const char* inverse_prefix[3] = {"a", "b", "c"};
  const char* param_prefix[3] = {"alpha", "beta", "gamma"};
  const char* scaling_prefix[3] = {"xs", "ys", "zs"};

  PolySystem sys;
  for (const char* pre : inverse_prefix)
    for (auto [i, j] : cells) sys.add_variable(entry_name(pre, i, j));
  if (scalings == Scalings::Keep)
    for (int s = 0; s < 3; ++s)
      for (auto [i, j] : supports[s].cells) sys.add_variable(entry_name(scaling_prefix[s], i, j));
  for (int r = 1; r <= dim; ++r)
    for (int c = 1; c <= dim; ++c) sys.add_variable(entry_name("m", r, c));
  const LayeredDAG g = mv_graph(dim);
  const std::vector<int> node_var = declare_dag_variables(sys, g);
  for (const char* pre : param_prefix)
    for (auto [i, j] : cells) sys.add_parameter(entry_name(pre, i, j));

  // Entries of the generic matrix and its inverse as polynomials.
  auto g_entry = [&](int s, int k, int l) {
    if (k == l) return SparsePoly::constant(1);
    if (k > l) return SparsePoly{};
    return sys.var(entry_name(param_prefix[s], k, l));
  };
  auto inv_entry = [&](int s, int k, int l) {
    if (k == l) return SparsePoly::constant(1);
    if (k > l) return SparsePoly{};
    return sys.var(entry_name(inverse_prefix[s], k, l));
  };

  // g·g̃ = Id, strict-upper entries; column by column, bottom row first, so
  // each equation introduces one new inverse entry.
  for (int s = 0; s < 3; ++s)
    for (int j = 2; j <= n; ++j)
      for (int i = j - 1; i >= 1; --i) {
        SparsePoly eq;
        for (int k = i; k <= j; ++k) eq += g_entry(s, i, k) * inv_entry(s, k, j);
        sys.add_equation(std::move(eq));
      }

  int col = 1;
  for (int s = 0; s < 3; ++s)
    for (auto [i, j] : supports[s].cells) {
      const SparsePoly scale = scalings == Scalings::Keep ? sys.var(entry_name(scaling_prefix[s], i, j))
                                                          : SparsePoly::constant(1);
      for (int r = 1; r <= dim; ++r) {
        auto [k, l] = cells[r - 1];
        sys.add_equation(sys.var(entry_name("m", r, col)) - scale * g_entry(s, k, i) * inv_entry(s, j, l));
      }
      ++col;
    }

  append_dag_equations(sys, g, node_var,
                       [&](int r, int c) { return sys.index_of(entry_name("m", r, c)); });
  sys.add_equation(SparsePoly::variable(node_var[g.sink_plus]) - SparsePoly::variable(node_var[g.sink_minus]));
  return sys;
}

struct GenericEvaluation {
  bool satisfiable = false;
  std::vector<std::uint64_t> residuals;
};

/// Instantiates every parameter uniformly in F_p, forward-solves the
/// variables, and reports whether every fully determined equation vanishes.
inline GenericEvaluation generic_evaluation(const PolySystem& sys, std::uint64_t p, std::uint64_t seed) {
  require_prime(p);
  auto rng = sample_rng(seed, 0);
  Assignment<ModInt> known(sys.symbol_count());
  for (int s = static_cast<int>(sys.variables().size()); s < sys.symbol_count(); ++s)
    known[s] = ModInt{uniform_mod(rng, p), p};
  const auto sol = forward_solve<ModInt>(sys, std::move(known), [p](const BigInt& c) { return to_mod(c, p); });
  GenericEvaluation out;
  out.satisfiable = true;
  for (const ModInt& r : sol.residuals) {
    out.residuals.push_back(r.v);
    if (!r.is_zero()) out.satisfiable = false;
  }
  return out;
}

}  // namespace schubvan
