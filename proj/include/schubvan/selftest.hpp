#pragma once

// Built-in self-test suites. Each suite checks one named invariant and logs
// one deterministic summary line.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "schubvan/lift.hpp"
#include "schubvan/modular.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/polynomial.hpp"
#include "schubvan/purbhoo.hpp"
#include "schubvan/schubert.hpp"

namespace schubvan {

enum class SelftestLevel { Quick, Full };

struct SelftestOptions {
  SelftestLevel level = SelftestLevel::Quick;
  std::uint64_t seed = 0;
  MvOptions mv;  // fault injection into the determinant DAG
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::optional<std::string> failure;
};

namespace detail {

struct SuiteContext {
  SuiteResult result;
  explicit SuiteContext(std::string name) { result.name = std::move(name); }
  bool check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok && !result.failure) result.failure = what;
    return ok;
  }
};

/// Determinant mod p by elimination, independent of the DAG.
inline std::uint64_t det_mod(int n, const std::vector<std::uint64_t>& x, std::uint64_t p) {
  ModMatrix m(n, n);
  m.a = x;
  return ff_det(m, p);
}

inline SuiteResult suite_permutations(int n) {
  SuiteContext c("permutation-roundtrip");
  for (const Permutation& w : all_permutations(n)) {
    const auto& code = w.lehmer_code();
    c.check(Permutation::from_lehmer_code(code, n) == w, "code round trip at " + w.to_string());
    c.check(permutation_from_rank_matrix(rank_matrix(w)) == w, "rank matrix round trip at " + w.to_string());
    c.check(compose(w, inverse(w)).is_identity(), "w w^-1 != id at " + w.to_string());
    const auto word = reduced_word(w);
    c.check(static_cast<int>(word.size()) == w.inversions() && word_to_permutation(word, n) == w,
            "reduced word at " + w.to_string());
  }
  return c.result;
}

inline SuiteResult suite_pipe_dreams(int n, SchubertTable& table) {
  SuiteContext c("pipe-dream-equivalence");
  for (const Permutation& w : all_permutations(n))
    c.check(pipe_dream_polynomial(w) == table.get(w), "pipe dream sum differs at " + w.to_string());
  return c.result;
}

inline SuiteResult suite_forward_rule(int n, SchubertTable& table) {
  SuiteContext c("forward-rule");
  for (const Permutation& w : all_permutations(n))
    for (int i = 1; i < n; ++i)
      if (!w.has_descent(i))
        c.check(divided_difference(i, table.get(w)).is_zero(),
                "d_" + std::to_string(i) + " S_" + w.to_string() + " != 0");
  return c.result;
}

inline SuiteResult suite_delta(int n, SchubertTable& table) {
  SuiteContext c("delta-property");
  const auto perms = all_permutations(n);
  for (const Permutation& v : perms)
    for (const Permutation& w : perms)
      if (v.inversions() == w.inversions())
        c.check(extract_coefficient(table.get(v), w) == (v == w ? 1 : 0),
                "extract(S_" + v.to_string() + ", " + w.to_string() + ")");
  return c.result;
}

inline SuiteResult suite_expansion(int n, SchubertTable& table) {
  SuiteContext c("expansion-reconstruction");
  const auto perms = all_permutations(n);
  for (const Permutation& u : perms)
    for (const Permutation& v : perms) {
      const SchubertExpansion e = expand_product(u, v, table);
      SparsePoly sum;
      bool positive = true;
      for (const auto& [w, k] : e.terms) {
        positive = positive && k > 0;
        sum += scalar_mul(k, table.get(w));
      }
      c.check(positive && sum == table.get(u) * table.get(v),
              "expansion of S_" + u.to_string() + " S_" + v.to_string());
    }
  return c.result;
}

inline SuiteResult suite_leibniz(int max_n, const MvOptions& mv) {
  SuiteContext c("leibniz-equality");
  for (int n = 1; n <= max_n; ++n)
    c.check(signed_path_sum(mv_graph(n, mv)) == leibniz_det(n), "signed path sum != det at n=" + std::to_string(n));
  return c.result;
}

inline SuiteResult suite_lifted_det(int max_n, int samples, std::uint64_t seed, const MvOptions& mv) {
  SuiteContext c("lifted-determinant");
  const std::uint64_t p = kMersenne61;
  auto from_int = [p](const BigInt& k) { return to_mod(k, p); };
  for (int n = 1; n <= max_n; ++n) {
    const LiftedFormulation lift = det_lifted(n, mv);
    for (int s = 0; s < samples; ++s) {
      auto rng = sample_rng(seed, static_cast<std::uint64_t>(n * 1000 + s));
      std::vector<std::uint64_t> x(static_cast<std::size_t>(n * n));
      std::vector<ModInt> in;
      for (auto& e : x) {
        e = uniform_mod(rng, p);
        in.push_back({e, p});
      }
      const auto out = evaluate_lifted<ModInt>(lift, in, from_int);
      c.check(out.outputs[0].v == det_mod(n, x, p), "lifted det mismatch at n=" + std::to_string(n));
    }
  }
  return c.result;
}

inline SuiteResult suite_purbhoo(int n, std::uint64_t seed, SchubertTable& table) {
  SuiteContext c("purbhoo-agreement");
  const auto perms = all_permutations(n);
  for (const Permutation& u : perms)
    for (const Permutation& v : perms)
      for (const Permutation& w : perms) {
        if (u.inversions() + v.inversions() != w.inversions()) continue;
        const VanishVerdict r = vanish_randomized(u, v, w, 3, kMersenne61, seed);
        const bool exact_zero = vanish_exact(u, v, w, table);
        const std::string t = u.to_string() + " " + v.to_string() + " " + w.to_string();
        c.check(r.says_zero() == exact_zero, "verdict disagrees with exact at " + t);
        if (r.witness) c.check(replay_witness(u, v, w, *r.witness) == r.witness->det, "witness replay at " + t);
      }
  return c.result;
}

inline SuiteResult suite_hnp(int n, std::uint64_t seed, SchubertTable& table) {
  SuiteContext c("hnp-semantics");
  const auto perms = all_permutations(n);
  for (const Permutation& u : perms)
    for (const Permutation& v : perms)
      for (const Permutation& w : perms) {
        if (u.inversions() + v.inversions() != w.inversions()) continue;
        const bool sat = generic_evaluation(emit_hnp_system(u, v, w), kMersenne61, seed).satisfiable;
        c.check(sat == vanish_exact(u, v, w, table),
                "satisfiability disagrees at " + u.to_string() + " " + v.to_string() + " " + w.to_string());
      }
  return c.result;
}

}  // namespace detail

/// Runs every suite of the level and logs one line per suite. Returns true
/// when all pass.
inline bool run_selftest(const SelftestOptions& opts, std::ostream& log) {
  const bool full = opts.level == SelftestLevel::Full;
  const int poly_n = full ? 5 : 4;
  SchubertTable table;
  std::vector<std::function<SuiteResult()>> suites = {
      [&] { return detail::suite_permutations(full ? 6 : 5); },
      [&] { return detail::suite_pipe_dreams(poly_n, table); },
      [&] { return detail::suite_forward_rule(poly_n, table); },
      [&] { return detail::suite_delta(poly_n, table); },
      [&] { return detail::suite_expansion(full ? 5 : 4, table); },
      [&] { return detail::suite_leibniz(4, opts.mv); },
      [&] { return detail::suite_lifted_det(full ? 8 : 5, full ? 20 : 5, opts.seed, opts.mv); },
      [&] { return detail::suite_purbhoo(full ? 5 : 4, opts.seed, table); },
      [&] { return detail::suite_hnp(3, opts.seed, table); },
  };
  bool ok = true;
  for (auto& run : suites) {
    const SuiteResult r = run();
    log << "suite " << r.name << ": " << (r.failure ? "FAIL" : "PASS") << " (" << r.checks << " checks)";
    if (r.failure) log << " invariant violated: " << *r.failure;
    log << '\n';
    ok = ok && !r.failure;
  }
  log << "selftest " << (full ? "full" : "quick") << " seed=" << opts.seed << ": " << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

}  // namespace schubvan
