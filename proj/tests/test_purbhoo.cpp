#include <gtest/gtest.h>
#include <cmath>

#include "schubvan/purbhoo.hpp"

using namespace schubvan;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
constexpr std::uint64_t p61 = kMersenne61;

UnipotentMatrix identity_witness(int n) {
  return UnipotentMatrix::from_entries(n, p61, std::vector<std::uint64_t>(n * (n - 1) / 2, 0));
}

}  // namespace

TEST(Modular, FieldBasics) {
  EXPECT_TRUE(is_prime_u64(p61));
  EXPECT_FALSE(is_prime_u64(p61 - 2));
  EXPECT_TRUE(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime_u64(3215031751ull));           // strong pseudoprime to 2,3,5,7
  EXPECT_EQ(add_mod(p61 - 1, p61 - 1, p61), p61 - 2);
  EXPECT_EQ(sub_mod(0, 1, p61), p61 - 1);
  const std::uint64_t big = 18446744073709551557ull;
  EXPECT_EQ(add_mod(big - 1, big - 1, big), big - 2);
  EXPECT_EQ(mul_mod(ModInt{5, p61}.inverse().v, 5, p61), 1u);
  EXPECT_EQ(to_mod(BigInt(-1), p61).v, p61 - 1);
}

TEST(Modular, DetAndRank) {
  EXPECT_EQ(ff_det(ModMatrix::identity(5), p61), 1u);
  EXPECT_EQ(ff_rank(ModMatrix::identity(5), p61), 5);
  EXPECT_EQ(ff_det(ModMatrix(4, 4), p61), 0u);
  EXPECT_EQ(ff_rank(ModMatrix(4, 4), p61), 0);
  EXPECT_THROW(ff_det(ModMatrix(2, 3), p61), DimensionMismatch);
  EXPECT_THROW(ff_det(ModMatrix::identity(2), 15), BadPrime);
  ModMatrix swap(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = 1;
  EXPECT_EQ(ff_det(swap, p61), p61 - 1);
}

// Integer determinant by cofactor expansion, reduced mod p.
TEST(Modular, RandomDetMatchesIntegerOracle) {
  auto cofactor = [](auto&& self, const std::vector<std::vector<BigInt>>& a) -> BigInt {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    BigInt s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[0][j] == 0) continue;
      std::vector<std::vector<BigInt>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<BigInt> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(a[i][k]);
        minor.push_back(row);
      }
      const BigInt t = a[0][j] * self(self, minor);
      s += j % 2 ? BigInt(-t) : t;
    }
    return s;
  };
  for (int trial = 0; trial < 3; ++trial) {
    auto rng = sample_rng(5, trial);
    const int n = 7;
    ModMatrix m(n, n);
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j) = uniform_mod(rng, p61);
    EXPECT_EQ(ff_det(m, p61), to_mod(cofactor(cofactor, a), p61).v);
  }
}

TEST(Sampling, DeterministicAndInRange) {
  auto a = sample_rng(9, 3), b = sample_rng(9, 3), c = sample_rng(9, 4);
  const auto x = uniform_mod(a, 1000003), y = uniform_mod(b, 1000003), z = uniform_mod(c, 1000003);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_mod(a, 7), 7u);
}

TEST(Support, Examples) {
  EXPECT_TRUE(inversion_support(Permutation::identity(3)).cells.empty());
  EXPECT_EQ(inversion_support(P("321")).cells, (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(inversion_support(P("231")).cells, (std::vector<std::pair<int, int>>{{1, 3}, {2, 3}}));
  for (const Permutation& w : all_permutations(4))
    EXPECT_EQ(static_cast<int>(inversion_support(w).cells.size()), w.inversions());
}

TEST(Support, DualPermutation) {
  EXPECT_EQ(dual_permutation(P("312")), P("132"));
  for (const Permutation& w : all_permutations(4))
    EXPECT_EQ(dual_permutation(w).inversions(), 6 - w.inversions());
}

TEST(Unipotent, Inverse) {
  const auto one = identity_witness(1);
  EXPECT_EQ(one.value, ModMatrix::identity(1));
  EXPECT_EQ(one.inverse, ModMatrix::identity(1));
  const auto two = UnipotentMatrix::from_entries(2, p61, {12345});
  EXPECT_EQ(two.inverse.at(0, 1), p61 - 12345);
  for (int n = 2; n <= 6; ++n) {
    auto rng = sample_rng(1, n);
    const auto r = random_unipotent(n, p61, rng);
    EXPECT_EQ(mat_mul(r.value, r.inverse, p61), ModMatrix::identity(n));
    EXPECT_EQ(mat_mul(r.inverse, r.value, p61), ModMatrix::identity(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) EXPECT_EQ(r.inverse.at(i, j), 0u);
  }
}

TEST(Assemble, IdentityWitnessRepeatsColumn) {
  const auto id = identity_witness(3);
  const auto m = assemble_matrix(P("213"), P("213"), P("312"), id, id, id);
  EXPECT_EQ(m.m.rows, 3);
  EXPECT_EQ(m.columns.size(), 3u);
  EXPECT_EQ(ff_det(m.m, p61), 0u);
  EXPECT_EQ(ff_rank(m.m, p61), 2);
}

TEST(Assemble, RandomWitnessShape) {
  auto rng = sample_rng(3, 0);
  const auto a = random_unipotent(3, p61, rng), b = random_unipotent(3, p61, rng), c = random_unipotent(3, p61, rng);
  EXPECT_NE(ff_det(assemble_matrix(P("213"), P("213"), P("312"), a, b, c).m, p61), 0u);
  EXPECT_EQ(ff_det(assemble_matrix(P("213"), P("213"), P("231"), a, b, c).m, p61), 0u);
  EXPECT_THROW(assemble_matrix(P("321"), P("321"), P("321"), a, b, c), DimensionMismatch);
  const auto small = identity_witness(2);
  EXPECT_THROW(assemble_matrix(P("213"), P("213"), P("312"), small, small, small), DimensionMismatch);
}

TEST(Vanish, Examples) {
  const auto nz = vanish_randomized(P("213"), P("213"), P("312"), 2, p61, 0);
  EXPECT_EQ(nz.decision, Decision::NonzeroCertified);
  ASSERT_TRUE(nz.witness.has_value());
  EXPECT_NE(nz.witness->det, 0u);
  EXPECT_EQ(nz.error_num, 0);

  const auto z = vanish_randomized(P("213"), P("213"), P("231"), 2, p61, 0);
  EXPECT_EQ(z.decision, Decision::ZeroWhp);
  EXPECT_EQ(z.samples, 2);
  EXPECT_EQ(z.error_num, 27 * 27);
  EXPECT_EQ(z.error_den, BigInt(p61) * p61);
  EXPECT_FALSE(z.witness.has_value());

  const auto d = vanish_randomized(P("321"), P("321"), P("321"));
  EXPECT_EQ(d.decision, Decision::ZeroWhp);
  EXPECT_EQ(d.error_num, 0);
  EXPECT_EQ(d.via, "dimension");
  EXPECT_EQ(d.record(), "decision=ZERO_WHP samples=0 prime=2305843009213693951 seed=0 error_bound=0/1 via=dimension");
}

TEST(Vanish, PrimeValidation) {
  EXPECT_THROW(vanish_randomized(P("213"), P("213"), P("312"), 3, 1000003, 0), BadPrime);
  EXPECT_THROW(vanish_randomized(P("213"), P("213"), P("312"), 3, p61 - 2, 0), BadPrime);
  EXPECT_THROW(vanish_randomized(P("213"), P("213"), P("312"), 0, p61, 0), MalformedInput);
  EXPECT_NO_THROW(vanish_randomized(P("213"), P("213"), P("312"), 1, 18446744073709551557ull, 0));
}

TEST(Vanish, DeterministicUnderSeed) {
  const auto a = vanish_randomized(P("1324"), P("2143"), P("3412"), 3, p61, 42);
  const auto b = vanish_randomized(P("1324"), P("2143"), P("3412"), 3, p61, 42);
  EXPECT_EQ(a.record(), b.record());
  ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
  if (a.witness) {
    EXPECT_EQ(a.witness->entries, b.witness->entries);
  }
}

// Any full-rank witness implies non-vanishing; zero verdicts agree with the
// exact oracle on S_3 and the witness replays.
TEST(Vanish, AgreesWithExactS3) {
  SchubertTable t;
  for (const Permutation& u : all_permutations(3))
    for (const Permutation& v : all_permutations(3))
      for (const Permutation& w : all_permutations(3)) {
        if (u.inversions() + v.inversions() != w.inversions()) continue;
        const auto r = vanish_randomized(u, v, w, 3, p61, 1);
        EXPECT_EQ(r.says_zero(), vanish_exact(u, v, w, t)) << u.to_string() << v.to_string() << w.to_string();
        if (r.witness) {
          EXPECT_EQ(replay_witness(u, v, w, *r.witness), r.witness->det);
        }
      }
}

TEST(Vanish, RankNeverExceedsDimension) {
  for (const Permutation& u : all_permutations(4))
    for (const Permutation& v : all_permutations(4)) {
      const Permutation w = Permutation::long_element(4);
      if (u.inversions() + v.inversions() != 6) continue;
      auto rng = sample_rng(2, 0);
      const auto a = random_unipotent(4, p61, rng), b = random_unipotent(4, p61, rng), c = random_unipotent(4, p61, rng);
      EXPECT_LE(ff_rank(assemble_matrix(u, v, w, a, b, c).m, p61), 6);
    }
}

TEST(Hnp, SmallestCase) {
  const PolySystem s = emit_hnp_system(P("21"), P("12"), P("21"));
  EXPECT_TRUE(s.has_symbol("m_1_1"));
  EXPECT_TRUE(s.has_symbol("alpha_1_2"));
  EXPECT_TRUE(s.has_symbol("a_1_2"));
  // M is 1×1, so the final constraint reduces to m_1_1 = 0.
  const auto g = generic_evaluation(s, p61, 0);
  EXPECT_FALSE(g.satisfiable);
  EXPECT_THROW(emit_hnp_system(P("21"), P("21"), P("21")), DimensionMismatch);
}

TEST(Hnp, Examples) {
  EXPECT_TRUE(generic_evaluation(emit_hnp_system(P("213"), P("213"), P("231")), p61, 5).satisfiable);
  EXPECT_FALSE(generic_evaluation(emit_hnp_system(P("213"), P("213"), P("312")), p61, 5).satisfiable);
}

TEST(Hnp, InverseEquationsSolveToInverse) {
  const PolySystem s = emit_hnp_system(P("2143"), P("1324"), P("3142"));
  Assignment<ModInt> known(s.symbol_count());
  auto rng = sample_rng(8, 0);
  std::vector<std::uint64_t> alpha;
  for (int k = static_cast<int>(s.variables().size()); k < s.symbol_count(); ++k) {
    known[k] = ModInt{uniform_mod(rng, p61), p61};
    if (s.name(k).rfind("alpha_", 0) == 0) alpha.push_back(known[k]->v);
  }
  const auto sol = forward_solve<ModInt>(s, known, [](const BigInt& c) { return to_mod(c, p61); });
  const auto rho = UnipotentMatrix::from_entries(4, p61, alpha);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      EXPECT_EQ(sol.values[s.index_of(entry_name("a", i, j))]->v, rho.inverse.at(i - 1, j - 1));
}

TEST(Hnp, KeepScalingsDeclaresScalingVariables) {
  const PolySystem s = emit_hnp_system(P("213"), P("213"), P("312"), Scalings::Keep);
  EXPECT_TRUE(s.has_symbol("xs_1_2"));
  EXPECT_TRUE(s.has_symbol("ys_1_2"));
  EXPECT_FALSE(s.is_parameter(s.index_of("zs_2_3")));
  EXPECT_THROW(generic_evaluation(s, p61, 0), NotForwardSolvable);
  EXPECT_EQ(parse_polysys(write_polysys(s)), s);
}

TEST(Hnp, SizeWithinTwelfthPower) {
  for (int n = 2; n <= 5; ++n) {
    const Permutation w0 = Permutation::long_element(n);
    const auto phi = phi_size(emit_hnp_system(Permutation::identity(n), w0, w0));
    EXPECT_LE(phi, static_cast<std::size_t>(std::pow(n, 12))) << n;
  }
}
