#include <gtest/gtest.h>

#include "schubvan/polysys.hpp"

using namespace schubvan;

namespace {

BigInt id(const BigInt& c) { return c; }

}  // namespace

TEST(Phi, CoefficientBits) {
  EXPECT_EQ(coefficient_bits(0), 1u);
  EXPECT_EQ(coefficient_bits(1), 2u);
  EXPECT_EQ(coefficient_bits(-1), 2u);
  EXPECT_EQ(coefficient_bits(2), 3u);
  EXPECT_EQ(coefficient_bits(3), 3u);
  EXPECT_EQ(coefficient_bits(4), 4u);
  EXPECT_EQ(coefficient_bits(-255), 9u);
  EXPECT_EQ(coefficient_bits(256), 10u);
  EXPECT_EQ(coefficient_bits(BigInt(1) << 100), 102u);
}

TEST(Phi, SmallSystems) {
  PolySystem empty;
  EXPECT_EQ(phi_size(empty), 0u);

  PolySystem a;
  a.add_variable("x1");
  a.add_equation(a.var("x1") - SparsePoly::constant(1));
  EXPECT_EQ(phi_size(a), 1u + 2u + 2u);

  PolySystem b;
  b.add_variable("x1");
  b.add_variable("z");
  b.add_equation(b.var("x1") * b.var("x1") - b.var("z"));
  EXPECT_EQ(phi_size(b), 2u + 2u + 2u);
}

TEST(Phi, AtLeastEquationCount) {
  PolySystem s;
  s.add_variable("x");
  s.add_equation(SparsePoly::constant(0));
  s.add_equation(s.var("x"));
  s.add_equation(SparsePoly::constant(7));
  EXPECT_GE(phi_size(s), s.equations().size());
}

TEST(PolySystem, Declarations) {
  PolySystem s;
  EXPECT_EQ(s.add_variable("x"), 0);
  EXPECT_EQ(s.add_variable("y_1"), 1);
  EXPECT_EQ(s.add_parameter("alpha"), 2);
  EXPECT_TRUE(s.is_parameter(2));
  EXPECT_EQ(s.name(1), "y_1");
  EXPECT_THROW(s.add_variable("late"), std::logic_error);
  EXPECT_THROW(s.add_parameter("x"), MalformedInput);
  EXPECT_THROW(s.add_parameter("Bad"), MalformedInput);
  EXPECT_THROW(s.add_parameter(""), MalformedInput);
  EXPECT_THROW(s.index_of("nope"), MalformedInput);
  EXPECT_THROW(s.add_equation(SparsePoly::variable(3)), std::logic_error);
}

TEST(Format, ByteExact) {
  PolySystem s;
  s.add_variable("y_0_1_1_0");
  s.add_variable("z");
  s.add_parameter("alpha_1_2");
  s.add_equation(s.var("y_0_1_1_0") - SparsePoly::constant(1));
  s.add_equation(scalar_mul(-3, s.var("alpha_1_2") * s.var("z") * s.var("z")) + s.var("y_0_1_1_0"));
  EXPECT_EQ(write_polysys(s),
            "POLYSYS 1\n"
            "VAR y_0_1_1_0\n"
            "VAR z\n"
            "PARAM alpha_1_2\n"
            "EQ 1*y_0_1_1_0 - 1\n"
            "EQ 1*y_0_1_1_0 - 3*z^2*alpha_1_2\n");
}

TEST(Format, RoundTrip) {
  PolySystem s;
  for (const char* v : {"a", "b", "c"}) s.add_variable(v);
  s.add_parameter("p");
  s.add_equation(scalar_mul(BigInt("123456789012345678901234567890"), s.var("a") * s.var("b")) - s.var("c"));
  s.add_equation(SparsePoly::constant(0));
  s.add_equation(SparsePoly::constant(-5) + s.var("p") * s.var("a") * s.var("a") * s.var("a"));
  const PolySystem back = parse_polysys(write_polysys(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(write_polysys(back), write_polysys(s));
}

TEST(Format, ParseErrors) {
  EXPECT_THROW(parse_polysys("POLYSYS 2\n"), MalformedInput);
  EXPECT_THROW(parse_polysys("POLYSYS 1\nVAR x\nEQ 1*y\n"), MalformedInput);
  EXPECT_THROW(parse_polysys("POLYSYS 1\nVAR x\nEQ 1*x +\n"), MalformedInput);
  EXPECT_THROW(parse_polysys("POLYSYS 1\nVAR x\nEQ 1*x 2\n"), MalformedInput);
  EXPECT_THROW(parse_polysys("POLYSYS 1\nVAR x\nEQ a*x\n"), MalformedInput);
  EXPECT_THROW(parse_polysys("POLYSYS 1\nFOO\n"), MalformedInput);
  EXPECT_NO_THROW(parse_polysys("POLYSYS 1\nVAR x\nEQ -2*x^3 + 1\n"));
}

TEST(ForwardSolve, LayeredSystem) {
  PolySystem s;
  s.add_variable("x");
  s.add_variable("y");
  s.add_variable("w");
  s.add_equation(s.var("y") - s.var("x") * s.var("x"));       // y = x^2
  s.add_equation(SparsePoly::constant(3) - s.var("w") + s.var("y"));  // w = y + 3
  s.add_equation(s.var("w") - SparsePoly::constant(12));      // constraint
  Assignment<BigInt> known(3);
  known[0] = BigInt(3);
  const auto sol = forward_solve<BigInt>(s, known, id);
  EXPECT_EQ(*sol.values[1], 9);
  EXPECT_EQ(*sol.values[2], 12);
  ASSERT_EQ(sol.residuals.size(), 1u);
  EXPECT_EQ(sol.residuals[0], 0);
  EXPECT_EQ(sol.constraint_equations, (std::vector<std::size_t>{2}));
  for (const BigInt& v : equation_values<BigInt>(s, sol.values, id)) EXPECT_EQ(v, 0);
}

TEST(ForwardSolve, Rejections) {
  PolySystem s;
  s.add_variable("x");
  s.add_variable("y");
  s.add_variable("w");
  s.add_equation(s.var("y") - s.var("w"));
  EXPECT_THROW(forward_solve<BigInt>(s, Assignment<BigInt>(3), id), NotForwardSolvable);

  PolySystem t;
  t.add_variable("x");
  t.add_variable("y");
  t.add_equation(t.var("y") * t.var("y") - t.var("x"));
  Assignment<BigInt> k(2);
  k[0] = BigInt(4);
  EXPECT_THROW(forward_solve<BigInt>(t, k, id), NotForwardSolvable);

  PolySystem u;
  u.add_variable("x");
  u.add_variable("y");
  u.add_equation(scalar_mul(2, u.var("y")) - u.var("x"));
  EXPECT_THROW(forward_solve<BigInt>(u, k, id), NotForwardSolvable);
}
