#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "schubvan/cli.hpp"

using namespace schubvan;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, Poly) {
  const auto r = run({"poly", "1432"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1*x1^2*x2 + 1*x1^2*x3 + 1*x1*x2^2 + 1*x1*x2*x3 + 1*x2^2*x3\n");
}

TEST(Cli, PipeDreams) {
  const auto r = run({"pipedreams", "1432"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "5\n");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  EXPECT_EQ(run({"pipedreams", "21"}).out, "1\n(1,1)\n");
}

TEST(Cli, CoeffAndExpand) {
  EXPECT_EQ(run({"coeff", "213", "213", "312"}).out, "1\n");
  EXPECT_EQ(run({"coeff", "213", "213", "231"}).out, "0\n");
  EXPECT_EQ(run({"expand", "213", "132"}).out, "231\t1\n312\t1\n");
}

TEST(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({"poly", "1332"}).code, 2);
  EXPECT_EQ(run({"coeff", "21", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"vanish", "213", "213", "312", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"vanish", "213", "213", "312", "--prime", "1000003"}).code, 2);
  EXPECT_EQ(run({"emit-hnp", "21", "21", "21"}).code, 2);
  EXPECT_EQ(run({"lift-det", "0"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VanishMethods) {
  const auto exact = run({"vanish", "213", "213", "231", "--method", "exact"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_NE(exact.out.find("decision=ZERO_EXACT"), std::string::npos);
  EXPECT_NE(exact.out.find("via=exact"), std::string::npos);

  const auto cert = run({"vanish", "213", "213", "312", "--method", "purbhoo", "--seed", "7"});
  EXPECT_EQ(cert.code, 0);
  EXPECT_EQ(cert.out.rfind("decision=NONZERO_CERTIFIED samples=1 prime=2305843009213693951 seed=7 error_bound=0/1 via=purbhoo\n", 0), 0u);
  EXPECT_NE(cert.out.find("witness prime=2305843009213693951 seed=7 sample=0 det="), std::string::npos);

  const auto dim = run({"vanish", "321", "321", "321"});
  EXPECT_NE(dim.out.find("decision=ZERO_EXACT"), std::string::npos);
  EXPECT_NE(dim.out.find("via=dimension"), std::string::npos);

  const auto bruhat = run({"vanish", "1324", "2134", "2143"});
  EXPECT_NE(bruhat.out.find("via=bruhat"), std::string::npos);

  const auto big = run({"vanish", "1243567", "2134567", "2143567", "--method", "exact"});
  EXPECT_EQ(big.code, 3);
  const auto autobig = run({"vanish", "12435", "21345", "21435"});
  EXPECT_NE(autobig.out.find("decision=NONZERO_CERTIFIED"), std::string::npos);
}

TEST(Cli, VanishDeterministic) {
  const std::vector<std::string> args = {"vanish", "13254", "21354", "31254", "--method", "purbhoo", "--seed", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, LiftDetStdoutAndFile) {
  const auto r = run({"lift-det", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, write_polysys(det_lifted(1).system));
  EXPECT_EQ(r.err.rfind("phi=", 0), 0u);

  const auto dir = std::filesystem::temp_directory_path() / "schubvan_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "d2.ps";
  const auto w = run({"lift-det", "2", "-o", file.string()});
  EXPECT_EQ(w.code, 0);
  const PolySystem sys = det_lifted(2).system;
  EXPECT_EQ(slurp(file), write_polysys(sys));
  EXPECT_EQ(w.out, "phi=" + std::to_string(phi_size(sys)) + " variables=" + std::to_string(sys.variables().size()) +
                       " parameters=0 equations=" + std::to_string(sys.equations().size()) + "\n");
  EXPECT_EQ(phi_size(parse_polysys(slurp(file))), phi_size(sys));
  std::filesystem::remove_all(dir);
}

TEST(Cli, EmitHnp) {
  const auto dir = std::filesystem::temp_directory_path() / "schubvan_cli_hnp";
  std::filesystem::create_directories(dir);
  const auto file = dir / "s.ps";
  EXPECT_EQ(run({"emit-hnp", "213", "213", "231", "-o", file.string()}).code, 0);
  const PolySystem sys = parse_polysys(slurp(file));
  EXPECT_TRUE(generic_evaluation(sys, kMersenne61, 0).satisfiable);
  EXPECT_EQ(run({"emit-hnp", "213", "213", "312", "--scalings", "keep", "-o", file.string()}).code, 0);
  EXPECT_TRUE(parse_polysys(slurp(file)).has_symbol("xs_1_2"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, IoErrorExitsFour) {
  EXPECT_EQ(run({"lift-det", "2", "-o", "/nonexistent-dir/x/y.ps"}).code, 4);
}

TEST(Cli, SelftestQuickDeterministic) {
  const auto a = run({"selftest", "--level", "quick", "--seed", "5"});
  const auto b = run({"selftest", "--level", "quick", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("selftest quick seed=5: PASS"), std::string::npos);
}

TEST(Cli, SelftestCatchesSinkFlip) {
  const auto r = run({"selftest", "--level", "quick", "--inject-sink-flip"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("suite leibniz-equality: FAIL"), std::string::npos);
}
