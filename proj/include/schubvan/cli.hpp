#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code: 0 ok, 1 self-test failure, 2 bad input,
// 3 overflow or size limit, 4 I/O.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <new>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubvan/errors.hpp"
#include "schubvan/lift.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/polysys.hpp"
#include "schubvan/purbhoo.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/selftest.hpp"

namespace schubvan::cli {

enum ExitCode : int { kOk = 0, kSelftestFailed = 1, kBadInput = 2, kOverflow = 3, kIoError = 4 };

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExactMaxDegree = 6;
inline constexpr int kAutoExactMaxDegree = 4;

/// vanish with --method auto|purbhoo|exact.
inline VanishVerdict decide_vanishing(const Permutation& u, const Permutation& v, const Permutation& w,
                                      const std::string& method, int samples, std::uint64_t prime,
                                      std::uint64_t seed) {
  const Triple t(u, v, w);
  auto exact = [&] {
    if (t.degree() > kExactMaxDegree) throw TooLarge("exact method limited to n <= 6");
    VanishVerdict r;
    r.prime = prime;
    r.seed = seed;
    r.via = "exact";
    r.decision = vanish_exact(t.u, t.v, t.w) ? Decision::ZeroExact : Decision::NonzeroExact;
    return r;
  };
  if (method == "exact") return exact();
  if (method == "purbhoo") return vanish_randomized(t.u, t.v, t.w, samples, prime, seed);

  require_large_prime(prime);
  const FilterReport f = fast_filters(t.u, t.v, t.w);
  if (f.proves_vanishing()) {
    VanishVerdict r;
    r.prime = prime;
    r.seed = seed;
    r.decision = Decision::ZeroExact;
    r.via = f.dimension ? "bruhat" : "dimension";
    return r;
  }
  if (t.degree() <= kAutoExactMaxDegree) return exact();
  return vanish_randomized(t.u, t.v, t.w, samples, prime, seed);
}

namespace detail {

inline void write_system(const PolySystem& sys, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string summary = "phi=" + std::to_string(phi_size(sys)) +
                              " variables=" + std::to_string(sys.variables().size()) +
                              " parameters=" + std::to_string(sys.parameters().size()) +
                              " equations=" + std::to_string(sys.equations().size()) + "\n";
  if (path.empty()) {
    out << write_polysys(sys);
    err << summary;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << write_polysys(sys);
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
  out << summary;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert calculus, Purbhoo vanishing tests and lifted polynomial systems", "schubvan"};
  app.require_subcommand(1);

  std::string w1, w2, w3, path, method = "auto", scalings = "unit", level = "quick";
  int samples = 3, det_n = 1;
  std::uint64_t prime = kMersenne61, seed = 0;
  bool inject_flip = false;

  auto* poly = app.add_subcommand("poly", "Schubert polynomial S_w");
  poly->add_option("w", w1)->required();
  auto* dreams = app.add_subcommand("pipedreams", "pipe dreams of w: count, then one line per dream");
  dreams->add_option("w", w1)->required();
  auto* coeff = app.add_subcommand("coeff", "Schubert coefficient c^w_{u,v}");
  coeff->add_option("u", w1)->required();
  coeff->add_option("v", w2)->required();
  coeff->add_option("w", w3)->required();
  auto* expand = app.add_subcommand("expand", "expansion of S_u S_v in the Schubert basis");
  expand->add_option("u", w1)->required();
  expand->add_option("v", w2)->required();
  auto* vanish = app.add_subcommand("vanish", "decide c^w_{u,v} = 0");
  vanish->add_option("u", w1)->required();
  vanish->add_option("v", w2)->required();
  vanish->add_option("w", w3)->required();
  vanish->add_option("--method", method)->check(CLI::IsMember({"auto", "purbhoo", "exact"}))->capture_default_str();
  vanish->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
  vanish->add_option("--prime", prime)->capture_default_str();
  vanish->add_option("--seed", seed)->capture_default_str();
  auto* lift = app.add_subcommand("lift-det", "lifted formulation of det X = z");
  lift->add_option("n", det_n)->required()->check(CLI::PositiveNumber);
  lift->add_option("-o,--output", path, "POLYSYS output file (default: standard output)");
  auto* hnp = app.add_subcommand("emit-hnp", "parametric system for the triple (u, v, w0 w)");
  hnp->add_option("u", w1)->required();
  hnp->add_option("v", w2)->required();
  hnp->add_option("w", w3)->required();
  hnp->add_option("-o,--output", path, "POLYSYS output file (default: standard output)");
  hnp->add_option("--scalings", scalings)->check(CLI::IsMember({"unit", "keep"}))->capture_default_str();
  auto* self = app.add_subcommand("selftest", "run the built-in invariant suites");
  self->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  self->add_option("--seed", seed)->capture_default_str();
  self->add_flag("--inject-sink-flip", inject_flip, "route completed clow sequences to the wrong sink");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*poly) {
      out << schubert_dd(parse_permutation(w1)).to_string() << '\n';
    } else if (*dreams) {
      const auto list = pipe_dreams(parse_permutation(w1));
      out << list.size() << '\n';
      for (const PipeDream& d : list) out << d.to_string() << '\n';
    } else if (*coeff) {
      out << schubert_coefficient(parse_permutation(w1), parse_permutation(w2), parse_permutation(w3)) << '\n';
    } else if (*expand) {
      out << format_expansion(expand_product(parse_permutation(w1), parse_permutation(w2)));
    } else if (*vanish) {
      const VanishVerdict r = decide_vanishing(parse_permutation(w1), parse_permutation(w2),
                                               parse_permutation(w3), method, samples, prime, seed);
      out << r.record() << '\n';
      if (r.witness) out << r.witness->to_string() << '\n';
    } else if (*lift) {
      detail::write_system(det_lifted(det_n).system, path, out, err);
    } else if (*hnp) {
      const PolySystem sys = emit_hnp_system(parse_permutation(w1), parse_permutation(w2), parse_permutation(w3),
                                             scalings == "keep" ? Scalings::Keep : Scalings::Unit);
      detail::write_system(sys, path, out, err);
    } else if (*self) {
      SelftestOptions opts;
      opts.level = level == "full" ? SelftestLevel::Full : SelftestLevel::Quick;
      opts.seed = seed;
      opts.mv.invert_sink_sign = inject_flip;
      return run_selftest(opts, out) ? kOk : kSelftestFailed;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    // broken internal invariant
    err << "internal error: " << e.what() << '\n';
    return kSelftestFailed;
  }
  return kOk;
}

}  // namespace schubvan::cli
