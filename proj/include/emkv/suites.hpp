#ifndef EMKV_SUITES_HPP
#define EMKV_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "emkv/edk.hpp"
#include "emkv/kv.hpp"
#include "emkv/spaces.hpp"

namespace emkv {

using Rng = std::mt19937_64;

/// Random homogeneous elements with small integer coefficients.
Rational random_coeff(Rng& rng);
LiePoly random_lie(Rng& rng, int n, int degree);
NCPoly random_nc(Rng& rng, int n, int degree);
EdkElement random_edk(Rng& rng, int m, int n, int degree);
TangentialDerivation random_tder(Rng& rng, int n, int degree);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // summary, or a minimal counterexample on failure
};

/// Named invariant suites exposed through the CLI `check` subcommand:
/// dd-zero, cosimplicial, jacobi-edk, r-oracle, sder-equiv, kv-commute,
/// fox, hopf.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, uint64_t seed, Solver& solver);

}  // namespace emkv

#endif
