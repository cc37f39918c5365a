#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chow/derivation.hpp"

namespace chow {

struct SuiteResult {
  std::string name;
  bool pass = true;
  unsigned checks = 0;  // symbolic identities or random trials
  std::string witness;  // first failure
};

// Property suites over one derivation, in order: antisymmetry, F-boundary,
// recursion-oracle, tau, bidegree, incidence-vanishing, flow-additivity,
// slice-identity, and d2-identity when d = 2. Each randomized suite draws
// `trials` samples from its own stream split off the seed. Stops after the
// first failing suite.
std::vector<SuiteResult> run_property_suites(const Derivation& d, unsigned trials, std::uint64_t seed);

}  // namespace chow
