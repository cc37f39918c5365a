#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "chow/rational.hpp"

namespace chow {

// Seeded source for the randomized suites. Each suite derives its own
// stream from the run seed so that suites do not perturb one another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  Rng split(std::string_view suite) const;

  // numerator in [-9, 9], denominator in [1, 9]
  Rational small_rational();
  Rational nonzero_small_rational();
  long uniform_int(long lo, long hi);

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label);

}  // namespace chow
