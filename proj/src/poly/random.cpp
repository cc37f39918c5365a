#include "chow/random.hpp"

namespace chow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return splitmix64(seed ^ splitmix64(h));
}

Rng Rng::split(std::string_view suite) const { return Rng(mix_seed(seed_, suite)); }

long Rng::uniform_int(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(engine_);
}

Rational Rng::small_rational() {
  long num = uniform_int(-9, 9);
  long den = uniform_int(1, 9);
  return make_rational(num, static_cast<unsigned long>(den));
}

Rational Rng::nonzero_small_rational() {
  long num = 0;
  while (num == 0) num = uniform_int(-9, 9);
  long den = uniform_int(1, 9);
  return make_rational(num, static_cast<unsigned long>(den));
}

}  // namespace chow
