#ifndef POLYBOSON_SAMPLING_HPP
#define POLYBOSON_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "polyboson/algebra.hpp"

namespace polyboson {

// Deterministic draws used by the property suites and the preset-suite CLI.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  // Rational with |numerator| <= num_bound, 1 <= denominator <= den_bound.
  Rational rational(long num_bound = 5, long den_bound = 4) {
    return Rational(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
  }

  Rational nonzero_rational(long num_bound = 5, long den_bound = 4) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }

  // Random algebra with 1 <= n <= nmax and nonzero leading coefficient.
  AlgebraSpec algebra(long nmax = 6) {
    long n = uniform_int(1, nmax);
    std::vector<Rational> coeffs;
    for (long i = 0; i < n; ++i) coeffs.push_back(rational());
    coeffs.push_back(nonzero_rational());
    return make_algebra(n, std::move(coeffs));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polyboson

#endif
