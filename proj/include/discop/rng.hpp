#pragma once

#include "discop/rational.hpp"

#include <cstdint>
#include <random>

namespace discop {

// Seeded deterministic generator for the randomized suites. mt19937_64 output
// is fixed by the standard; the samplers below avoid std distributions, whose
// streams are implementation-defined, so reports are bit-identical across
// platforms for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  // uniform in [lo, hi]
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  // rational with numerator in [-bound, bound], denominator in [1, bound]
  Rational rational(long long bound) {
    return Rational(int_in(-bound, bound), int_in(1, bound));
  }

  Rational positive_rational(long long bound) {
    return Rational(int_in(1, bound), int_in(1, bound));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace discop
