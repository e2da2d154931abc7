#ifndef ANTH_SAMPLER_HPP
#define ANTH_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "anth/quad_surd.hpp"
#include "anth/root_rational.hpp"
#include "anth/taxonomy.hpp"

namespace anth {

/// Seeded generator of random exact values for the verification suites.
/// Draws use plain modular reduction of mt19937_64 output so a seed gives the
/// same values on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  /// Positive rational num/den with num in [1, max_num], den in [1, max_den].
  Rational positive_rational(long max_num = 30, long max_den = 12);
  /// Nonzero rational with either sign.
  Rational nonzero_rational(long max_num = 30, long max_den = 12);
  /// Square-free integer in [2, max].
  Integer square_free(long max = 30);
  /// Irrational element of Q(sqrt(m)), any sign; coefficients bounded as in nonzero_rational.
  QuadSurd surd(const Integer& m, long max_num = 30, long max_den = 12);
  /// Positive element of Q(sqrt(m)); irrational unless m = 1.
  QuadSurd positive_surd(const Integer& m, long max_num = 30, long max_den = 12);
  /// Line q*sqrt(k) with k drawn from a small set including 1.
  RootRational root_rational();
  /// A valid two-term line of the given order (1..6) relative to r = 1.
  TwoTermLine two_term_of_order(int order, Sign sign);

 private:
  std::mt19937_64 rng_;
};

}  // namespace anth

#endif  // ANTH_SAMPLER_HPP
