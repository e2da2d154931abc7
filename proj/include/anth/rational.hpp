#ifndef ANTH_RATIONAL_HPP
#define ANTH_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace anth {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction. GMP keeps every value canonical: the
/// denominator is positive and coprime to the numerator.
using Rational = mpq_class;

/// Thrown when two operands live in different quadratic fields.
class MixedFieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an expansion does not close within its step budget.
class CapExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int sign(const Integer& x);
int sign(const Rational& x);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Exact square root of a non-negative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& x);

/// n = outside^2 * square_free for n > 0.
struct SquareFreeSplit {
  Integer outside;
  Integer square_free;
};
SquareFreeSplit square_free_split(const Integer& n);

bool is_square_free(const Integer& n);

/// Smallest prime factor of n > 1 (trial division).
Integer smallest_prime_factor(const Integer& n);

Integer floor_of(const Rational& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace anth

#endif  // ANTH_RATIONAL_HPP
