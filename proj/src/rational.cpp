#include "anth/rational.hpp"

namespace anth {

int sign(const Integer& x) { return sgn(x); }

int sign(const Rational& x) { return sgn(x); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (!is_perfect_square(x.get_num()) || !is_perfect_square(x.get_den())) {
    return std::nullopt;
  }
  Rational r(isqrt(x.get_num()), isqrt(x.get_den()));
  r.canonicalize();
  return r;
}

Integer smallest_prime_factor(const Integer& n) {
  if (n < 2) throw std::domain_error("smallest_prime_factor needs n > 1");
  if (n % 2 == 0) return 2;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

SquareFreeSplit square_free_split(const Integer& n) {
  if (n <= 0) throw std::domain_error("square_free_split needs n > 0");
  SquareFreeSplit out{1, 1};
  Integer rest = n;
  for (Integer d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    int power = 0;
    while (rest % d == 0) {
      rest /= d;
      ++power;
    }
    for (int i = 0; i + 1 < power; i += 2) out.outside *= d;
    if (power % 2 == 1) out.square_free *= d;
  }
  out.square_free *= rest;
  return out;
}

bool is_square_free(const Integer& n) {
  return n > 0 && square_free_split(n).outside == 1;
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace anth
