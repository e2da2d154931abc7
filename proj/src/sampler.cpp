#include "anth/sampler.hpp"

#include <stdexcept>

namespace anth {

namespace {

bool rational_square(const Rational& x) { return rational_sqrt(x).has_value(); }

}  // namespace

Rational Sampler::positive_rational(long max_num, long max_den) {
  Rational r(between(1, max_num), between(1, max_den));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational(long max_num, long max_den) {
  Rational r = positive_rational(max_num, max_den);
  return below(2) == 0 ? r : Rational(-r);
}

Integer Sampler::square_free(long max) {
  for (;;) {
    const Integer k = between(2, max);
    if (is_square_free(k)) return k;
  }
}

QuadSurd Sampler::surd(const Integer& m, long max_num, long max_den) {
  const Rational u = below(4) == 0 ? Rational(0) : nonzero_rational(max_num, max_den);
  return {u, nonzero_rational(max_num, max_den), m};
}

QuadSurd Sampler::positive_surd(const Integer& m, long max_num, long max_den) {
  if (m == 1) return QuadSurd(positive_rational(max_num, max_den));
  for (;;) {
    QuadSurd x = surd(m, max_num, max_den);
    if (x.sign() > 0) return x;
    if (x.sign() < 0) return -x;
  }
}

RootRational Sampler::root_rational() {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 11, 13};
  return {positive_rational(), radicands[below(std::size(radicands))]};
}

TwoTermLine Sampler::two_term_of_order(int order, Sign sign) {
  if (order < 1 || order > 6) throw std::out_of_range("order must be 1..6");
  for (;;) {
    RootRational zeta, eta;
    if (order <= 3) {
      // theta = t zeta with 1 - t^2 a non-square, so eta = zeta sqrt(1 - t^2).
      const Rational t(between(1, 11), 12);
      const Rational shrink = 1 - t * t;
      if (rational_square(shrink)) continue;
      if (order == 1) {
        zeta = RootRational(positive_rational());
      } else if (order == 2) {
        const Rational e = positive_rational();
        zeta = RootRational::sqrt_of(e * e / shrink);
      } else {
        const Integer m = square_free();
        const RootRational z(positive_rational(), m);
        if (rational_square(z.square() * shrink)) continue;
        zeta = z;
      }
      eta = RootRational::sqrt_of(zeta.square() * shrink);
    } else {
      Rational zeta_sq, eta_sq;
      if (order == 4) {
        const Rational q = positive_rational();
        zeta_sq = q * q;
        eta_sq = zeta_sq * Rational(between(1, 23), 24);
      } else if (order == 5) {
        const Rational e = positive_rational();
        eta_sq = e * e;
        zeta_sq = eta_sq + positive_rational();
      } else {
        eta_sq = positive_rational();
        zeta_sq = eta_sq + positive_rational();
      }
      if (rational_square((zeta_sq - eta_sq) / zeta_sq)) continue;  // theta ~ zeta
      if (rational_square(eta_sq / zeta_sq)) continue;              // commensurable terms
      zeta = RootRational::sqrt_of(zeta_sq);
      eta = RootRational::sqrt_of(eta_sq);
    }
    if (zeta.commensurable_with(eta)) continue;
    TwoTermLine line = make_two_term(zeta, eta, sign);
    if (classify_order(line) == order) return line;
  }
}

}  // namespace anth
