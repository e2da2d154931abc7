#include "anth/pell.hpp"

#include <stdexcept>

#include "anth/anthyphairesis.hpp"

namespace anth {

PellSolution pell_fundamental(const Integer& N) {
  if (N < 2 || is_perfect_square(N)) {
    throw std::domain_error("Pell equation needs a non-square N >= 2, got " + to_string(N));
  }
  const CFExpansion cf = anth_expand(QuadSurd::sqrt(Rational(N)));
  const std::size_t p = cf.period.size();
  const std::size_t index = p % 2 == 0 ? p : 2 * p;
  const ConvergentTable rows = convergents(cf, index);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].q * rows[i].q - N * rows[i].p * rows[i].p == 1) {
      throw std::logic_error("a convergent before the period boundary already solves N = " + to_string(N));
    }
  }
  const ConvergentRow& row = rows.back();
  if (row.q * row.q - N * row.p * row.p != 1) {
    throw std::logic_error("period-boundary convergent fails y^2 - N x^2 = 1 for N = " + to_string(N));
  }
  return {N, row.p, row.q, p};
}

Rational pell_number(const QuadSurd& value) { return abs(value.norm()); }

Rational pell_number(const TwoTermLine& line) {
  const auto quad = line.value().to_quad();
  if (!quad) throw MixedFieldError(line.str() + " spans two radicands; its Pell number is undefined");
  return pell_number(*quad);
}

bool x97_squaring_check(const TwoTermLine& omega) {
  const Rational n = pell_number(omega);
  const QuadSurd gamma = *(omega.value() * omega.value()).to_quad();
  return pell_number(gamma) == n * n;
}

bool x97_product_check(const TwoTermLine& omega1, const TwoTermLine& omega2) {
  const QuadSurd a = *omega1.value().to_quad();
  const QuadSurd b = *omega2.value().to_quad();
  const Rational n1 = pell_number(omega1);
  const Rational n2 = pell_number(omega2);
  return pell_number(a * b) == n1 * n2;
}

}  // namespace anth
