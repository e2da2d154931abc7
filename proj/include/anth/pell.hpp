#ifndef ANTH_PELL_HPP
#define ANTH_PELL_HPP

#include <cstddef>

#include "anth/quad_surd.hpp"
#include "anth/rational.hpp"
#include "anth/taxonomy.hpp"

namespace anth {

/// Minimal positive (x, y) with y^2 = N x^2 + 1.
struct PellSolution {
  Integer N;
  Integer x;
  Integer y;
  std::size_t period_len = 0;  // period length of sqrt(N)
};

/// Reads (x, y) off the convergents of sqrt(N): index p for an even period
/// length p, 2p for an odd one. Throws std::domain_error for square N.
PellSolution pell_fundamental(const Integer& N);

/// |u^2 - m v^2| of u + v sqrt(m).
Rational pell_number(const QuadSurd& value);
/// Needs one rational term so the line lies in one quadratic field; throws
/// MixedFieldError otherwise.
Rational pell_number(const TwoTermLine& line);

/// pell_number(Omega^2) == pell_number(Omega)^2 for gamma = Omega^2 / r.
bool x97_squaring_check(const TwoTermLine& omega);
/// pell_number(Omega1 Omega2) == pell_number(Omega1) * pell_number(Omega2).
bool x97_product_check(const TwoTermLine& omega1, const TwoTermLine& omega2);

}  // namespace anth

#endif  // ANTH_PELL_HPP
