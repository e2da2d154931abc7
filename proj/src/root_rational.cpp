#include "anth/root_rational.hpp"

#include <ostream>

#include "anth/surd_sum.hpp"

namespace anth {

RootRational::RootRational(Rational q) : RootRational(std::move(q), 1) {}

RootRational::RootRational(Rational q, Integer m) : q_(std::move(q)), m_(std::move(m)) {
  q_.canonicalize();
  if (q_ <= 0) throw std::domain_error("line length must be positive");
  if (!is_square_free(m_)) {
    throw std::invalid_argument("radicand " + to_string(m_) + " is not square-free");
  }
}

RootRational RootRational::sqrt_of(const Rational& square) {
  if (square <= 0) throw std::domain_error("square must be positive, got " + to_string(square));
  const QuadSurd s = QuadSurd::sqrt(square);
  if (s.is_rational()) return RootRational(s.rational_part());
  return {s.surd_coefficient(), s.radicand()};
}

RootRational RootRational::scaled(const Rational& s) const { return {q_ * s, m_}; }

std::string RootRational::str() const { return SurdSum(*this).str(); }

std::ostream& operator<<(std::ostream& os, const RootRational& x) { return os << x.str(); }

}  // namespace anth
