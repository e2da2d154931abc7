#ifndef ANTH_ROOT_RATIONAL_HPP
#define ANTH_ROOT_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include "anth/quad_surd.hpp"
#include "anth/rational.hpp"

namespace anth {

/// A positive line q*sqrt(m), m square-free. Its square q^2*m is rational, so
/// every RootRational is rational-in-square with respect to the unit line.
class RootRational {
 public:
  RootRational() = default;
  RootRational(long value) : RootRational(Rational(value)) {}  // NOLINT
  RootRational(Rational q);                                       // NOLINT
  RootRational(Rational q, Integer m);

  /// The positive square root of a positive rational area.
  static RootRational sqrt_of(const Rational& square);

  const Rational& coefficient() const { return q_; }
  const Integer& radicand() const { return m_; }
  bool is_rational() const { return m_ == 1; }

  Rational square() const { return q_ * q_ * Rational(m_); }
  QuadSurd to_quad() const { return {0, q_, m_}; }
  RootRational scaled(const Rational& s) const;  // s > 0

  /// Commensurable in length: the ratio is rational.
  bool commensurable_with(const RootRational& other) const { return m_ == other.m_; }

  friend bool operator==(const RootRational&, const RootRational&) = default;
  friend std::strong_ordering operator<=>(const RootRational& a, const RootRational& b) {
    return cmp(a.square(), b.square()) <=> 0;
  }

  std::string str() const;

 private:
  Rational q_{1};
  Integer m_{1};
};

std::ostream& operator<<(std::ostream& os, const RootRational& x);

}  // namespace anth

#endif  // ANTH_ROOT_RATIONAL_HPP
