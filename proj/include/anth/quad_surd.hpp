#ifndef ANTH_QUAD_SURD_HPP
#define ANTH_QUAD_SURD_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include "anth/rational.hpp"

namespace anth {

/// An element u + v*sqrt(m) of the real quadratic field Q(sqrt(m)).
///
/// Instances are always canonical: m is a square-free positive integer and a
/// rational value is stored with v = 0 and m = 1. Two QuadSurds represent the
/// same real number iff their fields compare equal.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(long value) : u_(value) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(Rational value) : u_(std::move(value)) { u_.canonicalize(); }  // NOLINT

  /// u + v*sqrt(m) for a square-free m >= 1; throws if m is not square-free.
  QuadSurd(Rational u, Rational v, Integer m);

  /// sqrt(k) for a positive rational k.
  static QuadSurd sqrt(const Rational& k);

  const Rational& rational_part() const { return u_; }
  const Rational& surd_coefficient() const { return v_; }
  const Integer& radicand() const { return m_; }

  bool is_rational() const { return m_ == 1; }
  bool is_zero() const { return is_rational() && u_ == 0; }

  /// Exact sign of the represented real.
  int sign() const;

  QuadSurd conjugate() const { return {u_, -v_, m_}; }
  /// Field norm u^2 - m*v^2.
  Rational norm() const { return u_ * u_ - Rational(m_) * v_ * v_; }
  QuadSurd reciprocal() const;

  /// True if both values lie in one field (equal radicand or one rational).
  bool same_field(const QuadSurd& other) const {
    return is_rational() || other.is_rational() || m_ == other.m_;
  }

  QuadSurd operator-() const { return {-u_, -v_, m_}; }
  QuadSurd& operator+=(const QuadSurd& rhs);
  QuadSurd& operator-=(const QuadSurd& rhs);
  QuadSurd& operator*=(const QuadSurd& rhs);
  QuadSurd& operator/=(const QuadSurd& rhs);

  friend QuadSurd operator+(QuadSurd a, const QuadSurd& b) { return a += b; }
  friend QuadSurd operator-(QuadSurd a, const QuadSurd& b) { return a -= b; }
  friend QuadSurd operator*(QuadSurd a, const QuadSurd& b) { return a *= b; }
  friend QuadSurd operator/(QuadSurd a, const QuadSurd& b) { return a /= b; }

  friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
    return a.m_ == b.m_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

  /// Orders by real value. Works across fields.
  friend std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b);

  /// Expression-grammar text, e.g. "-1 + 2*sqrt(2)" or "1/2*sqrt(5)".
  std::string str() const;

 private:
  Rational u_{0};
  Rational v_{0};
  Integer m_{1};
};

std::ostream& operator<<(std::ostream& os, const QuadSurd& x);

/// Lexicographic order on the canonical fields; usable as a map comparator.
struct CanonicalLess {
  bool operator()(const QuadSurd& a, const QuadSurd& b) const;
};

/// u + v*sqrt(k) rewritten canonically. k is a positive rational radicand.
QuadSurd surd_normalize(const Rational& u, const Rational& v, const Rational& k);

enum class ArithOp { add, sub, mul, div };
QuadSurd surd_arith(const QuadSurd& a, const QuadSurd& b, ArithOp op);

int surd_sign(const QuadSurd& a);

/// Largest integer not exceeding the value.
Integer floor_of(const QuadSurd& x);

}  // namespace anth

#endif  // ANTH_QUAD_SURD_HPP
