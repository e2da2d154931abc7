#ifndef ANTH_SURD_SUM_HPP
#define ANTH_SURD_SUM_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "anth/quad_surd.hpp"
#include "anth/rational.hpp"

namespace anth {

class RootRational;

/// A finite sum  c_1*sqrt(k_1) + ... + c_n*sqrt(k_n)  with distinct
/// square-free k_i >= 1 and nonzero rational c_i.
///
/// Square roots of distinct square-free integers are linearly independent
/// over Q, so the term map is canonical: equality, rationality and
/// proportionality are decided by comparing coefficients. The set is closed
/// under +, -, * and division, which makes it the home for the two-radicand
/// lines (dodecahedron side, fifth and sixth orders) that fall outside one
/// quadratic field.
class SurdSum {
 public:
  using Terms = std::map<Integer, Rational>;

  SurdSum() = default;
  SurdSum(long value);                  // NOLINT(google-explicit-constructor)
  SurdSum(const Rational& value);       // NOLINT
  SurdSum(const QuadSurd& value);       // NOLINT
  SurdSum(const RootRational& value);   // NOLINT

  /// coeff * sqrt(k) for any positive rational k.
  static SurdSum term(const Rational& coeff, const Rational& k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  /// Coefficient of sqrt(k); zero when absent.
  Rational coefficient(const Integer& k) const;

  /// Exactly one term, and it is irrational: v*sqrt(k), k > 1.
  bool is_single_radical() const {
    return terms_.size() == 1 && terms_.begin()->first != 1;
  }
  /// At most one irrational radicand: convertible to a QuadSurd.
  std::optional<QuadSurd> to_quad() const;

  int sign() const;
  SurdSum reciprocal() const;

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& rhs);
  SurdSum& operator-=(const SurdSum& rhs);
  SurdSum& operator*=(const SurdSum& rhs);
  SurdSum& operator/=(const SurdSum& rhs);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(SurdSum a, const SurdSum& b) { return a *= b; }
  friend SurdSum operator/(SurdSum a, const SurdSum& b) { return a /= b; }
  friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const SurdSum& a, const SurdSum& b) { return (a - b).sign() < 0; }
  friend bool operator>(const SurdSum& a, const SurdSum& b) { return b < a; }

  std::string str() const;

 private:
  void add_term(const Integer& k, const Rational& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SurdSum& x);

/// c with a = c*b, if the ratio a/b is rational (b nonzero).
std::optional<Rational> rational_ratio(const SurdSum& a, const SurdSum& b);

}  // namespace anth

#endif  // ANTH_SURD_SUM_HPP
