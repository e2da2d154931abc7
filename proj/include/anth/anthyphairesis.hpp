#ifndef ANTH_ANTHYPHAIRESIS_HPP
#define ANTH_ANTHYPHAIRESIS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "anth/quad_surd.hpp"
#include "anth/rational.hpp"

namespace anth {

/// Default step budget for expansions when the caller has no better bound.
inline constexpr std::size_t kDefaultCap = 100000;

/// Quotient sequence of a ratio: a finite head followed by an optional
/// repeating period. Both parts are minimal. The period is empty exactly when
/// the ratio is rational.
struct CFExpansion {
  std::vector<Integer> head;
  std::vector<Integer> period;

  bool finite() const { return period.empty(); }
  /// k_i, unrolling the period as needed. Throws std::out_of_range past the
  /// end of a finite expansion.
  const Integer& quotient(std::size_t i) const;
  /// Number of quotients of a finite expansion.
  std::size_t length() const { return head.size(); }

  /// "[k0; k1, ..., (km, ..., kn)]", the parenthesised block being the period.
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed text.
  static CFExpansion parse(const std::string& text);

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

struct AnthStep {
  Integer quotient;
  QuadSurd remainder;
};

/// a = k*b + c with 0 <= c < b, for positive a, b in one field.
AnthStep anth_step(const QuadSurd& a, const QuadSurd& b);

/// Expansion of a positive x. Rationals give a finite head (Euclid's
/// algorithm); quadratic irrationals stop at the first repeated
/// remainder ratio. Throws CapExhausted after `cap` quotients.
CFExpansion anth_expand(const QuadSurd& x, std::size_t cap = kDefaultCap);

/// Anth(a, b), the expansion of the ratio a/b.
CFExpansion anth_expand(const QuadSurd& a, const QuadSurd& b, std::size_t cap = kDefaultCap);

struct ConvergentRow {
  std::size_t n;
  Integer p;  // side number (denominator)
  Integer q;  // diameter number (numerator)
};
using ConvergentTable = std::vector<ConvergentRow>;

/// Rows 1..n of p_n = k_{n-1} p_{n-1} + p_{n-2}, q_n = k_{n-1} q_{n-1} + q_{n-2},
/// seeded with p_0 = 0, q_0 = 1 (so p_1 = 1, q_1 = k_0). A finite expansion
/// stops at its last quotient.
ConvergentTable convergents(const CFExpansion& cf, std::size_t n);

/// e_n = (-1)^n (q_n b - p_n a), the n-th remainder of Anth(a, b), a > b > 0.
QuadSurd remainder_formula(const QuadSurd& a, const QuadSurd& b, std::size_t n);

/// The n-th remainder by iterating anth_step (e_0 = b).
QuadSurd iterated_remainder(const QuadSurd& a, const QuadSurd& b, std::size_t n);

/// A a^2 = B ab + C b^2.
struct QuadraticRelation {
  Integer A;
  Integer B;
  Integer C;
  /// Positive root t of A t^2 = B t + C.
  QuadSurd positive_root() const;
  /// True when a, b satisfy the relation exactly.
  bool holds(const QuadSurd& a, const QuadSurd& b) const;
};

/// Relation satisfied by any ratio whose expansion is [period(k0, ..., kn)]:
/// (A, B, C) = (p_{n+1}, q_{n+1} - p_n, q_n).
QuadraticRelation purely_periodic_to_quadratic(const std::vector<Integer>& period);

/// Remainder indices m < n of the first coincidence e_m/e_{m+1} = e_n/e_{n+1}.
/// Remainders are numbered e_{-1} = a, e_0 = b, e_1 = a - k_0 b, ..., so the
/// expansion has a pre-period of m + 1 quotients and a period of n - m.
/// A purely periodic ratio yields m = -1.
struct LogosPair {
  long m;
  long n;
  std::size_t preperiod_length() const { return static_cast<std::size_t>(m + 1); }
  std::size_t period_length() const { return static_cast<std::size_t>(n - m); }
};

/// Throws std::domain_error for a rational ratio.
LogosPair logos_pair(const QuadSurd& a, const QuadSurd& b, std::size_t cap = kDefaultCap);

}  // namespace anth

#endif  // ANTH_ANTHYPHAIRESIS_HPP
