#ifndef ANTH_TAXONOMY_HPP
#define ANTH_TAXONOMY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "anth/root_rational.hpp"
#include "anth/surd_sum.hpp"

namespace anth {

// All classification is relative to the unit line r = 1 unless a reference
// line is passed explicitly.

enum class Sign { plus, minus };

/// zeta + eta (binomial) or zeta - eta (apotome).
struct TwoTermLine {
  RootRational zeta;
  RootRational eta;
  Sign sign = Sign::minus;

  bool is_apotome() const { return sign == Sign::minus; }
  SurdSum value() const;
  std::string str() const { return value().str(); }
  friend bool operator==(const TwoTermLine&, const TwoTermLine&) = default;
};

class InvalidLine : public std::invalid_argument {
 public:
  enum class Reason { not_ordered, commensurable_terms, not_two_terms };
  InvalidLine(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Validates zeta > eta with the terms commensurable in square only.
TwoTermLine make_two_term(const RootRational& zeta, const RootRational& eta, Sign sign);

/// Reads a two-term value such as 3 - sqrt(5) or (sqrt(15) - sqrt(3))/3.
TwoTermLine two_term_from_value(const SurdSum& value);

enum class TermReference { zeta, eta, neither };

struct OrderCriteria {
  int order = 0;
  TermReference commensurable_term = TermReference::neither;  // criterion (i)
  bool theta_commensurable_with_zeta = false;                  // criterion (ii)
  Rational theta_sq;
};

/// order = (theta ~ zeta ? 0 : 3) + (zeta ~ r ? 1 : eta ~ r ? 2 : 3).
OrderCriteria order_criteria(const TwoTermLine& line, const RootRational& reference = RootRational(1));
int classify_order(const TwoTermLine& line, const RootRational& reference = RootRational(1));

enum class SimpleFlavor { deficit, excess };

/// Integral simple apotome with a = sqrt(N), b = 1: q - sqrt(N) when
/// N = q^2 - p^2 (deficit), sqrt(N) - q when N = q^2 + p^2 (excess).
TwoTermLine construct_simple_apotome(const Integer& N, const Integer& p, const Integer& q, SimpleFlavor flavor);

/// The breadth delta with line * delta = 1: the opposite-sign line with terms
/// zeta/(zeta^2 - eta^2) and eta/(zeta^2 - eta^2). Verifies the product and
/// that the order is unchanged.
TwoTermLine conjugate(const TwoTermLine& line);

/// An area v*sqrt(k) with k > 1, v != 0.
bool is_medial_area(const SurdSum& area);
/// A line is medial when its square is a medial area.
bool is_medial_line(const SurdSum& square);

enum class KindTag {
  rational,
  medial,
  binomial,
  first_bimedial,
  second_bimedial,
  major,
  side_of_rational_plus_medial,
  side_of_two_medials,
  apotome,
  first_apotome_of_medial,
  second_apotome_of_medial,
  minor,
  producing_rational_and_medial_whole,
  producing_medial_and_medial_whole,
};

struct LineKind {
  KindTag tag = KindTag::rational;
  int order = 0;  // 1..6 for binomial and apotome, else 0
  std::string name() const;
  friend bool operator==(const LineKind&, const LineKind&) = default;
};

std::string kind_name(KindTag tag);

/// The kind produced from an apotome (minus) or binomial (plus) of this order.
KindTag kind_for_order(int order, Sign sign);
/// Inverse of kind_for_order for the twelve two-term kinds.
int order_for_kind(KindTag tag);

/// sqrt(A) + sqrt(B) or sqrt(A) - sqrt(B), stored by the term squares.
struct AlogosLine {
  SurdSum A;
  SurdSum B;
  Sign sign = Sign::minus;

  /// (sqrt(A) -/+ sqrt(B))^2 when AB is rational; throws otherwise.
  SurdSum square() const;
  AlogosLine scaled(const Rational& s) const { return {A * SurdSum(s * s), B * SurdSum(s * s), sign}; }
  friend bool operator==(const AlogosLine&, const AlogosLine&) = default;
};

/// Thrown when a line is outside the thirteen-kind family.
class UnclassifiableLine : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

LineKind classify_alogos(const AlogosLine& line);

/// Side of the area line * r: applies the area in defect to get x, forms
/// Phi^2 = zeta (zeta - x), Psi^2 = zeta x and rescales by r/zeta. Checks the
/// resulting kind against the order table.
AlogosLine alogos_from_apotome(const TwoTermLine& line);

/// gamma with Omega^2 = gamma r: zeta = A + B, eta = 2 sqrt(AB). Checks the
/// order of gamma against the kind of Omega.
TwoTermLine apotome_from_alogos(const AlogosLine& omega);

/// Sampled refutation of a second annex: for candidate sums S' of the kind's
/// type, the implied rectangle S' -/+ Omega^2 never satisfies the kind's
/// defining conditions. Throws UnclassifiableLine for the rational/medial tags.
bool uniqueness_check(const AlogosLine& omega, std::size_t samples = 100, std::uint64_t seed = 1);

/// Kind (and recovered order) unchanged under a positive rational scale.
bool invariance_check(const AlogosLine& omega, const Rational& scale);

}  // namespace anth

#endif  // ANTH_TAXONOMY_HPP
