#ifndef ANTH_PROPORTION_HPP
#define ANTH_PROPORTION_HPP

#include <string>
#include <vector>

#include "anth/anthyphairesis.hpp"
#include "anth/quad_surd.hpp"

namespace anth {

/// Ratio a : b of positive magnitudes from one quadratic field. Its expansion
/// is finite or eventually periodic by construction.
class TheaeteteanRatio {
 public:
  TheaeteteanRatio(QuadSurd a, QuadSurd b);

  const QuadSurd& antecedent() const { return a_; }
  const QuadSurd& consequent() const { return b_; }
  CFExpansion expansion() const { return anth_expand(a_, b_); }

 private:
  QuadSurd a_;
  QuadSurd b_;
};

/// Proportion as equality of expansions. When the four terms share a field the
/// cross products are compared too, and a disagreement throws std::logic_error.
bool ratio_equal(const TheaeteteanRatio& r1, const TheaeteteanRatio& r2);

struct LawResult {
  std::string name;
  bool applicable = true;  // false when the law's side condition does not hold
  bool passed = false;
};

struct LawReport {
  std::vector<LawResult> laws;
  bool all_passed() const;
};

/// Checks alternando, ex aequali, perturbed proportion, componendo (a+c : b+d
/// and a+b : b), separando and their differences for a : b = c : d. Throws
/// std::invalid_argument unless the proportion holds with all four terms
/// positive and in one field.
LawReport proportion_laws(const QuadSurd& a, const QuadSurd& b, const QuadSurd& c, const QuadSurd& d);

/// ac : bc has the same expansion as a : b.
bool scale_invariance(const QuadSurd& a, const QuadSurd& b, const QuadSurd& c);

/// Given A a^2 = B ab + C b^2 and a line c, returns the d with
/// A c^2 = B cd + C d^2. Verifies ad = bc, that rational perturbations of d
/// break the relation, and that ad = bc alone transports the relation.
QuadSurd gnomon_preservation(const QuadraticRelation& rel, const QuadSurd& a, const QuadSurd& b,
                             const QuadSurd& c);

}  // namespace anth

#endif  // ANTH_PROPORTION_HPP
