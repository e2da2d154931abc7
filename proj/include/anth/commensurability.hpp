#ifndef ANTH_COMMENSURABILITY_HPP
#define ANTH_COMMENSURABILITY_HPP

#include "anth/quad_surd.hpp"
#include "anth/surd_sum.hpp"

namespace anth {

// Commensurability of nonzero magnitudes. Arguments may come from different
// quadratic fields; zero arguments throw std::domain_error.

/// a/b is rational.
bool commensurable(const SurdSum& a, const SurdSum& b);
/// (a/b)^2 is rational.
bool commensurable_in_square(const SurdSum& a, const SurdSum& b);
/// Commensurable in square but not in length.
bool commensurable_in_square_only(const SurdSum& a, const SurdSum& b);

inline bool commensurable(const QuadSurd& a, const QuadSurd& b) {
  return commensurable(SurdSum(a), SurdSum(b));
}
inline bool commensurable_in_square(const QuadSurd& a, const QuadSurd& b) {
  return commensurable_in_square(SurdSum(a), SurdSum(b));
}
inline bool commensurable_in_square_only(const QuadSurd& a, const QuadSurd& b) {
  return commensurable_in_square_only(SurdSum(a), SurdSum(b));
}

}  // namespace anth

#endif  // ANTH_COMMENSURABILITY_HPP
