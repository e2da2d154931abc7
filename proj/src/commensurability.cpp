#include "anth/commensurability.hpp"

#include <stdexcept>

namespace anth {

namespace {

void require_nonzero(const SurdSum& a, const SurdSum& b) {
  if (a.is_zero() || b.is_zero()) {
    throw std::domain_error("commensurability is undefined for a zero magnitude");
  }
}

}  // namespace

bool commensurable(const SurdSum& a, const SurdSum& b) {
  require_nonzero(a, b);
  return rational_ratio(a, b).has_value();
}

bool commensurable_in_square(const SurdSum& a, const SurdSum& b) {
  require_nonzero(a, b);
  return rational_ratio(a * a, b * b).has_value();
}

bool commensurable_in_square_only(const SurdSum& a, const SurdSum& b) {
  return commensurable_in_square(a, b) && !commensurable(a, b);
}

}  // namespace anth
