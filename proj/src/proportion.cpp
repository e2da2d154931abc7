#include "anth/proportion.hpp"

#include <algorithm>
#include <stdexcept>

namespace anth {

namespace {

bool same_field(const std::vector<const QuadSurd*>& xs) {
  Integer m = 1;
  for (const QuadSurd* x : xs) {
    if (x->is_rational()) continue;
    if (m != 1 && x->radicand() != m) return false;
    m = x->radicand();
  }
  return true;
}

bool equal_ratios(const QuadSurd& a, const QuadSurd& b, const QuadSurd& c, const QuadSurd& d) {
  return ratio_equal(TheaeteteanRatio(a, b), TheaeteteanRatio(c, d));
}

}  // namespace

TheaeteteanRatio::TheaeteteanRatio(QuadSurd a, QuadSurd b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() <= 0 || b_.sign() <= 0) throw std::domain_error("ratio terms must be positive");
  if (!a_.same_field(b_)) throw MixedFieldError("ratio terms must lie in one field");
}

bool ratio_equal(const TheaeteteanRatio& r1, const TheaeteteanRatio& r2) {
  const bool by_expansion = r1.expansion() == r2.expansion();
  const QuadSurd& a = r1.antecedent();
  const QuadSurd& b = r1.consequent();
  const QuadSurd& c = r2.antecedent();
  const QuadSurd& d = r2.consequent();
  if (same_field({&a, &b, &c, &d})) {
    const bool by_cross_product = a * d == b * c;
    if (by_cross_product != by_expansion) {
      throw std::logic_error("expansion equality and cross-product equality disagree for " + a.str() +
                             " : " + b.str() + " and " + c.str() + " : " + d.str());
    }
  }
  return by_expansion;
}

bool LawReport::all_passed() const {
  for (const auto& law : laws) {
    if (law.applicable && !law.passed) return false;
  }
  return true;
}

LawReport proportion_laws(const QuadSurd& a, const QuadSurd& b, const QuadSurd& c, const QuadSurd& d) {
  if (!same_field({&a, &b, &c, &d})) {
    throw MixedFieldError("proportion_laws needs all four terms in one field");
  }
  if (!equal_ratios(a, b, c, d)) {
    throw std::invalid_argument("precondition violated: " + a.str() + " : " + b.str() + " != " + c.str() +
                                " : " + d.str());
  }
  LawReport report;
  auto add = [&report](std::string name, bool applicable, auto check) {
    report.laws.push_back({std::move(name), applicable, applicable && check()});
  };

  add("transitivity", true, [&] {
    const QuadSurd two(2);
    return equal_ratios(c, d, two * a, two * b) && equal_ratios(a, b, two * a, two * b);
  });
  add("alternando", true, [&] { return equal_ratios(a, c, b, d); });

  // Third terms chosen from the same field so that every ratio stays valid.
  const QuadSurd x = a + b;
  add("ex_aequali", true, [&] {
    const QuadSurd y = d * x / b;  // b : x = d : y
    return equal_ratios(b, x, d, y) && equal_ratios(a, x, c, y);
  });
  add("perturbed", true, [&] {
    // Lines a, b, x and y, c, d with a : b = c : d and b : x = y : c.
    const QuadSurd y = b * c / x;
    return equal_ratios(b, x, y, c) && equal_ratios(a, x, y, d);
  });
  add("sum_of_antecedents", true, [&] { return equal_ratios(a + c, b + d, a, b); });
  add("difference_of_antecedents", a > c && b > d, [&] { return equal_ratios(a - c, b - d, a, b); });
  add("componendo", true, [&] { return equal_ratios(a + b, b, c + d, d); });
  add("separando", a - b > b && c - d > d, [&] { return equal_ratios(a - b, b, c - d, d); });
  add("first_quotient_shift", true, [&] {
    // Anth(a + b, b) is Anth(a, b) with k0 raised by one. Minimal head/period
    // presentations can differ (a purely periodic ratio gains a head), so the
    // unrolled quotient sequences are compared.
    const CFExpansion base = anth_expand(a, b);
    const CFExpansion shifted = anth_expand(a + b, b);
    if (base.finite() != shifted.finite()) return false;
    const std::size_t window = base.finite() ? base.length()
                                             : std::max(base.head.size(), shifted.head.size()) +
                                                   2 * base.period.size() + 1;
    if (base.finite() && shifted.length() != window) return false;
    if (shifted.quotient(0) != base.quotient(0) + 1) return false;
    for (std::size_t i = 1; i < window; ++i) {
      if (shifted.quotient(i) != base.quotient(i)) return false;
    }
    return true;
  });
  add("scale_invariance", true, [&] { return scale_invariance(a, b, c + d); });
  return report;
}

bool scale_invariance(const QuadSurd& a, const QuadSurd& b, const QuadSurd& c) {
  if (c.sign() <= 0) throw std::domain_error("scale must be positive");
  return anth_expand(a * c, b * c) == anth_expand(a, b);
}

QuadSurd gnomon_preservation(const QuadraticRelation& rel, const QuadSurd& a, const QuadSurd& b,
                             const QuadSurd& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) throw std::domain_error("lines must be positive");
  if (!rel.holds(a, b)) throw std::invalid_argument("a, b do not satisfy the given relation");
  const QuadSurd d = b * c / a;
  if (!rel.holds(c, d)) throw std::logic_error("gnomon not preserved for d = " + d.str());
  if (a * d != b * c) throw std::logic_error("cross products differ");
  for (const Rational& eps : {Rational(1, 7), Rational(-1, 11), Rational(1, 1000)}) {
    const QuadSurd perturbed = d + QuadSurd(eps);
    if (perturbed.sign() > 0 && rel.holds(c, perturbed)) {
      throw std::logic_error("relation admits a second breadth " + perturbed.str());
    }
  }
  return d;
}

}  // namespace anth
