#include "anth/periodicity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "anth/commensurability.hpp"

namespace anth {

CFExpansion theorem1_check(const Integer& M, const Integer& N, std::size_t cap) {
  if (M < 1 || N < 1) throw std::domain_error("M and N must be at least 1");
  if (is_perfect_square(M * N)) {
    throw std::domain_error("M*N = " + to_string(Integer(M * N)) + " is a perfect square: the ratio is rational");
  }
  const QuadSurd ratio = QuadSurd::sqrt(Rational(N, M));
  if (ratio.is_rational()) throw std::logic_error("sqrt(N/M) came out rational");
  CFExpansion cf = anth_expand(ratio, cap);
  if (cf.finite()) throw std::logic_error("irrational ratio produced a finite expansion");
  return cf;
}

PalindromeResult palindrome_check(const Integer& N) {
  if (N < 2 || is_perfect_square(N)) {
    throw std::domain_error("palindrome_check needs a non-square N >= 2, got " + to_string(N));
  }
  PalindromeResult out{anth_expand(QuadSurd::sqrt(Rational(N))), false};
  const auto& head = out.cf.head;
  const auto& period = out.cf.period;
  if (head.size() != 1 || period.empty()) return out;
  if (period.back() != 2 * head.front()) return out;
  out.ok = std::equal(period.begin(), period.end() - 1, period.rbegin() + 1);
  return out;
}

std::string palindrome_row(const Integer& N, const PalindromeResult& result) {
  std::ostringstream os;
  os << N.get_str() << ' ';
  auto join = [&os](const std::vector<Integer>& ks) {
    if (ks.empty()) os << '-';
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i].get_str();
  };
  join(result.cf.head);
  os << ' ';
  join(result.cf.period);
  os << ' ' << (result.ok ? "true" : "false");
  return os.str();
}

DefectSolution defect_solve(const RootRational& zeta, const RootRational& eta) {
  if (!(zeta > eta)) {
    throw std::domain_error("application in defect needs zeta > eta, got " + zeta.str() + " and " + eta.str());
  }
  const Rational theta_sq = zeta.square() - eta.square();
  const RootRational theta = RootRational::sqrt_of(theta_sq);
  const SurdSum z(zeta);
  SurdSum x = (z - SurdSum(theta)) * SurdSum(Rational(1, 2));
  if (x * (z - x) != SurdSum(eta.square() / 4)) throw std::logic_error("x(zeta - x) != eta^2/4");
  return {zeta, eta, std::move(x), theta_sq};
}

QuadSurd defect_ratio(const DefectSolution& sol) {
  // zeta / x = 2 zeta (zeta + theta) / eta^2: zeta*theta is a single radical.
  const SurdSum z(sol.zeta);
  const SurdSum ratio = z / sol.x;
  auto quad = ratio.to_quad();
  if (!quad) throw std::logic_error("zeta/x left a single quadratic field: " + ratio.str());
  return *quad;
}

CFExpansion defect_periodicity(const RootRational& zeta, const RootRational& eta, std::size_t cap) {
  if (zeta.commensurable_with(eta)) {
    throw std::domain_error("zeta and eta are commensurable in length; the theorem needs 'in square only'");
  }
  const DefectSolution sol = defect_solve(zeta, eta);
  if (sol.theta().commensurable_with(zeta)) {
    throw std::domain_error("theta is commensurable with zeta, so zeta : x is rational (finite expansion)");
  }
  CFExpansion cf = anth_expand(defect_ratio(sol), cap);
  if (cf.finite()) throw std::logic_error("defect ratio produced a finite expansion");
  return cf;
}

PartsCommensurability x17_x18_check(const RootRational& zeta, const RootRational& eta) {
  const DefectSolution sol = defect_solve(zeta, eta);
  const SurdSum other = SurdSum(zeta) - sol.x;
  PartsCommensurability out{commensurable(sol.x, other), sol.theta().commensurable_with(zeta)};
  if (out.parts_commensurable != out.theta_zeta_commensurable) {
    throw std::logic_error("parts/theta commensurability biconditional fails for zeta = " + zeta.str() +
                           ", eta = " + eta.str());
  }
  return out;
}

RightTriangleSquares right_triangle_lemma(const QuadSurd& f, const QuadSurd& g) {
  if (f.sign() <= 0 || g.sign() <= 0) throw std::domain_error("hypotenuse segments must be positive");
  const QuadSurd whole = f + g;
  RightTriangleSquares out{f * g, whole * f, whole * g, whole * whole * f * g};
  if (out.phi_sq + out.psi_sq != whole * whole) throw std::logic_error("Pythagorean identity fails");
  if (out.phi_psi_sq != out.phi_sq * out.psi_sq) throw std::logic_error("(Phi Psi)^2 != Phi^2 Psi^2");
  if (out.phi_psi_sq != whole * whole * out.h_sq) throw std::logic_error("Phi Psi != (f + g) h");
  return out;
}

}  // namespace anth
