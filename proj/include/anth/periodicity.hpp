#ifndef ANTH_PERIODICITY_HPP
#define ANTH_PERIODICITY_HPP

#include <string>

#include "anth/anthyphairesis.hpp"
#include "anth/root_rational.hpp"
#include "anth/surd_sum.hpp"

namespace anth {

/// Expansion of sqrt(N/M), the ratio a : b with M a^2 = N b^2. Throws
/// std::domain_error when M*N is a perfect square, std::logic_error if the
/// expansion is not periodic.
CFExpansion theorem1_check(const Integer& M, const Integer& N, std::size_t cap = kDefaultCap);

struct PalindromeResult {
  CFExpansion cf;
  bool ok = false;
};

/// Expands sqrt(N) and checks the form [k0; (k1, ..., k_{p-1}, 2 k0)] with the
/// inner block a palindrome. The period is cut right after k0.
PalindromeResult palindrome_check(const Integer& N);

/// One line of the batch report: "N head period ok", e.g. "7 2 1,1,1,4 true".
std::string palindrome_row(const Integer& N, const PalindromeResult& result);

/// Application of areas in defect: x (zeta - x) = eta^2 / 4.
struct DefectSolution {
  RootRational zeta;
  RootRational eta;
  SurdSum x;        // smaller root (zeta - theta)/2
  Rational theta_sq;  // zeta^2 - eta^2
  RootRational theta() const { return RootRational::sqrt_of(theta_sq); }
};

/// Throws std::domain_error unless zeta > eta > 0. The identities
/// x (zeta - x) = eta^2/4 and theta^2 = zeta^2 - eta^2 are verified exactly.
DefectSolution defect_solve(const RootRational& zeta, const RootRational& eta);

/// zeta / x as an element of one quadratic field.
QuadSurd defect_ratio(const DefectSolution& sol);

/// Anth(zeta, x). Requires zeta, eta commensurable in square only and theta
/// incommensurable with zeta; when theta ~ zeta the ratio zeta : x is rational
/// and the expansion is finite, so that case is rejected.
CFExpansion defect_periodicity(const RootRational& zeta, const RootRational& eta,
                               std::size_t cap = kDefaultCap);

struct PartsCommensurability {
  bool parts_commensurable;       // x ~ zeta - x
  bool theta_zeta_commensurable;  // theta ~ zeta
};

/// Computes both flags and throws std::logic_error if they differ.
PartsCommensurability x17_x18_check(const RootRational& zeta, const RootRational& eta);

/// Squares in a right triangle whose altitude cuts the hypotenuse into f, g.
struct RightTriangleSquares {
  QuadSurd h_sq;        // altitude^2 = f g
  QuadSurd phi_sq;      // (f + g) f
  QuadSurd psi_sq;      // (f + g) g
  QuadSurd phi_psi_sq;  // (f + g)^2 f g
};

RightTriangleSquares right_triangle_lemma(const QuadSurd& f, const QuadSurd& g);

}  // namespace anth

#endif  // ANTH_PERIODICITY_HPP
