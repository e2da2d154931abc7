// Independent reference algorithms used only by the tests. Nothing here calls
// into the library; everything is plain integer arithmetic.
#ifndef ANTH_TESTS_ORACLES_HPP
#define ANTH_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

struct SqrtCF {
  mpz_class a0;
  std::vector<mpz_class> period;
};

inline mpz_class root_floor(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const mpz_class& n) {
  if (n < 0) return false;
  const mpz_class r = root_floor(n);
  return r * r == n;
}

/// Textbook (m, d, a) recurrence for sqrt(N), N non-square.
inline SqrtCF sqrt_cf(const mpz_class& N) {
  SqrtCF out;
  out.a0 = root_floor(N);
  mpz_class m = 0, d = 1, a = out.a0;
  do {
    m = d * a - m;
    d = (N - m * m) / d;
    a = (out.a0 + m) / d;
    out.period.push_back(a);
  } while (a != 2 * out.a0);
  return out;
}

/// Smallest x >= 1 with N x^2 + 1 a square. Only practical for small N.
inline std::pair<mpz_class, mpz_class> pell_brute(long N) {
  for (mpz_class x = 1;; ++x) {
    const mpz_class y2 = N * x * x + 1;
    if (is_square(y2)) return {x, root_floor(y2)};
  }
}

/// Scan convergents h/k of sqrt(N) built from sqrt_cf until h^2 - N k^2 = 1.
inline std::pair<mpz_class, mpz_class> pell_by_convergents(const mpz_class& N) {
  const SqrtCF cf = sqrt_cf(N);
  mpz_class h_prev = 1, h = cf.a0, k_prev = 0, k = 1;
  for (std::size_t i = 0;; ++i) {
    if (h * h - N * k * k == 1) return {k, h};
    const mpz_class& a = cf.period[i % cf.period.size()];
    const mpz_class h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

inline mpz_class euclid_gcd(mpz_class a, mpz_class b) {
  while (b != 0) {
    mpz_class r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Continued fraction of (P + sqrt(D)) / Q by brute-force search for a
/// repeated (P, Q) state. D must be a non-square positive integer, Q != 0.
struct GeneralCF {
  std::vector<mpz_class> head;
  std::vector<mpz_class> period;
};

inline GeneralCF general_cf(mpz_class P, mpz_class D, mpz_class Q) {
  // Make Q divide D - P^2.
  const mpz_class aq = abs(Q);
  P *= aq;
  D *= aq * aq;
  Q *= aq;
  const mpz_class s = root_floor(D);
  std::vector<std::pair<mpz_class, mpz_class>> states;
  std::vector<mpz_class> quotients;
  for (;;) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].first == P && states[i].second == Q) {
        GeneralCF out;
        out.head.assign(quotients.begin(), quotients.begin() + static_cast<long>(i));
        out.period.assign(quotients.begin() + static_cast<long>(i), quotients.end());
        return out;
      }
    }
    states.emplace_back(P, Q);
    mpz_class a;
    const mpz_class num = Q > 0 ? mpz_class(P + s) : mpz_class(P + s + 1);
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

/// Finite continued fraction of num/den, den > 0.
inline std::vector<mpz_class> rational_cf(mpz_class num, mpz_class den) {
  std::vector<mpz_class> out;
  while (den != 0) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(q);
    mpz_class r = num - q * den;
    num = den;
    den = r;
  }
  return out;
}

}  // namespace oracle

#endif  // ANTH_TESTS_ORACLES_HPP
