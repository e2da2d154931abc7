#include "anth/quad_surd.hpp"

#include <ostream>
#include <sstream>

#include "anth/surd_sum.hpp"

namespace anth {

namespace {

void check_same_field(const QuadSurd& a, const QuadSurd& b) {
  if (!a.same_field(b)) {
    throw MixedFieldError("operands lie in Q(sqrt(" + to_string(a.radicand()) +
                          ")) and Q(sqrt(" + to_string(b.radicand()) + "))");
  }
}

}  // namespace

QuadSurd::QuadSurd(Rational u, Rational v, Integer m)
    : u_(std::move(u)), v_(std::move(v)), m_(std::move(m)) {
  u_.canonicalize();
  v_.canonicalize();
  if (!is_square_free(m_)) {
    throw std::invalid_argument("radicand " + to_string(m_) + " is not square-free");
  }
  if (m_ == 1) {
    u_ += v_;
    v_ = 0;
  } else if (v_ == 0) {
    m_ = 1;
  }
}

QuadSurd QuadSurd::sqrt(const Rational& k) { return surd_normalize(0, 1, k); }

int QuadSurd::sign() const {
  const int su = anth::sign(u_);
  const int sv = anth::sign(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: the larger of u^2 and m*v^2 wins. Equality would make
  // sqrt(m) rational.
  return u_ * u_ > Rational(m_) * v_ * v_ ? su : sv;
}

QuadSurd QuadSurd::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const Rational n = norm();
  return {u_ / n, -v_ / n, m_};
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& rhs) {
  check_same_field(*this, rhs);
  const Integer m = is_rational() ? rhs.m_ : m_;
  *this = QuadSurd(u_ + rhs.u_, v_ + rhs.v_, m);
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& rhs) { return *this += -rhs; }

QuadSurd& QuadSurd::operator*=(const QuadSurd& rhs) {
  check_same_field(*this, rhs);
  const Integer m = is_rational() ? rhs.m_ : m_;
  const Rational u = u_ * rhs.u_ + Rational(m) * v_ * rhs.v_;
  const Rational v = u_ * rhs.v_ + v_ * rhs.u_;
  *this = QuadSurd(u, v, m);
  return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& rhs) {
  check_same_field(*this, rhs);
  return *this *= rhs.reciprocal();
}

std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b) {
  int s = 0;
  if (a.same_field(b)) {
    s = (a - b).sign();
  } else {
    s = (SurdSum(a) - SurdSum(b)).sign();
  }
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadSurd::str() const { return SurdSum(*this).str(); }

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << x.str(); }

bool CanonicalLess::operator()(const QuadSurd& a, const QuadSurd& b) const {
  if (int c = cmp(a.radicand(), b.radicand()); c != 0) return c < 0;
  if (int c = cmp(a.rational_part(), b.rational_part()); c != 0) return c < 0;
  return cmp(a.surd_coefficient(), b.surd_coefficient()) < 0;
}

QuadSurd surd_normalize(const Rational& u, const Rational& v, const Rational& k) {
  Rational kc = k;
  kc.canonicalize();
  if (kc <= 0) throw std::domain_error("radicand must be positive, got " + to_string(kc));
  // sqrt(a/b) = sqrt(a*b)/b, then pull square factors out of a*b.
  const Integer ab = kc.get_num() * kc.get_den();
  const SquareFreeSplit split = square_free_split(ab);
  Rational coeff = v * Rational(split.outside, kc.get_den());
  coeff.canonicalize();
  return {u, coeff, split.square_free};
}

QuadSurd surd_arith(const QuadSurd& a, const QuadSurd& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

int surd_sign(const QuadSurd& a) { return a.sign(); }

Integer floor_of(const QuadSurd& x) {
  if (x.is_rational()) return floor_of(x.rational_part());
  // Write x = (a + b*sqrt(m))/c with integers, c > 0, then use isqrt(b^2 m).
  const Rational& u = x.rational_part();
  const Rational& v = x.surd_coefficient();
  Integer c;
  mpz_lcm(c.get_mpz_t(), u.get_den_mpz_t(), v.get_den_mpz_t());
  const Integer a = u.get_num() * (c / u.get_den());
  const Integer b = v.get_num() * (c / v.get_den());
  const Integer root = isqrt(b * b * x.radicand());
  Integer numer = b > 0 ? Integer(a + root) : Integer(a - root - 1);
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), numer.get_mpz_t(), c.get_mpz_t());
  return k;
}

}  // namespace anth
