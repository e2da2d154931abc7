#include "anth/surd_sum.hpp"

#include <ostream>
#include <sstream>

#include "anth/root_rational.hpp"

namespace anth {

namespace {

/// A prime dividing at least one irrational radicand.
Integer pivot_prime(const SurdSum::Terms& terms) {
  for (const auto& [k, c] : terms) {
    if (k != 1) return smallest_prime_factor(k);
  }
  return 1;
}

/// S = P + Q*sqrt(p): P collects radicands coprime to p.
std::pair<SurdSum, SurdSum> split_on(const SurdSum& s, const Integer& p) {
  SurdSum without;
  SurdSum with;
  for (const auto& [k, c] : s.terms()) {
    if (k % p == 0) {
      with += SurdSum::term(c, Rational(Integer(k / p)));
    } else {
      without += SurdSum::term(c, Rational(k));
    }
  }
  return {without, with};
}

}  // namespace

SurdSum::SurdSum(long value) : SurdSum(Rational(value)) {}

SurdSum::SurdSum(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v != 0) terms_.emplace(1, v);
}

SurdSum::SurdSum(const QuadSurd& value) {
  add_term(1, value.rational_part());
  if (!value.is_rational()) add_term(value.radicand(), value.surd_coefficient());
}

SurdSum::SurdSum(const RootRational& value) { add_term(value.radicand(), value.coefficient()); }

SurdSum SurdSum::term(const Rational& coeff, const Rational& k) {
  return SurdSum(surd_normalize(0, coeff, k));
}

void SurdSum::add_term(const Integer& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SurdSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_value() const {
  if (!is_rational()) throw std::domain_error(str() + " is irrational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational SurdSum::coefficient(const Integer& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<QuadSurd> SurdSum::to_quad() const {
  Rational u = coefficient(1);
  Rational v = 0;
  Integer m = 1;
  for (const auto& [k, c] : terms_) {
    if (k == 1) continue;
    if (m != 1) return std::nullopt;
    m = k;
    v = c;
  }
  return QuadSurd(u, v, m);
}

int SurdSum::sign() const {
  if (is_rational()) return anth::sign(rational_value());
  // Peel off one prime at a time: sign(P + Q*sqrt(p)) follows from the signs
  // of P and Q and, when they disagree, from the sign of P^2 - p*Q^2, which
  // no longer involves sqrt(p).
  const Integer p = pivot_prime(terms_);
  const auto [rest, with] = split_on(*this, p);
  const int sp = rest.sign();
  const int sq = with.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const int d = (rest * rest - SurdSum(Rational(p)) * with * with).sign();
  return d > 0 ? sp : sq;
}

SurdSum SurdSum::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // Multiply by conjugates prime by prime until the denominator is rational.
  SurdSum numer(1);
  SurdSum denom = *this;
  while (!denom.is_rational()) {
    const Integer p = pivot_prime(denom.terms_);
    const auto [rest, with] = split_on(denom, p);
    const SurdSum conj = rest - with * SurdSum::term(1, Rational(p));
    numer *= conj;
    denom *= conj;
  }
  const Rational d = denom.rational_value();
  SurdSum out;
  for (const auto& [k, c] : numer.terms_) out.add_term(k, c / d);
  return out;
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& rhs) { return *this += -rhs; }

SurdSum& SurdSum::operator*=(const SurdSum& rhs) {
  SurdSum out;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : rhs.terms_) {
      // sqrt(k1)*sqrt(k2) = g*sqrt((k1/g)*(k2/g)) with g = gcd(k1, k2).
      Integer g;
      mpz_gcd(g.get_mpz_t(), k1.get_mpz_t(), k2.get_mpz_t());
      const Integer k = (k1 / g) * (k2 / g);
      out.add_term(k, c1 * c2 * Rational(g));
    }
  }
  *this = std::move(out);
  return *this;
}

SurdSum& SurdSum::operator/=(const SurdSum& rhs) { return *this *= rhs.reciprocal(); }

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 1) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "sqrt(" << k.get_str() << ")";
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SurdSum& x) { return os << x.str(); }

std::optional<Rational> rational_ratio(const SurdSum& a, const SurdSum& b) {
  if (b.is_zero()) throw std::domain_error("ratio with zero denominator");
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  std::optional<Rational> ratio;
  auto ia = a.terms().begin();
  for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    Rational r = ia->second / ib->second;
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

}  // namespace anth
