#include "anth/anthyphairesis.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace anth {

namespace {

void require_positive(const QuadSurd& x, const char* what) {
  if (x.sign() <= 0) throw std::domain_error(std::string(what) + " must be positive, got " + x.str());
}

void append_joined(std::ostringstream& os, const std::vector<Integer>& ks, std::size_t from) {
  for (std::size_t i = from; i < ks.size(); ++i) {
    if (i > from) os << ", ";
    os << ks[i].get_str();
  }
}

std::vector<Integer> parse_list(const std::string& text) {
  std::vector<Integer> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty quotient in '" + text + "'");
    const std::string tok = item.substr(b, e - b + 1);
    Integer k;
    if (tok.find_first_not_of("0123456789") != std::string::npos || k.set_str(tok, 10) != 0) {
      throw std::invalid_argument("bad quotient '" + tok + "'");
    }
    out.push_back(k);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const Integer& CFExpansion::quotient(std::size_t i) const {
  if (i < head.size()) return head[i];
  if (period.empty()) throw std::out_of_range("quotient index past a finite expansion");
  return period[(i - head.size()) % period.size()];
}

std::string CFExpansion::str() const {
  std::ostringstream os;
  os << '[';
  if (head.empty()) {
    os << '(';
    append_joined(os, period, 0);
    os << ')';
  } else {
    os << head.front().get_str();
    if (head.size() > 1 || !period.empty()) {
      os << "; ";
      append_joined(os, head, 1);
      if (!period.empty()) {
        if (head.size() > 1) os << ", ";
        os << '(';
        append_joined(os, period, 0);
        os << ')';
      }
    }
  }
  os << ']';
  return os.str();
}

CFExpansion CFExpansion::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw std::invalid_argument("expansion must be bracketed: '" + text + "'");
  }
  std::string body = trim(t.substr(1, t.size() - 2));
  CFExpansion cf;
  const auto open = body.find('(');
  if (open != std::string::npos) {
    const auto close = body.find(')');
    if (close == std::string::npos || close < open || trim(body.substr(close + 1)) != "") {
      throw std::invalid_argument("period block must close the expansion: '" + text + "'");
    }
    cf.period = parse_list(body.substr(open + 1, close - open - 1));
    body = trim(body.substr(0, open));
    if (!body.empty()) {
      if (body.back() == ',' || body.back() == ';') {
        body.pop_back();
      } else {
        throw std::invalid_argument("missing separator before period: '" + text + "'");
      }
    }
  }
  if (!body.empty()) {
    const auto semi = body.find(';');
    cf.head = parse_list(body.substr(0, semi));
    if (cf.head.size() != 1) throw std::invalid_argument("k0 must be followed by ';': '" + text + "'");
    if (semi != std::string::npos) {
      const std::string rest = trim(body.substr(semi + 1));
      if (rest.empty()) {
        if (cf.period.empty()) throw std::invalid_argument("dangling ';' in '" + text + "'");
      } else {
        for (auto& k : parse_list(rest)) cf.head.push_back(std::move(k));
      }
    }
  }
  if (cf.head.empty() && cf.period.empty()) throw std::invalid_argument("empty expansion");
  return cf;
}

AnthStep anth_step(const QuadSurd& a, const QuadSurd& b) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (!a.same_field(b)) {
    throw MixedFieldError("anth_step operands " + a.str() + " and " + b.str() + " lie in different fields");
  }
  Integer k = floor_of(a / b);
  QuadSurd c = a - QuadSurd(Rational(k)) * b;
  return {std::move(k), std::move(c)};
}

namespace {

[[noreturn]] void cap_exhausted(const QuadSurd& x, std::size_t cap) {
  throw CapExhausted("expansion of " + x.str() + " did not close within " + std::to_string(cap) + " steps");
}

CFExpansion expand_rational(const QuadSurd& x, std::size_t cap) {
  Integer num = x.rational_part().get_num(), den = x.rational_part().get_den();
  std::vector<Integer> ks;
  while (den != 0) {
    if (ks.size() >= cap) cap_exhausted(x, cap);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer r = num - k * den;
    num = std::move(den);
    den = std::move(r);
    ks.push_back(std::move(k));
  }
  return CFExpansion{std::move(ks), {}};
}

}  // namespace

CFExpansion anth_expand(const QuadSurd& x, std::size_t cap) {
  require_positive(x, "x");
  if (x.is_rational()) return expand_rational(x, cap);

  // Write x = (P + sqrt(D)) / Q with Q | D - P^2. The pair (P, Q) then names
  // the complete quotient x_n = e_{n-1}/e_n exactly, and the first repeat
  // gives the minimal pre-period and period.
  const Rational& u = x.rational_part();
  const Rational& v = x.surd_coefficient();
  Integer c;
  mpz_lcm(c.get_mpz_t(), u.get_den_mpz_t(), v.get_den_mpz_t());
  Integer P = u.get_num() * (c / u.get_den());
  Integer b = v.get_num() * (c / v.get_den());
  Integer Q = c;
  if (b < 0) {
    P = -P;
    Q = -Q;
    b = -b;
  }
  Integer D = b * b * x.radicand();
  const Integer scale = abs(Q);
  P *= scale;
  Q *= scale;
  D *= scale * scale;
  const Integer root = isqrt(D);

  std::vector<Integer> ks;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  for (std::size_t i = 0;; ++i) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), i);
    if (!inserted) {
      CFExpansion cf;
      cf.head.assign(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(it->second));
      cf.period.assign(ks.begin() + static_cast<std::ptrdiff_t>(it->second), ks.end());
      return cf;
    }
    if (i >= cap) cap_exhausted(x, cap);
    // floor((P + sqrt(D)) / Q); sqrt(D) is irrational and lies in (root, root + 1).
    const Integer top = Q > 0 ? Integer(P + root) : Integer(P + root + 1);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), top.get_mpz_t(), Q.get_mpz_t());
    P = k * Q - P;
    Q = (D - P * P) / Q;
    ks.push_back(std::move(k));
  }
}

CFExpansion anth_expand(const QuadSurd& a, const QuadSurd& b, std::size_t cap) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (!a.same_field(b)) throw MixedFieldError("Anth(a, b) needs a and b in one field");
  return anth_expand(a / b, cap);
}

ConvergentTable convergents(const CFExpansion& cf, std::size_t n) {
  ConvergentTable rows;
  if (cf.finite()) n = std::min(n, cf.length());
  rows.reserve(n);
  Integer p_prev = 0, q_prev = 1;  // p_0, q_0
  Integer p = 1, q = cf.quotient(0);
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) {
      const Integer& k = cf.quotient(i - 1);
      Integer p_next = k * p + p_prev;
      Integer q_next = k * q + q_prev;
      p_prev = std::move(p);
      q_prev = std::move(q);
      p = std::move(p_next);
      q = std::move(q_next);
    }
    rows.push_back({i, p, q});
  }
  return rows;
}

QuadSurd remainder_formula(const QuadSurd& a, const QuadSurd& b, std::size_t n) {
  if (!(b.sign() > 0 && a > b)) throw std::domain_error("remainder_formula needs a > b > 0");
  if (n == 0) return b;
  const CFExpansion cf = anth_expand(a, b);
  if (cf.finite() && n > cf.length()) {
    throw std::out_of_range("remainder index " + std::to_string(n) + " exceeds the finite expansion " +
                            cf.str());
  }
  const ConvergentRow row = convergents(cf, n).back();
  QuadSurd e = QuadSurd(Rational(row.q)) * b - QuadSurd(Rational(row.p)) * a;
  return n % 2 == 0 ? e : -e;
}

QuadSurd iterated_remainder(const QuadSurd& a, const QuadSurd& b, std::size_t n) {
  QuadSurd prev = a;
  QuadSurd cur = b;
  for (std::size_t i = 1; i <= n; ++i) {
    if (cur.is_zero()) throw std::out_of_range("expansion ended before remainder " + std::to_string(n));
    AnthStep step = anth_step(prev, cur);
    prev = std::move(cur);
    cur = std::move(step.remainder);
  }
  return cur;
}

QuadSurd QuadraticRelation::positive_root() const {
  const Rational two_a = Rational(2 * A);
  return surd_normalize(Rational(B) / two_a, Rational(1) / two_a, Rational(B * B + 4 * A * C));
}

bool QuadraticRelation::holds(const QuadSurd& a, const QuadSurd& b) const {
  const QuadSurd qa(Rational{A}), qb(Rational{B}), qc(Rational{C});
  return qa * a * a == qb * a * b + qc * b * b;
}

QuadraticRelation purely_periodic_to_quadratic(const std::vector<Integer>& period) {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  for (const auto& k : period) {
    if (k < 1) throw std::invalid_argument("period quotients must be at least 1");
  }
  const ConvergentTable rows = convergents(CFExpansion{period, {}}, period.size());
  const ConvergentRow& last = rows.back();
  const Integer p_n = rows.size() > 1 ? rows[rows.size() - 2].p : Integer(0);
  const Integer q_n = rows.size() > 1 ? rows[rows.size() - 2].q : Integer(1);
  return {last.p, last.q - p_n, q_n};
}

LogosPair logos_pair(const QuadSurd& a, const QuadSurd& b, std::size_t cap) {
  require_positive(a, "a");
  require_positive(b, "b");
  if ((a / b).is_rational()) throw std::domain_error("rational ratio: no Logos pair exists");
  std::map<QuadSurd, long, CanonicalLess> seen;
  QuadSurd prev = a;
  QuadSurd cur = b;
  for (long i = -1;; ++i) {
    auto [it, inserted] = seen.emplace(prev / cur, i);
    if (!inserted) return {it->second, i};
    if (static_cast<std::size_t>(i + 1) >= cap) {
      throw CapExhausted("no Logos pair within " + std::to_string(cap) + " steps");
    }
    AnthStep step = anth_step(prev, cur);
    prev = std::move(cur);
    cur = std::move(step.remainder);
  }
}

}  // namespace anth
