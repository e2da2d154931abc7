#include "anth/taxonomy.hpp"

#include <array>
#include <random>
#include <vector>

#include "anth/commensurability.hpp"
#include "anth/periodicity.hpp"

namespace anth {

namespace {

enum class AreaType { rational, medial, other };

AreaType area_type(const SurdSum& area) {
  if (area.is_rational()) return AreaType::rational;
  if (area.is_single_radical()) return AreaType::medial;
  return AreaType::other;
}

RootRational as_root_rational(const SurdSum& s, const char* what) {
  if (s.sign() <= 0) throw UnclassifiableLine(std::string(what) + " must be positive");
  if (s.is_rational()) return RootRational(s.rational_value());
  if (!s.is_single_radical()) throw UnclassifiableLine(std::string(what) + " = " + s.str() + " is not q*sqrt(m)");
  const auto& [k, c] = *s.terms().begin();
  return {c, k};
}

/// The positive square root of a positive rational, as a sum.
SurdSum root_of(const Rational& square) { return SurdSum(RootRational::sqrt_of(square)); }

constexpr std::array<KindTag, 6> kAdditive = {
    KindTag::binomial,
    KindTag::first_bimedial,
    KindTag::second_bimedial,
    KindTag::major,
    KindTag::side_of_rational_plus_medial,
    KindTag::side_of_two_medials,
};
}  // namespace

SurdSum TwoTermLine::value() const {
  return sign == Sign::plus ? SurdSum(zeta) + SurdSum(eta) : SurdSum(zeta) - SurdSum(eta);
}

TwoTermLine make_two_term(const RootRational& zeta, const RootRational& eta, Sign sign) {
  if (!(zeta > eta)) {
    throw InvalidLine(InvalidLine::Reason::not_ordered,
                      "need zeta > eta, got " + zeta.str() + " and " + eta.str());
  }
  if (zeta.commensurable_with(eta)) {
    throw InvalidLine(InvalidLine::Reason::commensurable_terms,
                      "terms " + zeta.str() + " and " + eta.str() + " are commensurable in length");
  }
  return {zeta, eta, sign};
}

TwoTermLine two_term_from_value(const SurdSum& value) {
  if (value.terms().size() != 2) {
    throw InvalidLine(InvalidLine::Reason::not_two_terms, value.str() + " does not have exactly two terms");
  }
  auto it = value.terms().begin();
  const auto& [k1, c1] = *it++;
  const auto& [k2, c2] = *it;
  const RootRational t1(abs(c1), k1);
  const RootRational t2(abs(c2), k2);
  if (c1 > 0 && c2 > 0) return make_two_term(std::max(t1, t2), std::min(t1, t2), Sign::plus);
  if (c1 < 0 && c2 < 0) {
    throw InvalidLine(InvalidLine::Reason::not_ordered, value.str() + " is negative");
  }
  return c1 > 0 ? make_two_term(t1, t2, Sign::minus) : make_two_term(t2, t1, Sign::minus);
}

OrderCriteria order_criteria(const TwoTermLine& line, const RootRational& reference) {
  OrderCriteria out;
  out.theta_sq = line.zeta.square() - line.eta.square();
  const RootRational theta = RootRational::sqrt_of(out.theta_sq);
  out.theta_commensurable_with_zeta = theta.commensurable_with(line.zeta);
  if (line.zeta.commensurable_with(reference)) {
    out.commensurable_term = TermReference::zeta;
  } else if (line.eta.commensurable_with(reference)) {
    out.commensurable_term = TermReference::eta;
  }
  const int base = out.theta_commensurable_with_zeta ? 0 : 3;
  switch (out.commensurable_term) {
    case TermReference::zeta: out.order = base + 1; break;
    case TermReference::eta: out.order = base + 2; break;
    case TermReference::neither: out.order = base + 3; break;
  }
  return out;
}

int classify_order(const TwoTermLine& line, const RootRational& reference) {
  return order_criteria(line, reference).order;
}

TwoTermLine construct_simple_apotome(const Integer& N, const Integer& p, const Integer& q, SimpleFlavor flavor) {
  if (p < 1 || q < 1) throw std::domain_error("p and q must be positive");
  if (N < 2 || is_perfect_square(N)) throw std::domain_error("N = " + to_string(N) + " must be a non-square");
  const Integer expected = flavor == SimpleFlavor::deficit ? Integer(q * q - p * p) : Integer(q * q + p * p);
  if (N != expected) {
    throw std::invalid_argument("N = " + to_string(N) + " does not match q^2 " +
                                (flavor == SimpleFlavor::deficit ? "- " : "+ ") + "p^2 = " + to_string(expected));
  }
  const RootRational a = RootRational::sqrt_of(Rational(N));
  const RootRational qb(Rational{q});
  return flavor == SimpleFlavor::deficit ? make_two_term(qb, a, Sign::minus) : make_two_term(a, qb, Sign::minus);
}

TwoTermLine conjugate(const TwoTermLine& line) {
  const Rational s = line.zeta.square() - line.eta.square();
  const Rational inv = 1 / s;
  TwoTermLine out = make_two_term(line.zeta.scaled(inv), line.eta.scaled(inv),
                                  line.is_apotome() ? Sign::plus : Sign::minus);
  if (line.value() * out.value() != SurdSum(1)) throw std::logic_error("conjugate product is not r^2");
  if (classify_order(out) != classify_order(line)) throw std::logic_error("conjugation changed the order");
  return out;
}

bool is_medial_area(const SurdSum& area) { return area.is_single_radical(); }

bool is_medial_line(const SurdSum& square) { return square.sign() > 0 && is_medial_area(square); }

std::string kind_name(KindTag tag) {
  switch (tag) {
    case KindTag::rational: return "rational";
    case KindTag::medial: return "medial";
    case KindTag::binomial: return "binomial";
    case KindTag::first_bimedial: return "first-bimedial";
    case KindTag::second_bimedial: return "second-bimedial";
    case KindTag::major: return "major";
    case KindTag::side_of_rational_plus_medial: return "side-of-rational-plus-medial";
    case KindTag::side_of_two_medials: return "side-of-two-medials";
    case KindTag::apotome: return "apotome";
    case KindTag::first_apotome_of_medial: return "first-apotome-of-medial";
    case KindTag::second_apotome_of_medial: return "second-apotome-of-medial";
    case KindTag::minor: return "minor";
    case KindTag::producing_rational_and_medial_whole: return "producing-rational-and-medial-whole";
    case KindTag::producing_medial_and_medial_whole: return "producing-medial-and-medial-whole";
  }
  return "unknown";
}

std::string LineKind::name() const {
  std::string n = kind_name(tag);
  if (order != 0) n += "(" + std::to_string(order) + ")";
  return n;
}

KindTag kind_for_order(int order, Sign sign) {
  static constexpr std::array<KindTag, 6> subtractive = {
      KindTag::apotome,
      KindTag::first_apotome_of_medial,
      KindTag::second_apotome_of_medial,
      KindTag::minor,
      KindTag::producing_rational_and_medial_whole,
      KindTag::producing_medial_and_medial_whole,
  };
  if (order < 1 || order > 6) throw std::out_of_range("order must be 1..6");
  return (sign == Sign::plus ? kAdditive : subtractive)[static_cast<std::size_t>(order - 1)];
}

int order_for_kind(KindTag tag) {
  for (int order = 1; order <= 6; ++order) {
    if (kind_for_order(order, Sign::plus) == tag || kind_for_order(order, Sign::minus) == tag) return order;
  }
  throw std::out_of_range(kind_name(tag) + " is not a two-term kind");
}

SurdSum AlogosLine::square() const {
  const SurdSum product = A * B;
  if (!product.is_rational()) throw UnclassifiableLine("AB = " + product.str() + " is irrational");
  const SurdSum cross = SurdSum(2) * root_of(product.rational_value());
  return sign == Sign::plus ? A + B + cross : A + B - cross;
}

LineKind classify_alogos(const AlogosLine& line) {
  const SurdSum& A = line.A;
  const SurdSum& B = line.B;
  if (B.sign() <= 0 || !(A > B)) throw UnclassifiableLine("need A > B > 0");
  const SurdSum P = A * B;
  if (!P.is_rational()) throw UnclassifiableLine("rectangle square AB = " + P.str() + " is irrational");
  const bool plus = line.sign == Sign::plus;
  const SurdSum S = A + B;
  const SurdSum rect = root_of(P.rational_value());  // Phi * Psi
  const AreaType rect_type = area_type(rect);

  LineKind kind;
  if (auto ratio = rational_ratio(A, B)) {
    if (rational_sqrt(*ratio)) {
      // Phi ~ Psi: the line is a rational multiple of Phi.
      const AreaType t = area_type(A);
      if (t == AreaType::other) throw UnclassifiableLine("terms are neither rational nor medial");
      return {t == AreaType::rational ? KindTag::rational : KindTag::medial, 0};
    }
    switch (area_type(A)) {
      case AreaType::rational: {
        const TwoTermLine terms = make_two_term(RootRational::sqrt_of(A.rational_value()),
                                                RootRational::sqrt_of(B.rational_value()), line.sign);
        kind = {plus ? KindTag::binomial : KindTag::apotome, classify_order(terms)};
        break;
      }
      case AreaType::medial:
        kind.tag = rect_type == AreaType::rational
                       ? (plus ? KindTag::first_bimedial : KindTag::first_apotome_of_medial)
                       : (plus ? KindTag::second_bimedial : KindTag::second_apotome_of_medial);
        break;
      case AreaType::other:
        throw UnclassifiableLine("terms in square only but neither rational nor medial");
    }
  } else {
    const AreaType sum_type = area_type(S);
    if (sum_type == AreaType::other) throw UnclassifiableLine("A + B = " + S.str() + " is neither rational nor medial");
    if (sum_type == AreaType::rational && rect_type == AreaType::rational) {
      kind.tag = KindTag::rational;
    } else if (sum_type == AreaType::rational) {
      kind.tag = plus ? KindTag::major : KindTag::minor;
    } else if (rect_type == AreaType::rational) {
      kind.tag = plus ? KindTag::side_of_rational_plus_medial : KindTag::producing_rational_and_medial_whole;
    } else if (commensurable(S, rect)) {
      kind.tag = KindTag::medial;
    } else {
      kind.tag = plus ? KindTag::side_of_two_medials : KindTag::producing_medial_and_medial_whole;
    }
  }
  if (kind.tag != KindTag::rational && line.square().is_rational()) {
    throw std::logic_error("alogos line " + kind.name() + " has a rational square");
  }
  return kind;
}

AlogosLine alogos_from_apotome(const TwoTermLine& line) {
  const TwoTermLine gamma = make_two_term(line.zeta, line.eta, line.sign);
  const DefectSolution sol = defect_solve(gamma.zeta, gamma.eta);
  const SurdSum zeta(gamma.zeta);
  const SurdSum phi_sq = zeta * (zeta - sol.x);
  const SurdSum psi_sq = zeta * sol.x;
  if (phi_sq + psi_sq != zeta * zeta) throw std::logic_error("Phi^2 + Psi^2 != zeta^2");
  const Rational half_rect_sq = gamma.zeta.square() * gamma.eta.square() / 4;
  if (phi_sq * psi_sq != SurdSum(half_rect_sq)) throw std::logic_error("Phi Psi != zeta eta / 2");
  // Rescale by r/zeta: phi^2 = r (zeta - x), psi^2 = r x, and phi psi = r eta / 2.
  AlogosLine omega{phi_sq / zeta, psi_sq / zeta, gamma.sign};
  if (omega.A * omega.B != SurdSum(gamma.eta.square() / 4)) throw std::logic_error("phi psi != r eta / 2");
  if (omega.square() != gamma.value()) throw std::logic_error("omega^2 != r gamma");
  const LineKind kind = classify_alogos(omega);
  const KindTag expected = kind_for_order(classify_order(gamma), gamma.sign);
  if (kind.tag != expected) {
    throw std::logic_error("order table mismatch: " + gamma.str() + " gave " + kind.name() + ", expected " +
                           kind_name(expected));
  }
  return omega;
}

TwoTermLine apotome_from_alogos(const AlogosLine& omega) {
  const LineKind kind = classify_alogos(omega);
  if (kind.tag == KindTag::rational || kind.tag == KindTag::medial) {
    throw UnclassifiableLine("a " + kind.name() + " line has no apotome or binomial");
  }
  const RootRational zeta = as_root_rational(omega.A + omega.B, "A + B");
  const RootRational eta = RootRational::sqrt_of(4 * (omega.A * omega.B).rational_value());
  const TwoTermLine gamma = make_two_term(zeta, eta, omega.sign);
  if (gamma.value() != omega.square()) throw std::logic_error("gamma r != omega^2");
  if (classify_order(gamma) != order_for_kind(kind.tag)) {
    throw std::logic_error("order table mismatch: " + kind.name() + " gave order " +
                           std::to_string(classify_order(gamma)));
  }
  return gamma;
}

namespace {

struct KindShape {
  AreaType sum;
  AreaType rect;
  bool incommensurable_parts;
};

KindShape shape_of(KindTag tag) {
  switch (tag) {
    case KindTag::binomial:
    case KindTag::apotome:
    case KindTag::major:
    case KindTag::minor:
      return {AreaType::rational, AreaType::medial, false};
    case KindTag::first_bimedial:
    case KindTag::first_apotome_of_medial:
    case KindTag::side_of_rational_plus_medial:
    case KindTag::producing_rational_and_medial_whole:
      return {AreaType::medial, AreaType::rational, false};
    case KindTag::second_bimedial:
    case KindTag::second_apotome_of_medial:
      return {AreaType::medial, AreaType::medial, false};
    case KindTag::side_of_two_medials:
    case KindTag::producing_medial_and_medial_whole:
      return {AreaType::medial, AreaType::medial, true};
    default:
      throw UnclassifiableLine(kind_name(tag) + " has no annex");
  }
}

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 64) + 1;
  const long den = static_cast<long>(rng() % 16) + 1;
  return Rational(num, den) * (rng() % 2 == 0 ? 1 : -1);
}

}  // namespace

bool uniqueness_check(const AlogosLine& omega, std::size_t samples, std::uint64_t seed) {
  const LineKind kind = classify_alogos(omega);
  const KindShape shape = shape_of(kind.tag);
  const SurdSum S = omega.A + omega.B;
  const SurdSum rect2 = SurdSum(2) * root_of((omega.A * omega.B).rational_value());  // 2 Phi Psi
  const SurdSum sq = omega.square();

  // Radicands worth trying: those already present, plus a few unrelated ones.
  std::vector<Integer> radicands = {2, 3, 5, 6, 7, 10, 15};
  for (const auto& [k, c] : S.terms()) radicands.push_back(k);
  for (const auto& [k, c] : rect2.terms()) radicands.push_back(k);

  std::mt19937_64 rng(seed);
  std::size_t tried = 0;
  while (tried < samples) {
    SurdSum candidate_sum;
    if (shape.sum == AreaType::rational) {
      candidate_sum = S + SurdSum(random_rational(rng));
    } else {
      const Integer& k = radicands[rng() % radicands.size()];
      if (k == 1) continue;
      Rational c = random_rational(rng);
      if (rng() % 4 == 0) c = S.coefficient(k) + c / 64;  // near the true sum
      candidate_sum = SurdSum::term(abs(c), Rational(k));
    }
    if (candidate_sum == S || candidate_sum.sign() <= 0) continue;
    ++tried;
    // The rectangle a second annex Y would need: Omega^2 = S' -/+ 2 Phi' Y.
    const SurdSum candidate_rect =
        omega.sign == Sign::minus ? candidate_sum - sq : sq - candidate_sum;
    const bool sum_ok = area_type(candidate_sum) == shape.sum;
    const bool rect_ok = candidate_rect.sign() > 0 && area_type(candidate_rect) == shape.rect;
    const bool parts_ok = !shape.incommensurable_parts ||
                          (rect_ok && !commensurable(candidate_sum, candidate_rect));
    if (sum_ok && rect_ok && parts_ok) return false;
  }
  // With S' = S the rectangle is forced, and A, B are the two roots of
  // t^2 - S t + (Phi Psi)^2, so the annex is the original one.
  const SurdSum diff = omega.A - omega.B;
  return diff * diff == S * S - rect2 * rect2;
}

bool invariance_check(const AlogosLine& omega, const Rational& scale) {
  if (scale <= 0) throw std::domain_error("scale must be positive");
  const AlogosLine scaled = omega.scaled(scale);
  const LineKind before = classify_alogos(omega);
  if (classify_alogos(scaled) != before) return false;
  if (before.tag == KindTag::rational || before.tag == KindTag::medial) return true;
  return classify_order(apotome_from_alogos(scaled)) == classify_order(apotome_from_alogos(omega));
}

}  // namespace anth
