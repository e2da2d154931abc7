#include "anth/suites.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "anth/anthyphairesis.hpp"
#include "anth/commensurability.hpp"
#include "anth/pell.hpp"
#include "anth/periodicity.hpp"
#include "anth/proportion.hpp"
#include "anth/sampler.hpp"
#include "anth/solids.hpp"
#include "anth/taxonomy.hpp"

namespace anth {

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  /// Runs one instance of a check; exceptions count as failures.
  void check(const std::string& proposition, const std::function<bool()>& body) {
    CheckResult& r = slot(proposition);
    ++r.instances;
    std::string failure;
    try {
      if (!body()) failure = "check returned false";
    } catch (const std::exception& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = failure;
    }
  }

 private:
  CheckResult& slot(const std::string& proposition) {
    for (auto& c : report_.checks) {
      if (c.proposition == proposition) return c;
    }
    report_.checks.push_back({proposition, 0, 0, {}});
    return report_.checks.back();
  }

  SuiteReport& report_;
};

using SuiteFn = std::function<void(Recorder&, Sampler&, std::size_t)>;

Sign random_sign(Sampler& s) { return s.below(2) == 0 ? Sign::minus : Sign::plus; }

void suite_kernel(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Integer m = s.square_free();
    const QuadSurd a = s.surd(m), b = s.surd(m), c = s.surd(m);
    rec.check("field axioms", [&] {
      return (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
             (b.is_zero() || (a / b) * b == a);
    });
    rec.check("norm multiplicativity", [&] { return (a * b).norm() == a.norm() * b.norm(); });
    rec.check("commensurable sum (X.15)", [&] {
      const QuadSurd b2 = a * QuadSurd(s.positive_rational());
      const QuadSurd sum = a + b2;
      return commensurable(sum, a) && commensurable(sum, b2);
    });
    rec.check("commensurability chain (X.13)", [&] {
      const QuadSurd a2 = a * QuadSurd(s.nonzero_rational());
      const QuadSurd other = QuadSurd(s.nonzero_rational()) + QuadSurd(s.nonzero_rational()) * QuadSurd(0, 1, m);
      if (commensurable(a, other)) return true;  // premise not met
      return !commensurable(a2, other);
    });
  }
}

void suite_gcd(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Integer a = s.between(1, 1000000), b = s.between(1, 1000000);
    rec.check("last divisor is the gcd (VII.1-2)", [&] {
      QuadSurd prev{Rational(a)}, cur{Rational(b)};
      while (true) {
        AnthStep step = anth_step(prev, cur);
        if (step.remainder.is_zero()) break;
        prev = cur;
        cur = step.remainder;
      }
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return cur == QuadSurd(Rational(g));
    });
    const QuadSurd x = s.below(2) == 0 ? QuadSurd(s.positive_rational(1000, 1000)) : s.positive_surd(s.square_free());
    rec.check("finite expansion iff rational (X.2)", [&] { return anth_expand(x).finite() == x.is_rational(); });
  }
}

void suite_palindrome(Recorder& rec, Sampler&, std::size_t count) {
  for (long n = 2; n <= static_cast<long>(count) + 1; ++n) {
    if (is_perfect_square(Integer(n))) continue;
    rec.check("palindromic period of sqrt(N)", [&] { return palindrome_check(n).ok; });
  }
}

void suite_pell(Recorder& rec, Sampler&, std::size_t count) {
  for (long n = 2; n <= static_cast<long>(count) + 1; ++n) {
    const Integer N = n;
    if (is_perfect_square(N)) continue;
    rec.check("Pell fundamental solution", [&] {
      const PellSolution sol = pell_fundamental(N);
      return sol.y * sol.y - N * sol.x * sol.x == 1;
    });
    rec.check("parity law at the period boundary", [&] {
      const CFExpansion cf = anth_expand(QuadSurd::sqrt(Rational(N)));
      const ConvergentRow row = convergents(cf, cf.period.size()).back();
      const Integer value = row.q * row.q - N * row.p * row.p;
      return value == (cf.period.size() % 2 == 0 ? 1 : -1);
    });
  }
}

void suite_theorem1(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Integer M = s.between(1, 50), N = s.between(1, 50);
    if (is_perfect_square(M * N)) continue;
    rec.check("sqrt(N/M) eventually periodic, incommensurable (X.9)", [&] {
      const CFExpansion cf = theorem1_check(M, N);
      return !cf.period.empty() && !QuadSurd::sqrt(Rational(N, M)).is_rational();
    });
  }
}

void suite_defect(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const TwoTermLine line = s.two_term_of_order(4 + static_cast<int>(s.below(3)), Sign::minus);
    rec.check("defect solution identities", [&] {
      const DefectSolution sol = defect_solve(line.zeta, line.eta);
      const SurdSum z(line.zeta);
      return sol.x * (z - sol.x) == SurdSum(line.eta.square() / 4) &&
             sol.theta_sq == line.zeta.square() - line.eta.square();
    });
    rec.check("Anth(zeta, x) eventually periodic", [&] { return !defect_periodicity(line.zeta, line.eta).finite(); });
  }
}

void suite_x17(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const TwoTermLine line = s.two_term_of_order(1 + static_cast<int>(s.below(6)), Sign::minus);
    rec.check("parts ~ iff theta ~ zeta (X.17/X.18)", [&] {
      const PartsCommensurability r = x17_x18_check(line.zeta, line.eta);
      return r.parts_commensurable == r.theta_zeta_commensurable;
    });
  }
}

void suite_proportion(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    // Small coefficients keep the periods of the derived ratios short.
    const Integer m = s.square_free(13);
    const QuadSurd a = s.positive_surd(m, 9, 4), b = s.positive_surd(m, 9, 4), k = s.positive_surd(m, 5, 3);
    const QuadSurd c = a * k, d = b * k;
    rec.check("proportion laws", [&] { return proportion_laws(a, b, c, d).all_passed(); });
    const QuadSurd e = s.positive_surd(m, 9, 4);
    const QuadSurd f = s.below(2) == 0 ? e * b / a : s.positive_surd(m, 9, 4);
    rec.check("Anth equality iff cross products", [&] {
      return ratio_equal(TheaeteteanRatio(a, b), TheaeteteanRatio(e, f)) == (a * f == b * e);
    });
    rec.check("cancellation", [&] {
      const QuadSurd g = s.below(2) == 0 ? b : e;
      return ratio_equal(TheaeteteanRatio(a, b), TheaeteteanRatio(a, g)) == (b == g);
    });
    rec.check("transitivity", [&] {
      const QuadSurd k2 = s.positive_surd(m, 5, 3);
      const TheaeteteanRatio r1(a, b), r2(c, d), r3(a * k2, b * k2);
      return ratio_equal(r1, r2) && ratio_equal(r2, r3) && ratio_equal(r1, r3);
    });
    rec.check("scale invariance", [&] { return scale_invariance(a, b, k); });
  }
}

void suite_convergents(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Integer m = s.square_free();
    const QuadSurd b = s.positive_surd(m);
    const QuadSurd a = b * (QuadSurd(1) + s.positive_surd(m));
    rec.check("remainder formula", [&] {
      for (std::size_t n = 1; n <= 20; ++n) {
        if (remainder_formula(a, b, n) != iterated_remainder(a, b, n)) return false;
      }
      return true;
    });
  }
  for (long len = 1; len <= 4; ++len) {
    std::vector<Integer> period(static_cast<std::size_t>(len), 1);
    for (;;) {
      rec.check("periodic ratio from its relation", [&] {
        const QuadraticRelation rel = purely_periodic_to_quadratic(period);
        const QuadSurd root = rel.positive_root();
        const CFExpansion cf = anth_expand(root);
        if (!cf.head.empty() || !rel.holds(root, 1)) return false;
        // The expansion reports the primitive period.
        for (std::size_t i = 0; i < period.size(); ++i) {
          if (period[i] != cf.period[i % cf.period.size()]) return false;
        }
        return period.size() % cf.period.size() == 0;
      });
      std::size_t j = 0;
      while (j < period.size() && period[j] == 4) period[j++] = 1;
      if (j == period.size()) break;
      period[j] += 1;
    }
  }
}

void suite_conjugation(Recorder& rec, Sampler& s, std::size_t count) {
  for (int order = 1; order <= 6; ++order) {
    for (std::size_t i = 0; i < count; ++i) {
      const TwoTermLine line = s.two_term_of_order(order, Sign::minus);
      rec.check("conjugate product rational, order kept (X.113)", [&] {
        const TwoTermLine delta = conjugate(line);
        return (line.value() * delta.value()).is_rational() && classify_order(delta) == order;
      });
    }
  }
}

void suite_roundtrip(Recorder& rec, Sampler& s, std::size_t count) {
  for (int order = 1; order <= 6; ++order) {
    for (std::size_t i = 0; i < count; ++i) {
      const Sign sign = random_sign(s);
      const TwoTermLine line = s.two_term_of_order(order, sign);
      rec.check("alogos round trip and kind table (X.54-65, X.91-102)", [&] {
        const AlogosLine omega = alogos_from_apotome(line);
        return classify_alogos(omega).tag == kind_for_order(order, sign) && apotome_from_alogos(omega) == line;
      });
    }
  }
}

void suite_invariance(Recorder& rec, Sampler& s, std::size_t count) {
  for (int order = 1; order <= 6; ++order) {
    for (std::size_t i = 0; i < count; ++i) {
      const TwoTermLine line = s.two_term_of_order(order, random_sign(s));
      const Rational scale = s.positive_rational();
      rec.check("kind invariant under rational scale (X.66-70, X.103-107)",
                [&] { return invariance_check(alogos_from_apotome(line), scale); });
    }
  }
}

void suite_uniqueness(Recorder& rec, Sampler& s, std::size_t count) {
  for (int order = 1; order <= 6; ++order) {
    for (std::size_t i = 0; i < count; ++i) {
      const TwoTermLine line = s.two_term_of_order(order, random_sign(s));
      const std::uint64_t seed = s.below(1u << 30);
      rec.check("single annex (X.42-47, X.79-84)",
                [&] { return uniqueness_check(alogos_from_apotome(line), 50, seed); });
    }
  }
}

void suite_x26(Recorder& rec, Sampler& s, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const SurdSum m1 = SurdSum::term(s.positive_rational(), Rational(s.square_free()));
    const SurdSum m2 = s.below(3) == 0 ? m1 + SurdSum(s.nonzero_rational()) * m1
                                       : SurdSum::term(s.positive_rational(), Rational(s.square_free()));
    rec.check("medial areas never differ by a rational (X.26)", [&] {
      if (!is_medial_area(m2) || m1 == m2) return true;
      return !(m1 - m2).is_rational();
    });
    const RootRational rho = s.root_rational();
    const Rational area = s.positive_rational();
    rec.check("rational area over rational line (X.20)", [&] {
      const SurdSum breadth = SurdSum(area) / SurdSum(rho);
      return commensurable(breadth, SurdSum(rho));
    });
    rec.check("medial area over rational line (X.22)", [&] {
      const SurdSum breadth = m1 / SurdSum(rho);
      return (breadth * breadth).is_rational() && !commensurable(breadth, SurdSum(rho));
    });
    rec.check("medial rectangle construction (X.27)", [&] {
      const TwoTermLine line = s.two_term_of_order(4 + static_cast<int>(s.below(3)), Sign::minus);
      const SurdSum h_sq = SurdSum(line.zeta) * SurdSum(line.eta);
      const SurdSum x_sq = h_sq * SurdSum(line.eta.square() / line.zeta.square());
      return is_medial_line(h_sq) && is_medial_line(x_sq) && x_sq * h_sq == SurdSum(line.eta.square() * line.eta.square());
    });
  }
}

void suite_solids(Recorder& rec, Sampler&, std::size_t) {
  rec.check("icosahedron side is minor, dodecahedron side an apotome",
            [&] { return solid_side_checks().all_passed(); });
}

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"kernel", suite_kernel},         {"gcd", suite_gcd},
      {"palindrome", suite_palindrome}, {"pell", suite_pell},
      {"theorem1", suite_theorem1},     {"defect", suite_defect},
      {"x17", suite_x17},               {"proportion", suite_proportion},
      {"convergents", suite_convergents}, {"conjugation", suite_conjugation},
      {"roundtrip", suite_roundtrip},   {"invariance", suite_invariance},
      {"uniqueness", suite_uniqueness}, {"x26", suite_x26},
      {"solids", suite_solids},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (c.failures != 0) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kernel",      "gcd",         "palindrome", "pell",      "theorem1",   "defect", "x17",   "proportion",
      "convergents", "conjugation", "roundtrip",  "invariance", "uniqueness", "x26",    "solids",
  };
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport report{name, seed, count, {}};
  Recorder rec(report);
  Sampler sampler(seed);
  it->second(rec, sampler, count);
  return report;
}

}  // namespace anth
