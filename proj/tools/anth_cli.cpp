// anth: command-line front end for the anthyphairesis library.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anth/anthyphairesis.hpp"
#include "anth/expression.hpp"
#include "anth/pell.hpp"
#include "anth/solids.hpp"
#include "anth/suites.hpp"
#include "anth/taxonomy.hpp"
#include "json.hpp"

namespace {

using anth::Integer;
using anth::QuadSurd;
using Json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t cap = anth::kDefaultCap;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

QuadSurd parse_quad(const std::string& text) {
  const anth::SurdSum value = anth::parse_expression(text);
  const auto q = value.to_quad();
  if (!q) throw UsageError("expression '" + text + "' spans more than one quadratic field");
  return *q;
}

std::string join(const std::vector<Integer>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].get_str();
  }
  return out;
}

int run_expand(const Options& opt, const std::string& expr, std::size_t n_conv, std::size_t n_rem) {
  const QuadSurd x = parse_quad(expr);
  const anth::CFExpansion cf = anth::anth_expand(x, opt.cap);
  anth::ConvergentTable conv;
  if (n_conv > 0) conv = anth::convergents(cf, n_conv);
  std::vector<QuadSurd> rems;
  if (n_rem > 0) {
    for (std::size_t n = 1; n <= n_rem; ++n) {
      if (cf.finite() && n > cf.head.size()) break;
      rems.push_back(anth::iterated_remainder(x, QuadSurd(1), n));
    }
  }

  if (opt.format == "json") {
    Json j;
    j["value"] = x.str();
    j["expansion"] = cf.str();
    Json head = Json::array(), period = Json::array();
    for (const auto& k : cf.head) head.push_back(k.get_str());
    for (const auto& k : cf.period) period.push_back(k.get_str());
    j["head"] = head;
    j["period"] = period;
    if (n_conv > 0) {
      Json rows = Json::array();
      for (const auto& r : conv) rows.push_back({{"n", r.n}, {"p", r.p.get_str()}, {"q", r.q.get_str()}});
      j["convergents"] = rows;
    }
    if (n_rem > 0) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < rems.size(); ++i) rows.push_back({{"n", i + 1}, {"remainder", rems[i].str()}});
      j["remainders"] = rows;
    }
    std::cout << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "value,head,period\n" << csv_quote(x.str()) << ',' << csv_quote(join(cf.head)) << ','
              << csv_quote(join(cf.period)) << '\n';
    if (n_conv > 0) {
      std::cout << "n,p,q\n";
      for (const auto& r : conv) std::cout << r.n << ',' << r.p << ',' << r.q << '\n';
    }
    if (n_rem > 0) {
      std::cout << "n,remainder\n";
      for (std::size_t i = 0; i < rems.size(); ++i) std::cout << i + 1 << ',' << csv_quote(rems[i].str()) << '\n';
    }
  } else {
    std::cout << cf.str() << '\n';
    for (const auto& r : conv) std::cout << "convergent " << r.n << ": " << r.q << '/' << r.p << '\n';
    for (std::size_t i = 0; i < rems.size(); ++i) std::cout << "remainder " << i + 1 << ": " << rems[i].str() << '\n';
  }
  return kPass;
}

std::pair<Integer, Integer> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto parse_int = [&](const std::string& s) {
    Integer v;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || v.set_str(s, 10) != 0) {
      throw UsageError("bad range '" + text + "'");
    }
    return v;
  };
  if (dots == std::string::npos) {
    const Integer n = parse_int(text);
    return {n, n};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

int run_pell(const Options& opt, const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  if (hi < lo) throw UsageError("empty range '" + range + "'");
  if (lo < 2) throw UsageError("range must start at 2 or above");

  Json rows = Json::array();
  if (opt.format == "csv") std::cout << "N,x,y,period_len\n";
  for (Integer n = lo; n <= hi; ++n) {
    if (anth::is_perfect_square(n)) {
      std::cerr << "N=" << n << " skipped: square\n";
      if (opt.format == "text") std::cout << n << " skipped: square\n";
      continue;
    }
    const anth::PellSolution s = anth::pell_fundamental(n);
    if (opt.format == "json") {
      rows.push_back({{"N", s.N.get_str()}, {"x", s.x.get_str()}, {"y", s.y.get_str()}, {"period_len", s.period_len}});
    } else if (opt.format == "csv") {
      std::cout << s.N << ',' << s.x << ',' << s.y << ',' << s.period_len << '\n';
    } else {
      std::cout << s.N << ' ' << s.x << ' ' << s.y << ' ' << s.period_len << '\n';
    }
  }
  if (opt.format == "json") std::cout << rows.dump(2) << '\n';
  return kPass;
}

std::string term_ref_name(anth::TermReference t) {
  switch (t) {
    case anth::TermReference::zeta: return "zeta";
    case anth::TermReference::eta: return "eta";
    case anth::TermReference::neither: return "neither";
  }
  return "neither";
}

anth::TwoTermLine parse_line(const std::string& expr) {
  return anth::two_term_from_value(anth::parse_expression(expr));
}

std::optional<anth::Rational> pell_number_of(const anth::TwoTermLine& line) {
  try {
    return anth::pell_number(line);
  } catch (const anth::MixedFieldError&) {
    return std::nullopt;
  }
}

int run_classify(const Options& opt, const std::vector<std::string>& exprs) {
  Json rows = Json::array();
  if (opt.format == "csv") std::cout << "value,kind,order,criterion_i,criterion_ii,alogos_kind,pell_number\n";
  for (const auto& expr : exprs) {
    const anth::TwoTermLine line = parse_line(expr);
    const anth::OrderCriteria c = anth::order_criteria(line);
    const std::string kind = line.is_apotome() ? "apotome" : "binomial";
    const std::string alogos = anth::kind_name(anth::kind_for_order(c.order, line.sign));
    const auto pn = pell_number_of(line);
    const std::string pn_text = pn ? anth::to_string(*pn) : "-";
    const std::string ci = term_ref_name(c.commensurable_term);
    const std::string cii = c.theta_commensurable_with_zeta ? "theta~zeta" : "theta!~zeta";
    if (opt.format == "json") {
      rows.push_back({{"value", line.str()},
                      {"zeta", line.zeta.str()},
                      {"eta", line.eta.str()},
                      {"kind", kind},
                      {"order", c.order},
                      {"criterion_i", ci},
                      {"criterion_ii", c.theta_commensurable_with_zeta},
                      {"theta_sq", anth::to_string(c.theta_sq)},
                      {"alogos_kind", alogos},
                      {"pell_number", pn ? Json(pn_text) : Json(nullptr)}});
    } else if (opt.format == "csv") {
      std::cout << csv_quote(line.str()) << ',' << kind << ',' << c.order << ',' << ci << ','
                << (c.theta_commensurable_with_zeta ? "true" : "false") << ',' << alogos << ',' << pn_text << '\n';
    } else {
      std::cout << line.str() << ' ' << kind << ' ' << c.order << " (i)=" << ci << ",(ii)=" << cii
                << " alogos=" << alogos << " pell=" << pn_text << '\n';
    }
  }
  if (opt.format == "json") std::cout << rows.dump(2) << '\n';
  return kPass;
}

int run_conjugate(const Options& opt, const std::string& expr) {
  const anth::TwoTermLine line = parse_line(expr);
  const anth::TwoTermLine delta = anth::conjugate(line);
  const anth::SurdSum product = line.value() * delta.value();
  const int order = anth::classify_order(line);
  if (opt.format == "json") {
    Json j = {{"value", line.str()},
              {"conjugate", delta.str()},
              {"product", product.str()},
              {"order", order},
              {"conjugate_order", anth::classify_order(delta)}};
    std::cout << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "value,conjugate,product,order\n"
              << csv_quote(line.str()) << ',' << csv_quote(delta.str()) << ',' << csv_quote(product.str()) << ','
              << order << '\n';
  } else {
    std::cout << '(' << line.str() << ") * (" << delta.str() << ") = " << product.str() << " (order " << order << ")\n";
  }
  return product.is_rational() ? kPass : kFail;
}

int run_verify(const Options& opt, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = anth::suite_names();
  } else {
    names.push_back(suite);
  }
  std::vector<anth::SuiteReport> reports;
  for (const auto& name : names) {
    try {
      reports.push_back(anth::run_suite(name, opt.seed, opt.count));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  bool ok = true;
  Json out = Json::array();
  if (opt.format == "csv") std::cout << "suite,proposition,instances,failures\n";
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (opt.format == "json") {
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"proposition", c.proposition}, {"instances", c.instances}, {"failures", c.failures}});
      }
      out.push_back({{"suite", r.suite}, {"seed", r.seed}, {"count", r.count}, {"passed", r.passed()}, {"checks", checks}});
    } else {
      for (const auto& c : r.checks) {
        if (opt.format == "csv") {
          std::cout << r.suite << ',' << csv_quote(c.proposition) << ',' << c.instances << ',' << c.failures << '\n';
        } else {
          std::cout << (c.failures == 0 ? "PASS " : "FAIL ") << r.suite << ": " << c.proposition << " ["
                    << c.instances - c.failures << '/' << c.instances << "]\n";
        }
      }
    }
    for (const auto& c : r.checks) {
      if (c.failures) std::cerr << r.suite << ": " << c.proposition << ": " << c.first_failure << '\n';
    }
  }
  if (opt.format == "json") std::cout << out.dump(2) << '\n';
  return ok ? kPass : kFail;
}

int run_solids(const Options& opt) {
  const anth::SolidReport r = anth::solid_side_checks();
  if (opt.format == "json") {
    Json j = {{"icosahedron_side_sq", r.icosahedron_side_sq.str()},
              {"icosahedron_kind", r.icosahedron_kind.name()},
              {"icosahedron_minor", r.icosahedron_minor},
              {"dodecahedron_side", r.dodecahedron_side.str()},
              {"dodecahedron_quoted_side", r.dodecahedron_quoted_side.str()},
              {"dodecahedron_order", r.dodecahedron_order},
              {"dodecahedron_apotome", r.dodecahedron_apotome},
              {"scaling_invariant", r.scaling_invariant}};
    std::cout << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "solid,side,kind,order\n"
              << "icosahedron," << csv_quote("sqrt(" + r.icosahedron_side_sq.str() + ")") << ','
              << r.icosahedron_kind.name() << ",0\n"
              << "dodecahedron," << csv_quote(r.dodecahedron_side.str()) << ",apotome," << r.dodecahedron_order << '\n';
  } else {
    std::cout << "icosahedron side^2 = " << r.icosahedron_side_sq.str() << " -> " << r.icosahedron_kind.name() << '\n'
              << "dodecahedron side = " << r.dodecahedron_side.str() << " -> apotome of order "
              << r.dodecahedron_order << '\n'
              << "quoted side " << r.dodecahedron_quoted_side.str() << " -> apotome of order "
              << anth::classify_order(r.dodecahedron_quoted_side) << '\n';
  }
  return r.all_passed() ? kPass : kFail;
}

std::size_t default_cap() {
  const char* env = std::getenv("ANTH_CAP");
  if (!env || !*env) return anth::kDefaultCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("ANTH_CAP is not a positive integer: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  try {
    opt.cap = default_cap();
  } catch (const UsageError& e) {
    std::cerr << "anth: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Exact anthyphairesis, Pell tables and Book X classification"};
  app.require_subcommand(1, 1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", opt.seed, "Random seed for verify");
  app.add_option("--count", opt.count, "Instances per check for verify");
  app.add_option("--cap", opt.cap, "Iteration cap (default ANTH_CAP or 100000)")->check(CLI::PositiveNumber);

  std::string expr;
  std::size_t n_conv = 0, n_rem = 0;
  auto* expand = app.add_subcommand("expand", "Anthyphairetic expansion of a surd expression");
  expand->add_option("expr", expr, "Expression, e.g. (1+sqrt(5))/2")->required();
  expand->add_option("--convergents", n_conv, "Print the first N convergents");
  expand->add_option("--remainders", n_rem, "Print the first N remainders");

  std::string range;
  auto* pell = app.add_subcommand("pell", "Fundamental Pell solutions over a range like 2..30");
  pell->add_option("range", range, "N or A..B")->required();

  std::vector<std::string> exprs;
  auto* classify = app.add_subcommand("classify", "Order and kind of two-term lines");
  classify->add_option("expr", exprs, "Expressions such as sqrt(5)-2")->required();

  auto* conj = app.add_subcommand("conjugate", "Conjugate line with rational product");
  conj->add_option("expr", expr, "Expression")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();

  auto* solids = app.add_subcommand("solids", "Icosahedron and dodecahedron side checks");

  for (auto* sub : {expand, pell, classify, conj, verify, solids}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expand) return run_expand(opt, expr, n_conv, n_rem);
    if (*pell) return run_pell(opt, range);
    if (*classify) return run_classify(opt, exprs);
    if (*conj) return run_conjugate(opt, expr);
    if (*verify) return run_verify(opt, suite);
    if (*solids) return run_solids(opt);
  } catch (const anth::CapExhausted& e) {
    std::cerr << "anth: cap exhausted: " << e.what() << '\n';
    return kCap;
  } catch (const UsageError& e) {
    std::cerr << "anth: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "anth: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "anth: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
