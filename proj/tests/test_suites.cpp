#include <gtest/gtest.h>

#include "anth/suites.hpp"

using namespace anth;

TEST(Suites, EveryRegisteredSuitePasses) {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, 42, 25);
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_FALSE(r.checks.empty()) << name;
    for (const auto& c : r.checks) {
      EXPECT_GT(c.instances, 0u) << name << ": " << c.proposition;
      EXPECT_EQ(c.failures, 0u) << name << ": " << c.proposition << ": " << c.first_failure;
    }
  }
}

TEST(Suites, PalindromeThousand) {
  const SuiteReport r = run_suite("palindrome", 1, 1000);
  ASSERT_TRUE(r.passed());
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].instances, 1000u - 30u);  // N = 2..1001 minus 30 squares
}

TEST(Suites, ConjugationSeed42) { EXPECT_TRUE(run_suite("conjugation", 42, 50).passed()); }

TEST(Suites, DeterministicForSeed) {
  const SuiteReport a = run_suite("roundtrip", 7, 20), b = run_suite("roundtrip", 7, 20);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].proposition, b.checks[i].proposition);
    EXPECT_EQ(a.checks[i].instances, b.checks[i].instances);
  }
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nonexistent", 1, 1), std::invalid_argument); }
