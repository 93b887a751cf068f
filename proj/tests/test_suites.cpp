#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace gradedreg;

TEST(Suites, UnknownNameRaises) {
  try {
    verify_suite("nope");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unknown_suite);
  }
}

namespace {

void expect_all_hold(const std::string& name) {
  auto r = verify_suite(name);
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks)
    EXPECT_TRUE(c.holds) << c.name << ": " << c.lhs << " " << c.relation << " " << c.rhs
                         << (c.certified ? "" : " (uncertified)");
}

}  // namespace

TEST(Suites, Sandwich) { expect_all_hold("sandwich"); }
TEST(Suites, Artinian) { expect_all_hold("artinian"); }
TEST(Suites, Padding) { expect_all_hold("padding"); }
TEST(Suites, Factorization) { expect_all_hold("factorization"); }
TEST(Suites, PolynomialExtension) { expect_all_hold("polyext"); }
TEST(Suites, KoszulInvariance) { expect_all_hold("koszul-invariance"); }
TEST(Suites, Regrading) { expect_all_hold("regrading"); }
TEST(Suites, ComplexRegularity) { expect_all_hold("complex-reg"); }
TEST(Suites, ShortExactSequences) { expect_all_hold("ses"); }
TEST(Suites, VeroneseInequality) { expect_all_hold("veronese-ineq"); }
TEST(Suites, KoszulDichotomy) { expect_all_hold("koszul-main"); }
TEST(Suites, LinearityDefect) { expect_all_hold("lind"); }
TEST(Suites, Tower) { expect_all_hold("tower"); }
TEST(Suites, BarOracle) { expect_all_hold("oracle"); }
TEST(Suites, OrderComposition) { expect_all_hold("order-composition"); }
TEST(Suites, VeroneseKoszul) { expect_all_hold("veronese-koszul"); }
