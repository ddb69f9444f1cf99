#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "psl2ogs/verify.hpp"
#include "test_util.hpp"

using namespace psl2ogs;

namespace {

const CheckResult& find(const CheckReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
  if (it == r.checks.end()) throw std::runtime_error("no check " + name);
  return *it;
}

}  // namespace

TEST(Verify, RegistryCoversLaws) {
  std::set<Law> covered;
  std::set<std::string> names;
  for (const CheckInfo& info : registry()) {
    EXPECT_TRUE(names.insert(info.name).second) << info.name;
    EXPECT_EQ(info.name.substr(0, info.name.find('.')), to_string(info.suite));
    covered.insert(info.laws.begin(), info.laws.end());
  }
  for (Law law : required_laws()) EXPECT_TRUE(covered.count(law)) << to_string(law);
}

TEST(Verify, SuiteNames) {
  for (Suite s : {Suite::Field, Suite::Matrix, Suite::Sequences, Suite::Identities, Suite::Conversion,
                  Suite::Enumeration, Suite::All})
    EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_ERROR(ErrorCode::ParseError, parse_suite("bogus"));
}

TEST(Verify, Q29AllPass) {
  const CheckReport r = run_suite(29, Suite::All);
  EXPECT_EQ(r.checks.size(), registry().size());
  for (const CheckResult& c : r.checks) {
    EXPECT_EQ(c.status, CheckStatus::Pass) << c.name;
  }
  EXPECT_TRUE(r.passed());
}

TEST(Verify, BetaReflectionAsStatedFailsWhenQIsThreeModFour) {
  const CheckReport r = run_suite(7, Suite::Identities);
  EXPECT_FALSE(r.passed());
  const CheckResult& literal = find(r, "identities.beta_reflection");
  ASSERT_EQ(literal.status, CheckStatus::Fail);
  ASSERT_TRUE(literal.counterexample);
  EXPECT_EQ(literal.counterexample->inputs.at(0).first, "k");
  EXPECT_EQ(literal.counterexample->inputs.at(0).second, 0);
  EXPECT_EQ(find(r, "identities.beta_reflection_signed").status, CheckStatus::Pass);
  for (const CheckResult& c : r.checks)
    if (c.name != "identities.beta_reflection") EXPECT_TRUE(c.passed()) << c.name;
}

TEST(Verify, BetaReflectionHoldsWhenQIsOneModFour) {
  for (std::uint64_t q : {5u, 9u, 13u, 17u, 25u})
    EXPECT_EQ(find(run_suite(q, Suite::Identities), "identities.beta_reflection").status, CheckStatus::Pass)
        << "q=" << q;
}

TEST(Verify, CharacteristicTwoSkips) {
  const CheckReport r = run_suite(4, Suite::Identities);
  EXPECT_TRUE(r.passed());
  const CheckResult& c = find(r, "identities.b_last_term");
  EXPECT_EQ(c.status, CheckStatus::Skip);
  EXPECT_EQ(c.skip_reason, "char 2");
  EXPECT_EQ(find(r, "identities.alpha_reflection").status, CheckStatus::Pass);
}

TEST(Verify, SmallFieldsAllSuites) {
  for (std::uint64_t q : {2u, 4u, 5u, 8u, 9u, 16u}) EXPECT_TRUE(run_suite(q, Suite::All).passed()) << "q=" << q;
}

TEST(Verify, Enumeration) {
  const CheckReport r = run_suite(7, Suite::Enumeration);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.size(), 2u);
}

TEST(Verify, Deterministic) {
  const CheckReport a = run_suite(31, Suite::Conversion);
  const CheckReport b = run_suite(31, Suite::Conversion);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].status, b.checks[i].status);
  }
}

TEST(Verify, Bounds) {
  EXPECT_ERROR(ErrorCode::UnsupportedQ, run_suite(1, Suite::Field));
  EXPECT_ERROR(ErrorCode::UnsupportedQ, run_suite(1031, Suite::Field));
  EXPECT_ERROR(ErrorCode::NotPrimePower, run_suite(6, Suite::Field));
}

TEST(Verify, Oracle) {
  const OgsParams p = make_params(Field::of_order(29));
  const auto bn = std::get<OutsideBorel>(oracle_bn_of_power(p, 5));
  EXPECT_EQ(bn.a_tilde.encode(), 14u);
  EXPECT_EQ(canonical_sign(bn.y).encode(), 6u);
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, oracle_bn_of_power(p, 0));
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, oracle_bn_of_power(p, 15));
}
