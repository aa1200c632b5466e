#include <gtest/gtest.h>

#include "qcomp/qcomp.hpp"

using namespace qcomp;

TEST(Suites, NamesAreStable) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"galois", "orthomodular", "sasaki", "tensor-iso", "quadruple",
                                                     "cascade-born", "prop2", "quantale"}));
}

TEST(Suites, SameSeedGivesIdenticalReports) {
  for (const auto& name : suite_names()) {
    auto a = run_suite(name, 77, 40);
    auto b = run_suite(name, 77, 40);
    EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump()) << name;
    EXPECT_TRUE(a.passed()) << a.to_json().dump(2);
    EXPECT_EQ(a.seed, 77u);
    EXPECT_EQ(a.trials, 40u);
  }
}

TEST(Suites, ZeroTrialsIsATrivialPass) {
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, 1, 0);
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_EQ(r.max_discrepancy, 0.0) << name;
  }
}

TEST(Suites, UnknownNameAndBadDimension) {
  try {
    run_suite("nope", 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
  try {
    run_suite("prop2", 1, 1, Eigen::Index{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(Suites, CascadeBornCampaign) {
  auto r = run_suite("cascade-born", 42, 500);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_LE(r.max_discrepancy, r.tolerance);
  EXPECT_EQ(r.tolerance, 1e-9);
}

TEST(Suites, ReportJsonShape) {
  auto j = run_suite("galois", 3, 5).to_json();
  for (const char* key : {"suite", "seed", "trials", "tolerance", "max_discrepancy", "passed", "failures", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(run_suite("galois", 3, 5).to_json(false).contains("elapsed_ms"));
}
