// Copyright 2026 The Symgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "symgeo/harness/report.hpp"

namespace symgeo::harness {
namespace {

std::string binding(const Gen::Bindings& b, const std::string& name) {
  for (const auto& [k, v] : b) {
    if (k == name) return v;
  }
  ADD_FAILURE() << "no binding " << name;
  return {};
}

ModelConfig small(int dim, long cases = 100) {
  ModelConfig c;
  c.dimension = dim;
  c.cases_per_property = cases;
  return c;
}

TEST(Registry, EveryRequiredIdIsExecutable) {
  const auto ids = registered_ids();
  const std::set<std::string> have(ids.begin(), ids.end());
  EXPECT_EQ(have.size(), ids.size()) << "duplicate ids";
  for (const auto& id : required_property_ids()) {
    EXPECT_TRUE(have.count(id)) << id;
  }
  for (const auto& p : detail::registry_for<Euclidean>()) {
    EXPECT_TRUE(static_cast<bool>(p.check)) << p.id;
    EXPECT_FALSE(p.statement.empty()) << p.id;
  }
}

TEST(Registry, SameIdsUnderEveryBinding) {
  auto ids = [](const std::vector<Property>& r) {
    std::vector<std::string> out;
    for (const auto& p : r) out.push_back(p.id);
    return out;
  };
  EXPECT_EQ(ids(detail::registry_for<Euclidean>()), ids(detail::registry_for<TaxicabMetric>()));
  EXPECT_EQ(ids(detail::registry_for<Euclidean>()), ids(detail::registry_for<FirstCoordinateEquivalence>()));
}

TEST(Registry, A93CarriesBothTags) {
  const auto& p = detail::find_property(detail::registry_for<Euclidean>(), "A9.3");
  EXPECT_NE(std::find(p.tags.begin(), p.tags.end(), "isotropy"), p.tags.end());
  EXPECT_NE(std::find(p.tags.begin(), p.tags.end(), "homogeneity"), p.tags.end());
}

TEST(Selection, GroupsAndErrors) {
  EXPECT_TRUE(selects("ALL", "W5.3"));
  EXPECT_TRUE(selects("W5", "W5.3"));
  EXPECT_TRUE(selects("W5.3", "W5.3"));
  EXPECT_FALSE(selects("W5.3", "W5.30"));
  EXPECT_FALSE(selects("A1", "A11"));
  EXPECT_THROW(run_suite(small(2), {"Z9"}), ModelError);
  EXPECT_THROW(generate(small(2), "Z9", 1), ModelError);
  const SuiteReport r = run_suite(small(2, 10), {"W5"});
  EXPECT_EQ(r.records.size(), 4u);
}

TEST(Config, Validation) {
  ModelConfig c;
  c.dimension = 5;
  EXPECT_THROW(c.validate(), ModelError);
  c.dimension = 2;
  c.degenerate_rate = 1.5;
  EXPECT_THROW(c.validate(), ModelError);
  c.degenerate_rate = 0;
  c.coord_denominator_bound = 0;
  EXPECT_THROW(c.validate(), ModelError);
  EXPECT_EQ(parse_mutant("L1_METRIC"), Mutant::kL1Metric);
  EXPECT_FALSE(parse_mutant("l1"));
}

TEST(Generate, DeterministicStream) {
  const ModelConfig c = small(3);
  EXPECT_EQ(generate(c, "A2", 50), generate(c, "A2", 50));
  ModelConfig other = c;
  other.seed = 2;
  EXPECT_NE(generate(c, "A2", 50), generate(other, "A2", 50));
}

TEST(Generate, FullDegenerateRateMakesCoincidentPoints) {
  ModelConfig c = small(2);
  c.degenerate_rate = 1;
  for (const auto& b : generate(c, "A9.1", 200)) EXPECT_EQ(binding(b, "A"), binding(b, "B"));
}

TEST(Generate, EqualLengthCasesAreExact) {
  for (int d = 2; d <= 4; ++d) {
    for (const auto& b : generate(small(d), "A13", 300)) {
      const Point a = Point::parse(binding(b, "A"));
      EXPECT_EQ(dist_sq(a, Point::parse(binding(b, "B"))), dist_sq(a, Point::parse(binding(b, "C"))));
    }
  }
}

TEST(Generate, PlanePropertiesSkipLine) {
  const SuiteReport r = run_suite(small(1, 10), {"A13", "A2"});
  EXPECT_TRUE(r.find("A13", 1)->skipped);
  EXPECT_FALSE(r.find("A2", 1)->skipped);
}

TEST(Suite, PassesEverywhereOnTheModel) {
  const SuiteReport r = run_suite(small(2, 200), std::vector<int>{1, 2, 3, 4}, {"ALL"});
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.failures, 0) << rec.id << " d=" << rec.dim;
    EXPECT_FALSE(rec.first_counterexample) << rec.id;
    EXPECT_EQ(rec.exhausted, 0) << rec.id << " d=" << rec.dim;
  }
  EXPECT_TRUE(r.passed());
}

TEST(Suite, SkipRedundantDropsA11) {
  ModelConfig c = small(2, 5);
  c.skip_redundant = true;
  EXPECT_EQ(run_suite(c, {"A1"}).find("A1.1", 2), nullptr);
  c.skip_redundant = false;
  EXPECT_NE(run_suite(c, {"A1"}).find("A1.1", 2), nullptr);
}

struct MutantCase {
  Mutant mutant;
  std::vector<std::string> must_fail;  // at least one of these
};

class Mutants : public ::testing::TestWithParam<MutantCase> {};

TEST_P(Mutants, FailWithReplayableCounterexample) {
  ModelConfig c = small(2, 1000);
  c.mutant = GetParam().mutant;
  const SuiteReport r = run_suite(c, GetParam().must_fail);
  bool any = false;
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.failures > 0, rec.first_counterexample.has_value()) << rec.id;
    if (!rec.first_counterexample) continue;
    any = true;
    const Counterexample& ce = *rec.first_counterexample;
    EXPECT_FALSE(ce.bindings.empty());
    const CaseResult again = replay(c, rec.id, ce.case_seed, ce.shrink_level);
    EXPECT_EQ(again.outcome, Outcome::kFail) << rec.id;
    EXPECT_EQ(again.bindings, ce.bindings) << rec.id;
  }
  EXPECT_TRUE(any);
}

INSTANTIATE_TEST_SUITE_P(Designated, Mutants,
                         ::testing::Values(MutantCase{Mutant::kL1Metric, {"A13"}},
                                           MutantCase{Mutant::kL1Metric, {"A11"}},
                                           MutantCase{Mutant::kXOnlyEquiv, {"A2"}}));

TEST(Shrink, KeepsHypothesisAndShrinks) {
  ModelConfig c = small(2, 1000);
  c.mutant = Mutant::kL1Metric;
  const SuiteReport r = run_suite(c, {"A13"});
  const auto& ce = *r.find("A13", 2)->first_counterexample;
  EXPECT_GT(ce.shrink_level, 0u);
  const Point a = Point::parse(binding(ce.bindings, "A"));
  EXPECT_EQ(TaxicabMetric::dist_sq(a, Point::parse(binding(ce.bindings, "B"))),
            TaxicabMetric::dist_sq(a, Point::parse(binding(ce.bindings, "C"))));
}

TEST(Report, JsonShapeAndTimingErasure) {
  ModelConfig c = small(2, 20);
  c.mutant = Mutant::kXOnlyEquiv;
  const SuiteReport r = run_suite(c, {"A2", "A8"});
  const json doc = to_json(r);
  EXPECT_EQ(doc["schema"], "symgeo.suite-report/1");
  EXPECT_EQ(doc["config"]["mutant"], "X_ONLY_EQUIV");
  EXPECT_EQ(doc["summary"]["verdict"], r.passed() ? "PASS" : "FAIL");
  const std::string stripped = without_timing(doc).dump();
  EXPECT_EQ(stripped.find("elapsed_ms"), std::string::npos);
  EXPECT_EQ(stripped, without_timing(to_json(run_suite(c, {"A2", "A8"}))).dump());
  EXPECT_NE(to_text(r).find("A2"), std::string::npos);
}

TEST(Report, TraceSerialisation) {
  const auto t = real_mul_approx(Rational(mpz_class(1), mpz_class(3)), Arrow::parse("(0,0)->(3,0)"), 2);
  const json doc = to_json(t);
  EXPECT_EQ(doc["steps"].size(), 3u);
  EXPECT_EQ(doc["steps"][2]["point"], "(3/4, 0)");
  EXPECT_EQ(doc["final_error_sq"], "1/16");
}

TEST(Gen, PlaneEmbeddingRoundTrips) {
  ModelConfig c = small(4);
  Gen g(c, 99);
  for (int i = 0; i < 200; ++i) {
    const CoordinatePlane pl = g.plane();
    ASSERT_LT(pl.i, pl.j);
    const Rational x = g.coord(), y = g.coord();
    const auto [lx, ly] = pl.local(pl.embed(x, y));
    ASSERT_EQ(lx, x);
    ASSERT_EQ(ly, y);
    const Rotation r = g.rotation();
    ASSERT_EQ(r.c * r.c + r.s * r.s, 1);
  }
}

}  // namespace
}  // namespace symgeo::harness
