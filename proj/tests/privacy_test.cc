//
// Copyright 2026 The Prov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "prov/engine.h"
#include "prov/privacy.h"
#include "prov/reconstruct.h"
#include "prov/status.h"
#include "support/scenario.h"

namespace prov {
namespace {

using ::prov::testing::GradesCatalog;
using ::prov::testing::GradesDb;
using ::prov::testing::GradesPolicy;
using ::prov::testing::GradesQuery;
using ::prov::testing::Txt;

constexpr char kAvg[] = "agg[Student; avg(Grade)](Grades)";

DisclosureReport Analyze(const char* query, ProvenanceLevel level,
                         const Database& db = GradesDb(),
                         const PrivacyPolicy& policy = GradesPolicy()) {
  AnnotatedResult r = Evaluate(db, GradesQuery(query), level);
  ReconstructedDatabase rec = Reconstruct(r, GradesCatalog(), level).value();
  absl::StatusOr<DisclosureReport> report =
      AnalyzeDisclosure(rec, db, r, policy);
  EXPECT_TRUE(report.ok()) << report.status();
  return report.ok() ? *report : DisclosureReport{};
}

TEST(AnalyzeDisclosureTest, HowDisclosesEverything) {
  DisclosureReport r = Analyze(kAvg, ProvenanceLevel::kHow);
  EXPECT_EQ(r.disclosed, 3u);
  EXPECT_EQ(r.sensitive_total, 3u);
  EXPECT_DOUBLE_EQ(r.leakage(), 1.0);
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.cells.size(), 3u);
  for (const CellClassification& c : r.cells) {
    EXPECT_EQ(c.disclosure, CellDisclosure::kDisclosedExact);
    EXPECT_EQ(c.attribute, "Grade");
  }
}

TEST(AnalyzeDisclosureTest, WhereDisclosesNothing) {
  DisclosureReport r = Analyze(kAvg, ProvenanceLevel::kWhere);
  EXPECT_EQ(r.disclosed, 0u);
  EXPECT_EQ(r.sensitive_total, 3u);
  EXPECT_DOUBLE_EQ(r.leakage(), 0.0);
  EXPECT_TRUE(r.pass);
  for (const CellClassification& c : r.cells) {
    EXPECT_EQ(c.disclosure, CellDisclosure::kProtectedNull);
  }
}

TEST(AnalyzeDisclosureTest, WhyDisclosesTheSingleton) {
  DisclosureReport r = Analyze(kAvg, ProvenanceLevel::kWhy);
  EXPECT_EQ(r.disclosed, 1u);
  EXPECT_EQ(r.sensitive_total, 3u);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.zero_variance_groups, std::vector<Row>{Row{Txt("Bob")}});
  ASSERT_EQ(r.cells.size(), 3u);
  EXPECT_EQ(r.cells[2].disclosure, CellDisclosure::kDisclosedInferred);
  EXPECT_EQ(r.cells[2].origin, (TupleId{"Grades", 2}));
}

TEST(AnalyzeDisclosureTest, KAnonymityFailsVerdict) {
  PrivacyPolicy policy = GradesPolicy();
  policy.k = 2;
  DisclosureReport r = Analyze(kAvg, ProvenanceLevel::kWhere, GradesDb(), policy);
  EXPECT_EQ(r.k_min, 1u);
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.reasons.size(), 1u);
  EXPECT_NE(r.reasons[0].find("k-anonymity"), std::string::npos);
}

TEST(AnalyzeDisclosureTest, RejectsForeignResult) {
  AnnotatedResult r =
      Evaluate(GradesDb(), GradesQuery(kAvg), ProvenanceLevel::kHow);
  ReconstructedDatabase rec =
      Reconstruct(r, GradesCatalog(), ProvenanceLevel::kHow).value();
  Database other = ::prov::testing::GradesDbOf({{"Carol", "DB", 1.0}});
  EXPECT_TRUE(HasErrorKind(
      AnalyzeDisclosure(rec, other, r, GradesPolicy()).status(),
      error_kind::kInvariantViolation));
}

TEST(PolicyTest, Validation) {
  PrivacyPolicy p = GradesPolicy();
  EXPECT_TRUE(p.Validate(GradesCatalog()).ok());
  p.sensitive.insert({"Grades", "Nope"});
  EXPECT_TRUE(HasErrorKind(p.Validate(GradesCatalog()),
                           error_kind::kPolicyAttributeUnknown));
  p = GradesPolicy();
  p.quasi_identifiers.insert({"Grades", "Grade"});
  EXPECT_TRUE(
      HasErrorKind(p.Validate(GradesCatalog()), error_kind::kInvalidPolicy));
  p = GradesPolicy();
  p.k = 0;
  EXPECT_TRUE(
      HasErrorKind(p.Validate(GradesCatalog()), error_kind::kInvalidPolicy));
}

ReconstructedRelation Students(std::vector<const char*> names) {
  ReconstructedRelation rel{*GradesCatalog().Find("Grades"), {}};
  for (const char* n : names) {
    rel.tuples.push_back(
        {0, std::nullopt, {Cell::Exact(Txt(n)), Cell::Null(), Cell::Null()}});
  }
  return rel;
}

TEST(KAnonymityTest, Partitions) {
  const std::vector<std::string> qi = {"Student"};
  KAnonymityResult k = KAnonymity(Students({"Alice", "Alice", "Bob"}), qi);
  EXPECT_EQ(k.k_min, 1u);
  EXPECT_EQ(k.classes,
            (std::vector<EquivalenceClass>{{{"'Alice'"}, 2}, {{"'Bob'"}, 1}}));

  EXPECT_EQ(KAnonymity(Students({"A", "A", "A"}), qi).k_min, 3u);
  EXPECT_FALSE(KAnonymity(Students({}), qi).k_min.has_value());
}

TEST(KAnonymityTest, NullsGroupTogetherAndLabelsStayApart) {
  ReconstructedRelation rel = Students({"A"});
  rel.tuples.push_back({0, std::nullopt, {Cell::Null(), Cell::Null(), Cell::Null()}});
  rel.tuples.push_back({0, std::nullopt, {Cell::Null(), Cell::Null(), Cell::Null()}});
  rel.tuples.push_back(
      {0, std::nullopt, {Cell::Generalized("A"), Cell::Null(), Cell::Null()}});
  const std::vector<std::string> qi = {"Student"};
  KAnonymityResult k = KAnonymity(rel, qi);
  EXPECT_EQ(k.classes, (std::vector<EquivalenceClass>{
                           {{"null"}, 2}, {{"'A'"}, 1}, {{"gen:A"}, 1}}));
}

TEST(ZeroVarianceTest, Examples) {
  AnnotatedResult r =
      Evaluate(GradesDb(), GradesQuery(kAvg), ProvenanceLevel::kHow);
  EXPECT_EQ(ZeroVarianceGroups(GradesDb(), r, {"Grades", "Grade"}).value(),
            std::vector<Row>{Row{Txt("Bob")}});

  Database equal = ::prov::testing::GradesDbOf({{"Alice", "DB", 1.0},
                                                {"Alice", "Math", 1.0},
                                                {"Bob", "DB", 2.0},
                                                {"Alice", "AI", 1.0}});
  r = Evaluate(equal, GradesQuery(kAvg), ProvenanceLevel::kHow);
  EXPECT_EQ(ZeroVarianceGroups(equal, r, {"Grades", "Grade"}).value(),
            (std::vector<Row>{Row{Txt("Alice")}, Row{Txt("Bob")}}));

  Database spread = ::prov::testing::GradesDbOf(
      {{"Alice", "DB", 1.0}, {"Alice", "Math", 1.3}});
  r = Evaluate(spread, GradesQuery(kAvg), ProvenanceLevel::kHow);
  EXPECT_TRUE(ZeroVarianceGroups(spread, r, {"Grades", "Grade"})->empty());
}

TEST(ZeroVarianceTest, RequiresValuedAggregateOverTheAttribute) {
  AnnotatedResult count = Evaluate(
      GradesDb(), GradesQuery("agg[Student; count()](Grades)"),
      ProvenanceLevel::kHow);
  EXPECT_TRUE(HasErrorKind(
      ZeroVarianceGroups(GradesDb(), count, {"Grades", "Grade"}).status(),
      error_kind::kNotAnAggregateQuery));
  AnnotatedResult spj = Evaluate(GradesDb(), GradesQuery("Grades"),
                                 ProvenanceLevel::kHow);
  EXPECT_TRUE(HasErrorKind(
      ZeroVarianceGroups(GradesDb(), spj, {"Grades", "Grade"}).status(),
      error_kind::kNotAnAggregateQuery));
}

TEST(CompareLevelsTest, Scenario) {
  LevelComparison cmp =
      CompareLevels(GradesDb(), GradesQuery(kAvg), GradesPolicy()).value();
  ASSERT_EQ(cmp.reports.size(), 3u);
  EXPECT_EQ(cmp.reports[0].disclosed, 0u);
  EXPECT_EQ(cmp.reports[1].disclosed, 1u);
  EXPECT_EQ(cmp.reports[2].disclosed, 3u);
  for (const DisclosureReport& r : cmp.reports) {
    EXPECT_EQ(r.sensitive_total, 3u);
  }
  EXPECT_TRUE(cmp.reports[0].LeakageAtMost(cmp.reports[1]));
  EXPECT_FALSE(cmp.reports[2].LeakageAtMost(cmp.reports[1]));
}

TEST(CompareLevelsTest, IdentityQueryLeaksEverywhere) {
  LevelComparison cmp =
      CompareLevels(GradesDb(), GradesQuery("Grades"), GradesPolicy()).value();
  for (const DisclosureReport& r : cmp.reports) {
    EXPECT_DOUBLE_EQ(r.leakage(), 1.0) << LevelName(r.level);
  }
}

TEST(CompareLevelsTest, NonSensitiveQueryLeaksNothing) {
  LevelComparison cmp =
      CompareLevels(GradesDb(), GradesQuery("pi[Student, Module](Grades)"),
                    GradesPolicy())
          .value();
  for (const DisclosureReport& r : cmp.reports) {
    EXPECT_EQ(r.disclosed, 0u);
    EXPECT_DOUBLE_EQ(r.leakage(), 0.0);
  }
  PrivacyPolicy none;
  cmp = CompareLevels(GradesDb(), GradesQuery("Grades"), none).value();
  for (const DisclosureReport& r : cmp.reports) {
    EXPECT_EQ(r.sensitive_total, 0u);
    EXPECT_DOUBLE_EQ(r.leakage(), 0.0);
  }
}

}  // namespace
}  // namespace prov
