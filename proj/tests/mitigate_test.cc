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

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "prov/engine.h"
#include "prov/json_io.h"
#include "prov/mitigate.h"
#include "prov/privacy.h"
#include "prov/reconstruct.h"
#include "prov/status.h"
#include "support/scenario.h"

namespace prov {
namespace {

using ::prov::testing::GradeHierarchy;
using ::prov::testing::GradesCatalog;
using ::prov::testing::GradesDb;
using ::prov::testing::GradesPolicy;
using ::prov::testing::GradesQuery;
using ::prov::testing::Num;
using ::prov::testing::Txt;

constexpr char kAvg[] = "agg[Student; avg(Grade)](Grades)";
const SourceAttribute kGrade{"Grades", "Grade"};

AnnotatedResult HowResult() {
  return Evaluate(GradesDb(), GradesQuery(kAvg), ProvenanceLevel::kHow);
}

ReconstructedDatabase RecOf(const AnnotatedResult& r, ProvenanceLevel level) {
  return Reconstruct(r, GradesCatalog(), level).value();
}

TEST(HierarchyTest, LabelsPerLevel) {
  GeneralizationHierarchy h = GradeHierarchy();
  EXPECT_EQ(h.level_count(), 3u);
  EXPECT_EQ(h.Domain().size(), 11u);
  EXPECT_EQ(h.Label(Num(1.0), 1).value(), "A");
  EXPECT_EQ(h.Label(Num(2.3), 1).value(), "B");
  EXPECT_EQ(h.Label(Num(5.0), 1).value(), "F");
  EXPECT_EQ(h.Label(Num(1.3), 2).value(), "pass");
  EXPECT_EQ(h.Label(Num(5.0), 2).value(), "fail");
  EXPECT_TRUE(HasErrorKind(h.Label(Num(9.9), 1).status(),
                           error_kind::kValueNotInHierarchy));
  EXPECT_TRUE(HasErrorKind(h.Label(Num(1.0), 3).status(),
                           error_kind::kInvalidHierarchy));
}

TEST(HierarchyTest, RejectsIncompleteLevels) {
  EXPECT_TRUE(HasErrorKind(
      GeneralizationHierarchy::Create(kGrade, AttributeType::kNumber,
                                      {{}, {{"1.0", "A"}}, {{"B", "pass"}}})
          .status(),
      error_kind::kInvalidHierarchy));
  EXPECT_TRUE(HasErrorKind(
      GeneralizationHierarchy::Create(kGrade, AttributeType::kNumber,
                                      {{}, {{"one", "A"}}})
          .status(),
      error_kind::kInvalidHierarchy));
}

TEST(GeneralizeResultTest, AliceBecomesA) {
  AnnotatedResult g = GeneralizeResult(HowResult(), GradeHierarchy(), 1).value();
  EXPECT_EQ(g.tuples[0].aggregation->ToString(),
            "AVG[(t[Grades/0],\"A\"),(t[Grades/1],\"A\")]");
  EXPECT_EQ(g.tuples[1].aggregation->ToString(), "AVG[(t[Grades/2],\"B\")]");
  // The published aggregate itself stays as computed.
  EXPECT_EQ(g.tuples[0].values, (Row{Txt("Alice"), Num(1.15)}));
  EXPECT_EQ(g.generalized, (std::set<SourceAttribute>{kGrade}));
}

TEST(GeneralizeResultTest, LevelZeroIsIdentity) {
  EXPECT_EQ(GeneralizeResult(HowResult(), GradeHierarchy(), 0).value(),
            HowResult());
}

TEST(GeneralizeResultTest, Errors) {
  Database odd = ::prov::testing::GradesDbOf({{"Eve", "DB", 9.9}});
  AnnotatedResult r = Evaluate(odd, GradesQuery(kAvg), ProvenanceLevel::kHow);
  EXPECT_TRUE(HasErrorKind(GeneralizeResult(r, GradeHierarchy(), 1).status(),
                           error_kind::kValueNotInHierarchy));
  AnnotatedResult students = Evaluate(
      GradesDb(), GradesQuery("pi[Student](Grades)"), ProvenanceLevel::kHow);
  EXPECT_TRUE(
      HasErrorKind(GeneralizeResult(students, GradeHierarchy(), 1).status(),
                   error_kind::kAttributeNotInResult));
}

TEST(GeneralizeResultTest, CopiedColumnsBecomeLabels) {
  AnnotatedResult r = Evaluate(GradesDb(), GradesQuery("pi[Student, Grade](Grades)"),
                               ProvenanceLevel::kHow);
  AnnotatedResult g = GeneralizeResult(r, GradeHierarchy(), 2).value();
  EXPECT_EQ(g.schema.attributes[1].type, AttributeType::kText);
  for (const ResultTuple& t : g.tuples) EXPECT_EQ(t.values[1], Txt("pass"));
  ReconstructedDatabase rec = RecOf(g, ProvenanceLevel::kHow);
  for (const ReconstructedTuple& t : rec.relations[0].tuples) {
    EXPECT_EQ(t.cells[2], Cell::Generalized("pass"));
  }
}

TEST(GeneralizeReconstructionTest, OnlyRecoveredCellsChange) {
  ReconstructedDatabase how = RecOf(HowResult(), ProvenanceLevel::kHow);
  ReconstructedDatabase g =
      GeneralizeReconstruction(how, GradeHierarchy(), 1).value();
  const auto& tuples = g.relations[0].tuples;
  EXPECT_EQ(tuples[0].cells[2], Cell::Generalized("A"));
  EXPECT_EQ(tuples[1].cells[2], Cell::Generalized("A"));
  EXPECT_EQ(tuples[0].cells[0], Cell::Exact(Txt("Alice")));
  // Idempotent at a fixed level.
  EXPECT_EQ(GeneralizeReconstruction(g, GradeHierarchy(), 1).value(), g);

  AnnotatedResult why =
      Evaluate(GradesDb(), GradesQuery(kAvg), ProvenanceLevel::kWhy);
  ReconstructedDatabase w = RecOf(why, ProvenanceLevel::kWhy);
  ReconstructedDatabase gw =
      GeneralizeReconstruction(w, GradeHierarchy(), 1).value();
  EXPECT_EQ(gw.relations[0].tuples[0], w.relations[0].tuples[0]);
  EXPECT_EQ(gw.relations[0].tuples[2].cells[2], Cell::Generalized("B"));

  ReconstructedDatabase where = RecOf(HowResult(), ProvenanceLevel::kWhere);
  EXPECT_EQ(GeneralizeReconstruction(where, GradeHierarchy(), 1).value(), where);
}

TEST(GeneralizeTest, FlipsTheVerdict) {
  AnnotatedResult g = GeneralizeResult(HowResult(), GradeHierarchy(), 1).value();
  DisclosureReport r = AnalyzeDisclosure(RecOf(g, ProvenanceLevel::kHow),
                                         GradesDb(), g, GradesPolicy())
                           .value();
  EXPECT_EQ(r.disclosed, 0u);
  EXPECT_TRUE(r.pass);
  for (const CellClassification& c : r.cells) {
    EXPECT_EQ(c.disclosure, CellDisclosure::kProtectedGeneralized);
  }
}

TEST(SuppressTest, RemovesGradeLeakage) {
  AnnotatedResult how = HowResult();
  ReconstructedDatabase rec = RecOf(how, ProvenanceLevel::kHow);
  ReconstructedDatabase s = Suppress(rec, MatchAttribute(kGrade));
  EXPECT_EQ(s.tuple_count(), rec.tuple_count());
  for (const ReconstructedTuple& t : s.relations[0].tuples) {
    EXPECT_EQ(t.cells[2], Cell::Null());
  }
  EXPECT_EQ(AnalyzeDisclosure(s, GradesDb(), how, GradesPolicy())->disclosed, 0u);

  auto nothing = [](absl::string_view, absl::string_view, CellStatus) {
    return false;
  };
  EXPECT_EQ(Suppress(rec, nothing), rec);
  auto nulls = [](absl::string_view, absl::string_view, CellStatus status) {
    return status == CellStatus::kNull;
  };
  EXPECT_EQ(Suppress(rec, nulls), rec);
}

TEST(PermutationTest, SeededPermutationIsAPermutation) {
  for (uint64_t seed : {0ull, 1ull, 42ull, 1ull << 40}) {
    std::vector<size_t> p = SeededPermutation(10, seed);
    std::vector<size_t> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<size_t> iota(10);
    std::iota(iota.begin(), iota.end(), 0);
    EXPECT_EQ(sorted, iota);
    EXPECT_EQ(p, SeededPermutation(10, seed));
  }
  EXPECT_EQ(SeededPermutation(1, 5), std::vector<size_t>{0});
  EXPECT_TRUE(SeededPermutation(0, 5).empty());
}

// Independent reference: the same LCG written out by hand.
TEST(PermutationTest, MatchesMinimalStandardGenerator) {
  const uint64_t kModulus = 2147483647, kMultiplier = 48271;
  uint64_t state = 12345 % kModulus;
  if (state == 0) state = 1;
  std::vector<size_t> expected = {0, 1, 2, 3, 4, 5};
  for (size_t i = expected.size() - 1; i >= 1; --i) {
    state = state * kMultiplier % kModulus;
    std::swap(expected[i], expected[state % (i + 1)]);
  }
  EXPECT_EQ(SeededPermutation(6, 12345), expected);
}

TEST(PermuteColumnTest, PreservesMultisetAndIsDeterministic) {
  const Database grades_db = GradesDb();
  const Relation& src = *grades_db.Find("Grades");
  Relation p = PermuteColumn(src, "Grade", 3).value();
  std::vector<Value> before, after;
  for (size_t i = 0; i < src.rows.size(); ++i) {
    before.push_back(src.rows[i][2]);
    after.push_back(p.rows[i][2]);
    EXPECT_EQ(p.rows[i][0], src.rows[i][0]);
    EXPECT_EQ(p.rows[i][1], src.rows[i][1]);
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  EXPECT_EQ(before, after);
  EXPECT_EQ(PermuteColumn(src, "Grade", 3).value(), p);

  Relation one{src.schema, {src.rows[0]}};
  EXPECT_EQ(PermuteColumn(one, "Grade", 99).value(), one);
  EXPECT_TRUE(HasErrorKind(PermuteColumn(src, "Nope", 1).status(),
                           error_kind::kUnknownAttribute));
}

TEST(PermuteReconstructionTest, ShufflesRecoveredCellsOnly) {
  AnnotatedResult how = HowResult();
  ReconstructedDatabase rec = RecOf(how, ProvenanceLevel::kHow);
  ReconstructedDatabase p = PermuteReconstruction(rec, kGrade, 7).value();
  std::vector<Value> before, after;
  for (size_t i = 0; i < rec.relations[0].tuples.size(); ++i) {
    before.push_back(rec.relations[0].tuples[i].cells[2].value);
    after.push_back(p.relations[0].tuples[i].cells[2].value);
    EXPECT_EQ(p.relations[0].tuples[i].cells[0],
              rec.relations[0].tuples[i].cells[0]);
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  EXPECT_EQ(before, after);
  EXPECT_EQ(ReconstructionToJson(PermuteReconstruction(rec, kGrade, 7).value()),
            ReconstructionToJson(p));
  EXPECT_LE(AnalyzeDisclosure(p, GradesDb(), how, GradesPolicy())->disclosed,
            3u);
}

TEST(ApplyPlanTest, DispatchesEachStrategy) {
  ReconstructedDatabase rec = RecOf(HowResult(), ProvenanceLevel::kHow);
  EXPECT_EQ(ApplyPlan(rec, GeneralizePlan{GradeHierarchy(), 1}).value(),
            GeneralizeReconstruction(rec, GradeHierarchy(), 1).value());
  EXPECT_EQ(ApplyPlan(rec, SuppressPlan{kGrade}).value(),
            Suppress(rec, MatchAttribute(kGrade)));
  EXPECT_EQ(ApplyPlan(rec, PermutePlan{kGrade, 4}).value(),
            PermuteReconstruction(rec, kGrade, 4).value());
}

}  // namespace
}  // namespace prov
