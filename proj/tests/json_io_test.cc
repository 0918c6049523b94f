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

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "prov/engine.h"
#include "prov/json_io.h"
#include "prov/mitigate.h"
#include "prov/privacy.h"
#include "prov/reconstruct.h"
#include "prov/status.h"
#include "support/random_instances.h"
#include "support/scenario.h"

namespace prov {
namespace {

using ::prov::testing::GradeHierarchy;
using ::prov::testing::GradesCatalog;
using ::prov::testing::GradesDb;
using ::prov::testing::GradesPolicy;
using ::prov::testing::GradesQuery;

constexpr char kAvg[] = "agg[Student; avg(Grade)](Grades)";

TEST(ResultJsonTest, RoundTripsAtEveryLevel) {
  for (const char* q : {kAvg, "pi[Student](Grades)", "agg[; count()](Grades)",
                        "sigma[Module = 'DB'](Grades)"}) {
    for (ProvenanceLevel level : kAllLevels) {
      AnnotatedResult r = Evaluate(GradesDb(), GradesQuery(q), level);
      absl::StatusOr<AnnotatedResult> back = ParseResultJson(ResultToJson(r));
      ASSERT_TRUE(back.ok()) << back.status();
      EXPECT_EQ(*back, r) << q << " at " << LevelName(level);
    }
  }
}

TEST(ResultJsonTest, RoundTripsRandomQueries) {
  ::prov::testing::Rng rng(99);
  const Catalog catalog = ::prov::testing::SmallCatalog();
  for (int i = 0; i < 100; ++i) {
    Database db = ::prov::testing::RandomDatabase(rng, catalog, 4, 10);
    Expr e = i % 2 ? ::prov::testing::RandomSpjQuery(rng, catalog)
                   : ::prov::testing::RandomAggregateQuery(rng, catalog);
    AnnotatedResult r =
        Evaluate(db, Validate(e, catalog).value(), ProvenanceLevel::kHow);
    EXPECT_EQ(ParseResultJson(ResultToJson(r)).value(), r) << PrintExpr(e);
  }
}

TEST(ResultJsonTest, GeneralizedResultRoundTrips) {
  AnnotatedResult r =
      Evaluate(GradesDb(), GradesQuery(kAvg), ProvenanceLevel::kHow);
  AnnotatedResult g = GeneralizeResult(r, GradeHierarchy(), 1).value();
  const std::string text = ResultToJson(g);
  EXPECT_NE(text.find(R"(AVG[(t[Grades/0],\"A\"),(t[Grades/1],\"A\")])"),
            std::string::npos)
      << text;
  EXPECT_EQ(ParseResultJson(text).value(), g);
}

TEST(ResultJsonTest, ContainsTheHowExpression) {
  AnnotatedResult r =
      Evaluate(GradesDb(), GradesQuery(kAvg), ProvenanceLevel::kHow);
  nlohmann::json doc = nlohmann::json::parse(ResultToJson(r));
  EXPECT_EQ(doc["query"], kAvg);
  EXPECT_EQ(doc["tuples"][0]["how"], "AVG[(t[Grades/0],1.0),(t[Grades/1],1.3)]");
  EXPECT_EQ(doc["tuples"][0]["witnesses"][0][1], "Grades/1");
}

TEST(ResultJsonTest, RejectsMalformedDocuments) {
  for (const char* bad :
       {"", "[]", "{}", R"({"query":"Grades","level":"loud"})",
        R"({"query":"sigma[","level":"how"})"}) {
    absl::StatusOr<AnnotatedResult> r = ParseResultJson(bad);
    EXPECT_FALSE(r.ok()) << bad;
  }
  EXPECT_TRUE(HasErrorKind(ParseResultJson("{").status(),
                           error_kind::kMalformedDocument));
}

TEST(ReconstructionJsonTest, RoundTrips) {
  for (ProvenanceLevel level : kAllLevels) {
    AnnotatedResult r = Evaluate(GradesDb(), GradesQuery(kAvg), level);
    ReconstructedDatabase rec = Reconstruct(r, GradesCatalog(), level).value();
    EXPECT_EQ(ParseReconstructionJson(ReconstructionToJson(rec)).value(), rec);
    ReconstructedDatabase g =
        GeneralizeReconstruction(rec, GradeHierarchy(), 2).value();
    EXPECT_EQ(ParseReconstructionJson(ReconstructionToJson(g)).value(), g);
  }
}

TEST(ReportJsonTest, KeysAndValues) {
  LevelComparison cmp =
      CompareLevels(GradesDb(), GradesQuery(kAvg), GradesPolicy()).value();
  nlohmann::ordered_json how =
      nlohmann::ordered_json::parse(ReportToJson(cmp.reports[2]));
  std::vector<std::string> keys;
  for (const auto& [k, v] : how.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"level", "verdict", "reasons",
                                            "leakage", "k_anonymity",
                                            "zero_variance_groups", "cells"}));
  EXPECT_EQ(how["verdict"], "FAIL");
  EXPECT_EQ(how["leakage"]["disclosed"], 3);
  EXPECT_EQ(how["leakage"]["score"], 1.0);
  EXPECT_EQ(how["zero_variance_groups"], nlohmann::ordered_json::parse(R"([["Bob"]])"));

  nlohmann::json all = nlohmann::json::parse(ComparisonToJson(cmp));
  ASSERT_EQ(all["levels"].size(), 3u);
  EXPECT_EQ(all["levels"][1]["leakage"], "1/3");
  EXPECT_EQ(all["levels"][0]["verdict"], "PASS");
}

TEST(PolicyJsonTest, Parses) {
  PrivacyPolicy p = ParsePolicyJson(
                        R"({"sensitive":["Grades.Grade"],
                            "quasi_identifiers":["Grades.Student"],"k":2})")
                        .value();
  EXPECT_EQ(p.sensitive, (std::set<SourceAttribute>{{"Grades", "Grade"}}));
  EXPECT_EQ(p.quasi_identifiers,
            (std::set<SourceAttribute>{{"Grades", "Student"}}));
  EXPECT_EQ(p.k, 2);
  EXPECT_FALSE(ParsePolicyJson(R"({"sensitive":["Grade"]})").ok());
  EXPECT_FALSE(ParsePolicyJson(R"({"k":"two"})").ok());
}

TEST(HierarchyJsonTest, PlaceholderForms) {
  for (const char* placeholder : {"[]", "{}", "null"}) {
    const std::string text = std::string(R"({"relation":"Grades","attribute":"Grade","levels":[)") +
                             placeholder + R"(,{"1.0":"A","2.0":"B"}]})";
    absl::StatusOr<GeneralizationHierarchy> h =
        ParseHierarchyJson(text, GradesCatalog());
    ASSERT_TRUE(h.ok()) << h.status();
    EXPECT_EQ(h->Label(::prov::testing::Num(2.0), 1).value(), "B");
  }
  EXPECT_TRUE(HasErrorKind(
      ParseHierarchyJson(R"({"relation":"Grades","attribute":"Nope","levels":[]})",
                         GradesCatalog())
          .status(),
      error_kind::kUnknownAttribute));
}

}  // namespace
}  // namespace prov
