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
#include "prov/expr.h"
#include "prov/parser.h"
#include "prov/status.h"
#include "support/random_instances.h"

namespace prov {
namespace {

Expr P(const char* text) {
  absl::StatusOr<Expr> e = Parse(text);
  EXPECT_TRUE(e.ok()) << text << ": " << e.status();
  return e.ok() ? *e : Scan("?");
}

TEST(ParserTest, AveragePerStudent) {
  EXPECT_EQ(P("agg[Student; avg(Grade)](Grades)"),
            Aggregate({"Student"}, AggFn::kAvg, "Grade", Scan("Grades")));
}

TEST(ParserTest, BareScan) { EXPECT_EQ(P("Grades"), Scan("Grades")); }

TEST(ParserTest, ProjectOverSelect) {
  Predicate p{{{"Grade", CompareOp::kLt,
                Value::Num(Decimal::Parse("2.0").value())}}};
  EXPECT_EQ(P("pi[Student](sigma[Grade < 2.0](Grades))"),
            Project({"Student"}, Select(p, Scan("Grades"))));
}

TEST(ParserTest, ConjunctionsStringsAndAttributeComparisons) {
  Predicate p{{{"Module", CompareOp::kEq, Value::Txt("DB")},
               {"A", CompareOp::kNe, AttrRef{"B"}},
               {"Grade", CompareOp::kGe,
                Value::Num(Decimal::Parse("-1.5").value())}}};
  EXPECT_EQ(P("sigma[Module = 'DB' and A != B and Grade >= -1.5](Grades)"),
            Select(p, Scan("Grades")));
}

TEST(ParserTest, JoinWithOptionalParentheses) {
  Expr expected = Join({{"id", "sid"}, {"x", "y"}}, Scan("S"), Scan("T"));
  EXPECT_EQ(P("join[id = sid, x = y](S, T)"), expected);
  EXPECT_EQ(P("join[(id = sid), (x = y)](S, T)"), expected);
}

TEST(ParserTest, CountWithoutGroupBy) {
  EXPECT_EQ(P("agg[; count()](Grades)"),
            Aggregate({}, AggFn::kCount, std::nullopt, Scan("Grades")));
  EXPECT_EQ(P("agg[Student, Module; COUNT()](Grades)"),
            Aggregate({"Student", "Module"}, AggFn::kCount, std::nullopt,
                      Scan("Grades")));
}

TEST(ParserTest, WhitespaceAndNewlinesAreIgnored) {
  EXPECT_EQ(P("  agg [ Student ;\n avg ( Grade ) ]\n( Grades )\n"),
            P("agg[Student; avg(Grade)](Grades)"));
}

TEST(ParserTest, SyntaxErrorsCarryLocation) {
  absl::StatusOr<Expr> e = Parse("agg[Student; avg(Grade](Grades)");
  ASSERT_FALSE(e.ok());
  EXPECT_TRUE(HasErrorKind(e.status(), error_kind::kSyntaxError));
  EXPECT_NE(e.status().message().find("1:23:"), absl::string_view::npos)
      << e.status();

  e = Parse("pi[Student]\n(Grades");
  ASSERT_FALSE(e.ok());
  EXPECT_NE(e.status().message().find("2:8:"), absl::string_view::npos)
      << e.status();
}

TEST(ParserTest, RejectsMalformedInput) {
  for (const char* bad :
       {"", "sigma", "pi[](R)", "sigma[A < ](R)", "join[A = B](R)",
        "agg[A; median(B)](R)", "R S", "sigma[A < 'x](R)", "pi[and](R)",
        "sigma[A ! 1](R)", "R#", "sigma[A < 1.23456](R)"}) {
    absl::StatusOr<Expr> e = Parse(bad);
    EXPECT_FALSE(e.ok()) << bad;
    EXPECT_TRUE(HasErrorKind(e.status(), error_kind::kSyntaxError))
        << bad << ": " << e.status();
  }
}

TEST(PrinterTest, CanonicalForms) {
  EXPECT_EQ(PrintExpr(Scan("Grades")), "Grades");
  EXPECT_EQ(PrintExpr(Aggregate({"Student"}, AggFn::kAvg, "Grade",
                                Scan("Grades"))),
            "agg[Student; avg(Grade)](Grades)");
  EXPECT_EQ(PrintExpr(P("sigma[ A<2 and B='x' ](E)")),
            "sigma[A < 2.0 and B = 'x'](E)");
  EXPECT_EQ(PrintExpr(P("join[(A=B),C=D](L,R)")), "join[A = B, C = D](L, R)");
  EXPECT_EQ(PrintExpr(P("agg[;count()](E)")), "agg[; count()](E)");
}

TEST(PrinterTest, RandomAstsRoundTrip) {
  ::prov::testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Expr e = ::prov::testing::RandomAst(rng, 4);
    const std::string text = PrintExpr(e);
    absl::StatusOr<Expr> back = Parse(text);
    ASSERT_TRUE(back.ok()) << text << ": " << back.status();
    EXPECT_EQ(*back, e) << text;
  }
}

TEST(ScanCountTest, CountsLeaves) {
  Expr e = P("join[A = B](R, join[C = D](R, S))");
  EXPECT_EQ(ScanCount(e, "R"), 2);
  EXPECT_EQ(ScanCount(e, "S"), 1);
  EXPECT_EQ(ScanCount(e, "T"), 0);
}

}  // namespace
}  // namespace prov
