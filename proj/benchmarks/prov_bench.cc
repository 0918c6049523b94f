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

// Throughput of the evaluate -> reconstruct -> analyze path on synthetic
// grade tables. The argument is the number of students; every student has
// five modules, and each student is enrolled in one of three programs.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "benchmark/benchmark.h"
#include "prov/engine.h"
#include "prov/mitigate.h"
#include "prov/parser.h"
#include "prov/polynomial.h"
#include "prov/privacy.h"
#include "prov/reconstruct.h"
#include "prov/validate.h"

namespace prov {
namespace {

template <typename T>
T OrDie(absl::StatusOr<T> v) {
  if (!v.ok()) {
    std::cerr << v.status() << "\n";
    std::abort();
  }
  return *std::move(v);
}

constexpr int kModules = 5;
constexpr char kAvg[] = "agg[Student; avg(Grade)](Grades)";
constexpr char kJoin[] =
    "pi[Program, Grade](join[Student = Name](Grades, Enrolled))";

Catalog BenchCatalog() {
  return OrDie(Catalog::Create({{"Grades",
                                 {{"Student", AttributeType::kText},
                                  {"Module", AttributeType::kText},
                                  {"Grade", AttributeType::kNumber}}},
                                {"Enrolled",
                                 {{"Name", AttributeType::kText},
                                  {"Program", AttributeType::kText}}}}));
}

Database BenchDb(int students) {
  const Catalog catalog = BenchCatalog();
  std::mt19937_64 rng(students);
  std::uniform_int_distribution<int64_t> grade(10, 50);
  Relation grades{*catalog.Find("Grades"), {}};
  Relation enrolled{*catalog.Find("Enrolled"), {}};
  for (int s = 0; s < students; ++s) {
    const std::string name = absl::StrCat("S", s);
    for (int m = 0; m < kModules; ++m) {
      grades.rows.push_back({Value::Txt(name), Value::Txt(absl::StrCat("M", m)),
                             Value::Num(Decimal::FromScaled(grade(rng) * 1000))});
    }
    enrolled.rows.push_back(
        {Value::Txt(name), Value::Txt(absl::StrCat("P", s % 3))});
  }
  return OrDie(Database::Create({std::move(grades), std::move(enrolled)}));
}

TypedQuery BenchQuery(const char* text) {
  return OrDie(Validate(OrDie(Parse(text)), BenchCatalog()));
}

PrivacyPolicy BenchPolicy() {
  return {{{"Grades", "Grade"}}, {{"Grades", "Student"}}, 2};
}

void BM_EvaluateAggregate(benchmark::State& state) {
  const Database db = BenchDb(static_cast<int>(state.range(0)));
  const TypedQuery q = BenchQuery(kAvg);
  const auto level = static_cast<ProvenanceLevel>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(db, q, level));
  state.SetItemsProcessed(state.iterations() * state.range(0) * kModules);
  state.SetLabel(std::string(LevelName(level)));
}
BENCHMARK(BM_EvaluateAggregate)
    ->ArgsProduct({{10, 100, 1000},
                   {static_cast<int>(ProvenanceLevel::kWhere),
                    static_cast<int>(ProvenanceLevel::kWhy),
                    static_cast<int>(ProvenanceLevel::kHow)}});

void BM_EvaluateJoin(benchmark::State& state) {
  const Database db = BenchDb(static_cast<int>(state.range(0)));
  const TypedQuery q = BenchQuery(kJoin);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Evaluate(db, q, ProvenanceLevel::kHow));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * kModules);
}
BENCHMARK(BM_EvaluateJoin)->Arg(10)->Arg(100)->Arg(1000);

void BM_ReconstructHow(benchmark::State& state) {
  const Database db = BenchDb(static_cast<int>(state.range(0)));
  const AnnotatedResult r =
      Evaluate(db, BenchQuery(kAvg), ProvenanceLevel::kHow);
  const Catalog catalog = BenchCatalog();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Reconstruct(r, catalog, ProvenanceLevel::kHow));
  }
}
BENCHMARK(BM_ReconstructHow)->Arg(10)->Arg(100)->Arg(1000);

void BM_AnalyzeDisclosure(benchmark::State& state) {
  const Database db = BenchDb(static_cast<int>(state.range(0)));
  const AnnotatedResult r =
      Evaluate(db, BenchQuery(kAvg), ProvenanceLevel::kHow);
  const ReconstructedDatabase rec =
      OrDie(Reconstruct(r, BenchCatalog(), ProvenanceLevel::kHow));
  const PrivacyPolicy policy = BenchPolicy();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeDisclosure(rec, db, r, policy));
  }
}
BENCHMARK(BM_AnalyzeDisclosure)->Arg(10)->Arg(100)->Arg(1000);

void BM_CompareLevels(benchmark::State& state) {
  const Database db = BenchDb(static_cast<int>(state.range(0)));
  const TypedQuery q = BenchQuery(kAvg);
  const PrivacyPolicy policy = BenchPolicy();
  for (auto _ : state) benchmark::DoNotOptimize(CompareLevels(db, q, policy));
}
BENCHMARK(BM_CompareLevels)->Arg(10)->Arg(100);

void BM_PermuteReconstruction(benchmark::State& state) {
  const Database db = BenchDb(static_cast<int>(state.range(0)));
  const ReconstructedDatabase rec = OrDie(
      Reconstruct(Evaluate(db, BenchQuery(kAvg), ProvenanceLevel::kHow),
                  BenchCatalog(), ProvenanceLevel::kHow));
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        PermuteReconstruction(rec, {"Grades", "Grade"}, seed++));
  }
}
BENCHMARK(BM_PermuteReconstruction)->Arg(100)->Arg(1000);

// Squares a sum of n variables; the product has n(n+1)/2 monomials.
void BM_PolynomialSquare(benchmark::State& state) {
  Polynomial p;
  for (int64_t i = 0; i < state.range(0); ++i) {
    p = p + Polynomial::Var(TupleId{"R", static_cast<uint32_t>(i)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolynomialSquare)->Arg(8)->Arg(64);

}  // namespace
}  // namespace prov

BENCHMARK_MAIN();
