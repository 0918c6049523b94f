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

#ifndef PROV_EXPR_H_
#define PROV_EXPR_H_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absl/strings/string_view.h"
#include "prov/value.h"

namespace prov {

// Heap-allocated value with deep copy and deep comparison; lets the AST be a
// recursive value type.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T& operator*() { return *ptr_; }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

enum class CompareOp { kEq, kNe, kLt, kGt, kLe, kGe };
enum class AggFn { kAvg, kSum, kCount, kMin, kMax };

absl::string_view CompareOpSymbol(CompareOp op);
// Lower-case spelling used by the query language: "avg", "count", ...
absl::string_view AggFnName(AggFn fn);
// Upper-case tag used in how-provenance strings: "AVG", "COUNT", ...
absl::string_view AggFnTag(AggFn fn);
std::optional<AggFn> AggFnFromName(absl::string_view name);

struct AttrRef {
  std::string name;
  friend bool operator==(const AttrRef&, const AttrRef&) = default;
};

// `lhs op rhs` where rhs is another attribute or a constant.
struct Comparison {
  std::string lhs;
  CompareOp op = CompareOp::kEq;
  std::variant<AttrRef, Value> rhs;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

// Conjunction of comparisons; never empty once parsed.
struct Predicate {
  std::vector<Comparison> conjuncts;
  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct Expr;

struct ScanExpr {
  std::string relation;
  friend bool operator==(const ScanExpr&, const ScanExpr&) = default;
};

struct SelectExpr {
  Predicate predicate;
  Box<Expr> input;
  friend bool operator==(const SelectExpr&, const SelectExpr&) = default;
};

struct ProjectExpr {
  std::vector<std::string> attributes;
  Box<Expr> input;
  friend bool operator==(const ProjectExpr&, const ProjectExpr&) = default;
};

struct JoinExpr {
  // (left attribute, right attribute) equalities.
  std::vector<std::pair<std::string, std::string>> on;
  Box<Expr> left;
  Box<Expr> right;
  friend bool operator==(const JoinExpr&, const JoinExpr&) = default;
};

struct AggregateExpr {
  std::vector<std::string> group_by;
  AggFn fn = AggFn::kCount;
  std::optional<std::string> target;  // absent for COUNT
  Box<Expr> input;
  friend bool operator==(const AggregateExpr&, const AggregateExpr&) = default;
};

struct Expr {
  std::variant<ScanExpr, SelectExpr, ProjectExpr, JoinExpr, AggregateExpr>
      node;

  template <typename T>
  const T* As() const {
    return std::get_if<T>(&node);
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Convenience builders, mostly for tests.
Expr Scan(std::string relation);
Expr Select(Predicate predicate, Expr input);
Expr Project(std::vector<std::string> attributes, Expr input);
Expr Join(std::vector<std::pair<std::string, std::string>> on, Expr left,
          Expr right);
Expr Aggregate(std::vector<std::string> group_by, AggFn fn,
               std::optional<std::string> target, Expr input);

// Canonical text; Parse(PrintExpr(e)) == e.
std::string PrintExpr(const Expr& expr);
std::string PrintPredicate(const Predicate& predicate);

// Number of Scan leaves per relation name.
std::vector<std::pair<std::string, int>> ScanCounts(const Expr& expr);
int ScanCount(const Expr& expr, absl::string_view relation);

}  // namespace prov

#endif  // PROV_EXPR_H_
