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

#ifndef PROV_STATUS_H_
#define PROV_STATUS_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace prov {

// Every error produced by this library carries a machine-readable kind
// (e.g. "UnknownAttribute", "SyntaxError") as a status payload, so callers
// can dispatch on it without parsing messages.
namespace error_kind {
inline constexpr absl::string_view kMissingFile = "MissingFile";
inline constexpr absl::string_view kHeaderMismatch = "HeaderMismatch";
inline constexpr absl::string_view kTypeParseError = "TypeParseError";
inline constexpr absl::string_view kArityMismatch = "ArityMismatch";
inline constexpr absl::string_view kUnknownAttribute = "UnknownAttribute";
inline constexpr absl::string_view kUnknownRelation = "UnknownRelation";
inline constexpr absl::string_view kDuplicateName = "DuplicateName";
inline constexpr absl::string_view kSyntaxError = "SyntaxError";
inline constexpr absl::string_view kTypeMismatch = "TypeMismatch";
inline constexpr absl::string_view kDuplicateOutputAttribute =
    "DuplicateOutputAttribute";
inline constexpr absl::string_view kInvalidQuery = "InvalidQuery";
inline constexpr absl::string_view kUnknownRelationInLineage =
    "UnknownRelationInLineage";
inline constexpr absl::string_view kLevelMismatch = "LevelMismatch";
inline constexpr absl::string_view kPolicyAttributeUnknown =
    "PolicyAttributeUnknown";
inline constexpr absl::string_view kInvalidPolicy = "InvalidPolicy";
inline constexpr absl::string_view kNotAnAggregateQuery = "NotAnAggregateQuery";
inline constexpr absl::string_view kValueNotInHierarchy = "ValueNotInHierarchy";
inline constexpr absl::string_view kAttributeNotInResult = "AttributeNotInResult";
inline constexpr absl::string_view kInvalidHierarchy = "InvalidHierarchy";
inline constexpr absl::string_view kMalformedDocument = "MalformedDocument";
inline constexpr absl::string_view kIoError = "IoError";
inline constexpr absl::string_view kInvariantViolation = "InvariantViolation";
}  // namespace error_kind

absl::Status MakeError(absl::StatusCode code, absl::string_view kind,
                       absl::string_view message);

// Returns the kind attached by MakeError, or "" if none.
std::string ErrorKind(const absl::Status& status);

inline bool HasErrorKind(const absl::Status& status, absl::string_view kind) {
  return ErrorKind(status) == kind;
}

}  // namespace prov

#define PROV_RETURN_IF_ERROR(expr)       \
  do {                                   \
    ::absl::Status _prov_status = (expr); \
    if (!_prov_status.ok()) return _prov_status; \
  } while (0)

#define PROV_CONCAT_INNER_(a, b) a##b
#define PROV_CONCAT_(a, b) PROV_CONCAT_INNER_(a, b)
#define PROV_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                                \
  if (!tmp.ok()) return tmp.status();               \
  lhs = std::move(tmp).value()
#define PROV_ASSIGN_OR_RETURN(lhs, expr) \
  PROV_ASSIGN_OR_RETURN_IMPL_(PROV_CONCAT_(_prov_statusor_, __LINE__), lhs, expr)

#endif  // PROV_STATUS_H_
