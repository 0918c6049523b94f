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

#include "prov/status.h"

#include <optional>

#include "absl/strings/cord.h"
#include "absl/strings/str_cat.h"

namespace prov {
namespace {
constexpr absl::string_view kKindPayloadUrl = "prov/error-kind";
}  // namespace

absl::Status MakeError(absl::StatusCode code, absl::string_view kind,
                       absl::string_view message) {
  absl::Status status(code, absl::StrCat(kind, ": ", message));
  status.SetPayload(kKindPayloadUrl, absl::Cord(kind));
  return status;
}

std::string ErrorKind(const absl::Status& status) {
  auto payload = status.GetPayload(kKindPayloadUrl);
  if (!payload.has_value()) return "";
  return std::string(*payload);
}

}  // namespace prov
