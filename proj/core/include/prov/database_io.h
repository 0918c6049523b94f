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

#ifndef PROV_DATABASE_IO_H_
#define PROV_DATABASE_IO_H_

#include <filesystem>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prov/relation.h"

namespace prov {

// Catalog document:
//   {"relations":[{"name":"Grades","attributes":[
//       {"name":"Student","type":"text"},{"name":"Grade","type":"number"}]}]}
absl::StatusOr<Catalog> ParseCatalogJson(absl::string_view json);
std::string CatalogToJson(const Catalog& catalog);
absl::StatusOr<Catalog> LoadCatalog(const std::filesystem::path& path);

// CSV dialect: ',' separator, '\n' line ends, no quoting, first line is the
// header. An empty field is Null. A trailing '\r' on a line is tolerated.
//
// Errors: HeaderMismatch, ArityMismatch, TypeParseError. Locations are
// reported as 1-based line and column numbers of the file.
absl::StatusOr<Relation> ParseCsv(absl::string_view text, const Schema& schema);
std::string FormatCsv(const Relation& relation);

// Reads `<dir>/<relation>.csv` for every schema in `catalog`.
// Errors: MissingFile plus everything from ParseCsv.
absl::StatusOr<Database> LoadDatabase(const std::filesystem::path& dir,
                                      const Catalog& catalog);
absl::Status WriteDatabase(const Database& db,
                           const std::filesystem::path& dir);

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);
absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view contents);

}  // namespace prov

#endif  // PROV_DATABASE_IO_H_
