// Copyright 2026 The convsql Authors.
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

#ifndef CONVSQL_SCHEMA_H_
#define CONVSQL_SCHEMA_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"

namespace convsql {

enum class ValueType { kText, kNumber, kTime, kBoolean, kOthers };

absl::string_view ValueTypeName(ValueType type);

// One entry of the ordered schema-item list. Column 0 is always the wildcard
// "*" with table_index -1.
struct ColumnDef {
  int id = 0;
  int table_index = -1;
  std::string original_name;
  std::string normalized_name;
  ValueType value_type = ValueType::kOthers;

  bool is_wildcard() const { return table_index < 0; }
  bool operator==(const ColumnDef&) const = default;
};

struct ForeignKey {
  int column = 0;
  int referenced_column = 0;
  bool operator==(const ForeignKey&) const = default;
};

// A validated multi-table database schema. Instances are immutable once
// created, so they can be shared freely between labeling workers.
class Schema {
 public:
  // Validates the invariants (dense column ids, wildcard at 0, valid table
  // and key references) and builds the schema.
  static absl::StatusOr<Schema> Create(std::string db_id,
                                       std::vector<std::string> table_names,
                                       std::vector<ColumnDef> columns,
                                       std::vector<int> primary_keys,
                                       std::vector<ForeignKey> foreign_keys);

  const std::string& db_id() const { return db_id_; }
  const std::vector<std::string>& table_names() const { return table_names_; }
  const std::vector<std::string>& normalized_table_names() const {
    return normalized_table_names_;
  }
  const std::vector<ColumnDef>& columns() const { return columns_; }
  const std::vector<int>& primary_keys() const { return primary_keys_; }
  const std::vector<ForeignKey>& foreign_keys() const { return foreign_keys_; }

  // M, the number of schema items including the wildcard.
  int num_columns() const { return static_cast<int>(columns_.size()); }
  int num_tables() const { return static_cast<int>(table_names_.size()); }
  const ColumnDef& column(int id) const { return columns_[id]; }

  // Case-insensitive table lookup.
  std::optional<int> FindTable(absl::string_view name) const;

  bool operator==(const Schema&) const = default;

 private:
  Schema() = default;

  std::string db_id_;
  std::vector<std::string> table_names_;
  std::vector<std::string> normalized_table_names_;
  std::vector<ColumnDef> columns_;
  std::vector<int> primary_keys_;
  std::vector<ForeignKey> foreign_keys_;
};

using SchemaMap = std::map<std::string, Schema>;

// Parses a tables file (a JSON list of database entries). Fields outside the
// known set are reported through `warnings` when it is non-null.
absl::StatusOr<SchemaMap> ParseSchemas(const nlohmann::json& entries,
                                       std::vector<std::string>* warnings);
absl::StatusOr<SchemaMap> LoadSchemas(const std::string& path,
                                      std::vector<std::string>* warnings =
                                          nullptr);

// (table name or none, column name) for every schema item, in id order.
std::vector<std::pair<std::optional<std::string>, std::string>> SchemaItems(
    const Schema& schema);

// Resolves a column by case-insensitive name. `table_hint` disambiguates
// columns that share a name across tables.
absl::StatusOr<int> ResolveColumn(const Schema& schema,
                                  std::optional<absl::string_view> table_hint,
                                  absl::string_view column_name);

// Case folding used for every schema-name comparison.
std::string FoldName(absl::string_view name);

}  // namespace convsql

#endif  // CONVSQL_SCHEMA_H_
