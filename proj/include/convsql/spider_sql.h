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

// The benchmark's structured SQL encoding ("sql" field of each turn and the
// intermediate form of its official scorer): flat condition lists, column
// units as (aggregate, column, distinct) triples, and value units as
// (operator, column unit, column unit).
//
// Our parse is projected into this form for two purposes: cross-checking the
// dataset's pre-parsed field, and reproducing the official exact-set-match.

#ifndef CONVSQL_SPIDER_SQL_H_
#define CONVSQL_SPIDER_SQL_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "convsql/schema.h"
#include "convsql/sql_ast.h"
#include "json.hpp"

namespace convsql::spider {

// Index tables of the encoding.
inline constexpr const char* kAggOps[] = {"none", "max", "min",
                                          "count", "sum", "avg"};
inline constexpr const char* kUnitOps[] = {"none", "-", "+", "*", "/"};
inline constexpr const char* kWhereOps[] = {"not", "between", "=",  ">",
                                            "<",   ">=",      "<=", "!=",
                                            "in",  "like",    "is", "exists"};

struct ColUnit {
  int agg = 0;
  int column = 0;
  bool distinct = false;

  auto operator<=>(const ColUnit&) const = default;
};

struct ValUnit {
  int unit_op = 0;
  ColUnit col1;
  std::optional<ColUnit> col2;

  auto operator<=>(const ValUnit&) const = default;
};

struct Sql;

// None, number, quoted string (without quotes), column unit, or subquery.
struct Value {
  struct None {
    auto operator<=>(const None&) const = default;
  };
  std::variant<None, double, std::string, ColUnit, Box<Sql>> data;

  bool is_none() const { return data.index() == 0; }
  bool is_sql() const { return data.index() == 4; }
  bool operator==(const Value&) const = default;
};

struct CondUnit {
  bool not_op = false;
  int op_id = 0;
  ValUnit val_unit;
  Value val1;
  Value val2;

  bool operator==(const CondUnit&) const = default;
};

// Conditions interleaved with "and" / "or" connectors.
struct CondList {
  std::vector<CondUnit> units;
  std::vector<std::string> connectors;

  bool empty() const { return units.empty(); }
  bool operator==(const CondList&) const = default;
};

struct Sql {
  bool distinct = false;
  std::vector<std::pair<int, ValUnit>> select;
  std::vector<int> table_units;
  CondList from_conds;
  CondList where;
  std::vector<ColUnit> group_by;
  CondList having;
  std::string order_direction;  // "asc" / "desc"; empty without ORDER BY
  std::vector<ValUnit> order_by;
  std::optional<int64_t> limit;
  std::optional<Box<Sql>> intersect;
  std::optional<Box<Sql>> union_;
  std::optional<Box<Sql>> except;

  bool operator==(const Sql&) const = default;
};

// Fails with kUnimplemented for trees the encoding cannot express (nested
// arithmetic, subqueries inside value units).
absl::StatusOr<Sql> FromQuery(const SqlQuery& query);

nlohmann::json ToJson(const Sql& sql);

// Compares two encodings the way the dataset field is written: numbers by
// value, string values with surrounding quotes stripped. On mismatch, `path`
// (if non-null) receives the JSON path of the first difference.
bool JsonEquivalent(const nlohmann::json& a, const nlohmann::json& b,
                    std::string* path = nullptr);

}  // namespace convsql::spider

#endif  // CONVSQL_SPIDER_SQL_H_
