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

// Column-change labels: for every schema column, which usage-change types the
// last turn applies to it.
//
// A column's usages are gathered per clause across all subquery depths. A
// clause whose usage count grows is an add, one that shrinks is a remove, and
// equal counts with different usage signatures are a change.

#ifndef CONVSQL_SCHEMA_DIFF_H_
#define CONVSQL_SCHEMA_DIFF_H_

#include <cstddef>
#include <vector>

#include "absl/status/statusor.h"
#include "convsql/schema.h"
#include "convsql/sql_ast.h"
#include "convsql/taxonomy.h"
#include "convsql/turn_diff.h"

namespace convsql {

// M rows keyed by column id, one bit per taxonomy entry.
struct ColumnChangeLabel {
  std::vector<std::vector<bool>> rows;

  size_t num_columns() const { return rows.size(); }
  bool any() const;
  bool operator==(const ColumnChangeLabel&) const = default;
};

struct ColumnEditEvent {
  int column_id = 0;
  EditEvent event;
};

struct ColumnWitness {
  int column_id = 0;
  size_t bit = 0;
  std::vector<EditEvent> events;
};

Clause UsageToClause(UsageClause clause);

// Per-column usage edit events, ordered by column id then clause.
absl::StatusOr<std::vector<ColumnEditEvent>> ColumnEditEvents(
    const SqlQuery* prev, const SqlQuery& curr, const Schema& schema);

absl::StatusOr<ColumnChangeLabel> DiffSchemaUsage(
    const SqlQuery* prev, const SqlQuery& curr, const Schema& schema,
    const Taxonomy& taxonomy = DefaultColumnChangeTaxonomy());

// One entry per set (column, bit), column-major.
absl::StatusOr<std::vector<ColumnWitness>> ExplainSchemaUsage(
    const SqlQuery* prev, const SqlQuery& curr, const Schema& schema,
    const Taxonomy& taxonomy = DefaultColumnChangeTaxonomy());

struct PrefixLabels {
  std::vector<TurnSwitchLabel> turn_switch;
  ColumnChangeLabel column_change;
};

// Turn-switch labels for turns 1..t and the column-change label of the
// transition into turn t (1-based).
absl::StatusOr<PrefixLabels> LabelPrefix(const std::vector<SqlQuery>& queries,
                                         size_t t, const Schema& schema,
                                         const TaxonomyPair& taxonomies);

}  // namespace convsql

#endif  // CONVSQL_SCHEMA_DIFF_H_
