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

// Turn-switch labels: which edit-operation types turn i applies to the SQL of
// turn i-1.
//
// Clauses are compared as multisets. Elements are grouped by a key (the
// expression with aggregates and DISTINCT stripped); a group that grows is an
// add, one that shrinks is a remove, and a group of equal size whose members
// differ is a change. Literal values take part in the comparison.

#ifndef CONVSQL_TURN_DIFF_H_
#define CONVSQL_TURN_DIFF_H_

#include <cstddef>
#include <vector>

#include "absl/status/statusor.h"
#include "convsql/schema.h"
#include "convsql/sql_ast.h"
#include "convsql/taxonomy.h"

namespace convsql {

struct TurnSwitchLabel {
  std::vector<bool> bits;

  bool any() const;
  bool operator==(const TurnSwitchLabel&) const = default;
};

// All bits fired by one descriptor, with the events that fired it.
struct LabelWitness {
  size_t bit = 0;
  std::vector<EditEvent> events;
};

// Sets bit j iff some event matches descriptor j.
std::vector<bool> MatchEvents(const std::vector<EditEvent>& events,
                              const Taxonomy& taxonomy);

// Primitive edit events from `prev` (nullptr for the state before the first
// turn) to `curr`. Both are normalized first. Witness fragments are rendered
// with `schema` when given, otherwise as canonical keys.
absl::StatusOr<std::vector<EditEvent>> TurnEditEvents(
    const SqlQuery* prev, const SqlQuery& curr,
    const Schema* schema = nullptr);

// At the first turn (prev == nullptr) only descriptors of kind add may fire.
absl::StatusOr<TurnSwitchLabel> DiffTurn(
    const SqlQuery* prev, const SqlQuery& curr,
    const Taxonomy& taxonomy = DefaultTurnSwitchTaxonomy());

// One entry per set bit of DiffTurn, in bit order.
absl::StatusOr<std::vector<LabelWitness>> ExplainTurn(
    const SqlQuery* prev, const SqlQuery& curr, const Taxonomy& taxonomy,
    const Schema* schema = nullptr);

// Element i is DiffTurn(queries[i-1] or nullptr, queries[i]).
absl::StatusOr<std::vector<TurnSwitchLabel>> LabelConversation(
    const std::vector<SqlQuery>& queries,
    const Taxonomy& taxonomy = DefaultTurnSwitchTaxonomy());

}  // namespace convsql

#endif  // CONVSQL_TURN_DIFF_H_
