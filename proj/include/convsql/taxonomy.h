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

// Edit-operation taxonomies for the two auxiliary label families.
//
// The diff engines report primitive edit events (clause, kind, aspect). A
// taxonomy is an ordered list of descriptors; bit j of a label is set iff at
// least one event matches descriptor j.

#ifndef CONVSQL_TAXONOMY_H_
#define CONVSQL_TAXONOMY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"

namespace convsql {

inline constexpr size_t kNumTurnSwitchTypes = 17;
inline constexpr size_t kNumColumnChangeTypes = 11;

enum class EditKind { kAdd, kRemove, kChange };
enum class Clause {
  kSelect, kWhere, kGroupBy, kHaving, kOrderBy, kLimit, kFrom, kJoin
};

absl::string_view EditKindName(EditKind kind);
absl::string_view ClauseName(Clause clause);
absl::StatusOr<EditKind> ParseEditKind(absl::string_view name);
absl::StatusOr<Clause> ParseClause(absl::string_view name);

// One observed edit between two queries. `key` identifies the edited element
// in schema-free canonical form; `before` / `after` are display fragments.
struct EditEvent {
  Clause clause = Clause::kSelect;
  EditKind kind = EditKind::kAdd;
  std::string aspect;
  std::string key;
  std::string before;
  std::string after;

  bool operator==(const EditEvent&) const = default;
};

struct OperationDescriptor {
  std::string name;
  Clause clause = Clause::kSelect;
  // Primary kind; at the first turn only descriptors of kind add may fire.
  EditKind kind = EditKind::kAdd;
  // Event kinds this descriptor accepts (defaults to {kind}).
  std::vector<EditKind> accepts;
  // Restricts matching to events with this aspect when non-empty.
  std::string aspect;

  bool Matches(const EditEvent& event) const;
  bool operator==(const OperationDescriptor&) const = default;
};

class Taxonomy {
 public:
  // Validates unique non-empty names and the expected size.
  static absl::StatusOr<Taxonomy> Create(
      std::vector<OperationDescriptor> descriptors, size_t expected_size);
  // Reads a list of {"name", "clause", "kind"[, "accepts"][, "aspect"]}.
  static absl::StatusOr<Taxonomy> FromJson(const nlohmann::json& list,
                                           size_t expected_size);

  size_t size() const { return descriptors_.size(); }
  const OperationDescriptor& operator[](size_t i) const {
    return descriptors_[i];
  }
  const std::vector<OperationDescriptor>& descriptors() const {
    return descriptors_;
  }
  std::vector<std::string> names() const;
  // Index of the named descriptor, or size() if absent.
  size_t IndexOf(absl::string_view name) const;
  nlohmann::json ToJson() const;

  bool operator==(const Taxonomy&) const = default;

 private:
  std::vector<OperationDescriptor> descriptors_;
};

// The 17 turn-switch operation types, in label order.
const Taxonomy& DefaultTurnSwitchTaxonomy();
// The 11 per-column usage-change types, in label order.
const Taxonomy& DefaultColumnChangeTaxonomy();

struct TaxonomyPair {
  Taxonomy turn_switch;
  Taxonomy column_change;
};

// Loads a configuration file with "turn_switch" and/or "column_change" lists;
// a missing list keeps the default.
absl::StatusOr<TaxonomyPair> LoadTaxonomies(const std::string& path);

}  // namespace convsql

#endif  // CONVSQL_TAXONOMY_H_
