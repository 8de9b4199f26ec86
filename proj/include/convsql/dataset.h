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

// Conversational dataset files: a list of interactions, each with a
// `database_id` and an `interaction` list of turns carrying `utterance`,
// `query` and optionally `utterance_toks` and a structured `sql`. Other
// fields (such as `final`) are ignored.

#ifndef CONVSQL_DATASET_H_
#define CONVSQL_DATASET_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "convsql/schema.h"
#include "convsql/sql_ast.h"
#include "json.hpp"

namespace convsql {

struct RawTurn {
  std::string utterance;
  std::vector<std::string> tokens;
  std::string query;
  // The dataset's own parse; only used for cross-checking.
  std::optional<nlohmann::json> structured_sql;
};

struct Interaction {
  std::string id;  // position in the file
  std::string db_id;
  std::vector<RawTurn> turns;
};

absl::StatusOr<std::vector<Interaction>> ParseDataset(
    const nlohmann::json& entries);
// An empty file is an empty dataset.
absl::StatusOr<std::vector<Interaction>> LoadDataset(const std::string& path);

struct ConversationTurn {
  std::string utterance;
  std::vector<std::string> tokens;
  std::string gold_sql_text;
  SqlQuery gold_sql;
};

struct Conversation {
  std::string id;
  std::string db_id;
  std::vector<ConversationTurn> turns;

  std::vector<SqlQuery> queries() const;
};

struct BoundInteraction {
  // Turns up to (excluding) the first one whose SQL fails to parse.
  Conversation conversation;
  // Parse outcome of every turn of the interaction.
  std::vector<absl::Status> turn_status;
};

// Parses every turn against its schema. Fails only when the database is
// unknown.
absl::StatusOr<BoundInteraction> BindInteraction(const Interaction& interaction,
                                                 const SchemaMap& schemas);

// Whitespace tokenization used when a turn carries no token list.
std::vector<std::string> SplitTokens(const std::string& text);

}  // namespace convsql

#endif  // CONVSQL_DATASET_H_
