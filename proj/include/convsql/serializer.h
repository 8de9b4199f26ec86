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

// Encoder input construction and line-delimited training record files.
//
// A record for prefix t of a conversation is the token sequence
//
//   <s> u_1 <s> u_2 ... <s> u_t </s> item_1 </s> item_2 ... </s> item_M
//
// where item_m is "table . column" ("*" for the wildcard), together with the
// marker positions and both label families of the prefix.

#ifndef CONVSQL_SERIALIZER_H_
#define CONVSQL_SERIALIZER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "convsql/dataset.h"
#include "convsql/schema.h"
#include "convsql/schema_diff.h"
#include "convsql/taxonomy.h"
#include "convsql/turn_diff.h"
#include "json.hpp"

namespace convsql {

struct SerializerConfig {
  std::string turn_separator = "<s>";
  std::string column_separator = "</s>";
  // Records longer than this many tokens are rejected; 0 disables the limit.
  size_t max_length = 0;
};

struct TrainingRecord {
  std::string conversation_id;
  std::string db_id;
  size_t prefix_length = 0;
  std::vector<std::string> tokens;
  std::vector<int> turn_marker_positions;
  std::vector<int> column_marker_positions;
  std::vector<TurnSwitchLabel> tsp_labels;
  ColumnChangeLabel csp_labels;
  std::string gold_sql_text;

  bool operator==(const TrainingRecord&) const = default;
};

// Token text of schema item `column_id`.
std::vector<std::string> SchemaItemTokens(const Schema& schema, int column_id);

// Builds the record of prefix t (1-based). Over-length records fail with
// kOutOfRange; empty utterances with kInvalidArgument.
absl::StatusOr<TrainingRecord> BuildRecord(const Conversation& conversation,
                                           size_t t, const Schema& schema,
                                           const TaxonomyPair& taxonomies,
                                           const SerializerConfig& config);

// Checks the marker invariants of `record` against its own token sequence.
absl::Status ValidateRecord(const TrainingRecord& record,
                            const SerializerConfig& config);

struct RecordFileHeader {
  std::vector<std::string> turn_switch_types;
  std::vector<std::string> column_change_types;
  std::string turn_separator;
  std::string column_separator;

  bool operator==(const RecordFileHeader&) const = default;
};

RecordFileHeader MakeHeader(const TaxonomyPair& taxonomies,
                            const SerializerConfig& config);

nlohmann::json HeaderToJson(const RecordFileHeader& header);
absl::StatusOr<RecordFileHeader> HeaderFromJson(const nlohmann::json& json);
nlohmann::json RecordToJson(const TrainingRecord& record);
absl::StatusOr<TrainingRecord> RecordFromJson(const nlohmann::json& json);

// Writes the header line followed by one line per record; returns the number
// of records written.
absl::StatusOr<size_t> ExportRecords(const std::vector<TrainingRecord>& records,
                                     const RecordFileHeader& header,
                                     const std::string& path);

struct RecordFile {
  RecordFileHeader header;
  std::vector<TrainingRecord> records;
};

absl::StatusOr<RecordFile> ImportRecords(const std::string& path);

}  // namespace convsql

#endif  // CONVSQL_SERIALIZER_H_
