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

// Question match (QM) and interaction match (IM) scoring.
//
// Matching follows the benchmark's component exact-set-match: both queries
// are lowered to the benchmark's structured form, foreign-key columns of the
// FROM tables are collapsed onto a representative, DISTINCT is dropped and,
// under the official policy, condition values are erased. SELECT, WHERE,
// GROUP BY, HAVING, ORDER BY, connectors, set operations and keyword sets must
// then agree as multisets, and the table sets must be equal.

#ifndef CONVSQL_EVALUATOR_H_
#define CONVSQL_EVALUATOR_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "convsql/dataset.h"
#include "convsql/schema.h"
#include "convsql/spider_sql.h"
#include "convsql/sql_ast.h"
#include "json.hpp"

namespace convsql {

enum class MatchPolicy { kOfficial, kValueSensitive };

absl::string_view MatchPolicyName(MatchPolicy policy);
absl::StatusOr<MatchPolicy> ParseMatchPolicy(absl::string_view name);

// Foreign-key representative of every column id (identity for columns outside
// any key group).
std::vector<int> ForeignKeyRepresentatives(const Schema& schema);

// Both queries must be bound to `schema`. Queries outside the structured
// form (nested arithmetic, subqueries as value units) fail with
// kUnimplemented.
absl::StatusOr<bool> ExactSetMatch(const SqlQuery& pred, const SqlQuery& gold,
                                   const Schema& schema,
                                   MatchPolicy policy = MatchPolicy::kOfficial);

// Same comparison on already-lowered queries.
bool StructuredExactMatch(const spider::Sql& pred, const spider::Sql& gold,
                          const Schema& schema, MatchPolicy policy);

inline constexpr int kMaxTurnBucket = 4;

struct EvalReport {
  double qm = 0.0;
  double im = 0.0;
  // Keyed by 1-based turn index; turns past kMaxTurnBucket share the last key.
  std::map<int, double> per_turn_qm;
  std::map<int, size_t> per_turn_questions;
  std::map<int, size_t> per_turn_matched;
  size_t questions = 0;
  size_t matched_questions = 0;
  size_t interactions = 0;
  size_t matched_interactions = 0;
  // Predictions that failed to parse count as mismatches.
  size_t pred_parse_failures = 0;
  // Gold queries outside the supported grammar; their turns count as
  // mismatches.
  size_t gold_parse_failures = 0;
};

// Predictions: one SQL per line, interactions separated by blank lines.
std::vector<std::vector<std::string>> ParsePredictionText(
    absl::string_view text);
absl::StatusOr<std::vector<std::vector<std::string>>> LoadPredictions(
    const std::string& path);

// Fails with kInvalidArgument naming the misaligned interaction ids when the
// interaction or turn counts differ.
absl::StatusOr<EvalReport> Evaluate(
    const std::vector<std::vector<std::string>>& predictions,
    const std::vector<Interaction>& gold, const SchemaMap& schemas,
    MatchPolicy policy = MatchPolicy::kOfficial);

std::string FormatReport(const EvalReport& report);
nlohmann::json ReportToJson(const EvalReport& report);

}  // namespace convsql

#endif  // CONVSQL_EVALUATOR_H_
