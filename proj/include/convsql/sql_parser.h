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

#ifndef CONVSQL_SQL_PARSER_H_
#define CONVSQL_SQL_PARSER_H_


#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "convsql/schema.h"
#include "convsql/sql_ast.h"

namespace convsql {

// Parses one query of the benchmark dialect and binds it to `schema`.
//
// Supported grammar (keywords are case-insensitive):
//
//   query     := block [ (INTERSECT | UNION | EXCEPT) query ] [;]
//   block     := SELECT [DISTINCT] item {, item} FROM from
//                [WHERE cond] [GROUP BY column {, column}] [HAVING cond]
//                [ORDER BY expr [ASC|DESC] {, expr [ASC|DESC]}] [LIMIT int]
//   item      := agg ( [DISTINCT] expr ) | expr
//   from      := table [[AS] alias] { (JOIN | ,) table [[AS] alias]
//                [ON pred {AND pred}] }
//   cond      := conj {OR conj};  conj := atom {AND atom}
//   atom      := ( cond ) | expr [NOT] op operand
//   op        := = | != | <> | < | > | <= | >= | LIKE | IN | BETWEEN x AND y
//   operand   := string | number | ( query ) | expr
//   expr      := column | agg ( [DISTINCT] column ) | expr (+|-|*|/) expr
//
// Rejected with kUnimplemented: subqueries in FROM, output aliases
// (SELECT x AS y), IS [NOT] NULL, EXISTS, NOT BETWEEN, literal IN lists,
// OUTER/LEFT joins, literals inside arithmetic, and aggregates over
// arithmetic outside the select list.
//
// Syntax errors are kInvalidArgument and carry the byte offset; unknown
// tables and columns are kNotFound.
absl::StatusOr<SqlQuery> ParseSql(absl::string_view text, const Schema& schema);

}  // namespace convsql

#endif  // CONVSQL_SQL_PARSER_H_
