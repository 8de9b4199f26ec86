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

#ifndef CONVSQL_STATUS_MACROS_H_
#define CONVSQL_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define CONVSQL_CONCAT_IMPL(x, y) x##y
#define CONVSQL_CONCAT(x, y) CONVSQL_CONCAT_IMPL(x, y)

#define CONVSQL_RETURN_IF_ERROR(expr)          \
  do {                                         \
    const absl::Status _status = (expr);       \
    if (!_status.ok()) return _status;         \
  } while (0)

#define CONVSQL_ASSIGN_OR_RETURN_IMPL(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                  \
  if (!tmp.ok()) return tmp.status();                  \
  lhs = std::move(tmp).value()

#define CONVSQL_ASSIGN_OR_RETURN(lhs, rexpr) \
  CONVSQL_ASSIGN_OR_RETURN_IMPL(             \
      CONVSQL_CONCAT(_statusor_, __LINE__), lhs, rexpr)

#endif  // CONVSQL_STATUS_MACROS_H_
