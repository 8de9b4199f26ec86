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

#ifndef CONVSQL_IO_H_
#define CONVSQL_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"

namespace convsql {

// File failures are reported as kNotFound (unreadable) or kPermissionDenied
// (unwritable); the CLI maps both to its I/O exit code.
absl::StatusOr<std::string> ReadFileToString(const std::string& path);
absl::Status WriteStringToFile(const std::string& path,
                               const std::string& contents);

// Malformed JSON is a kInvalidArgument error naming the file and offset.
absl::StatusOr<nlohmann::json> ReadJsonFile(const std::string& path);

bool IsIoError(const absl::Status& status);

}  // namespace convsql

#endif  // CONVSQL_IO_H_
