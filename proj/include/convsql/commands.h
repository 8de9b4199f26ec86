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

// Subcommands of the convsql tool. Each returns a process exit code and
// writes its report to `out`, diagnostics to `err`.

#ifndef CONVSQL_COMMANDS_H_
#define CONVSQL_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "convsql/evaluator.h"
#include "convsql/serializer.h"

namespace convsql {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
  std::string data_path;
  std::string tables_path;
  std::string out_path;
  std::string pred_path;
  std::string taxonomy_path;  // empty: built-in taxonomies
  SerializerConfig serializer;
  MatchPolicy policy = MatchPolicy::kOfficial;
  size_t workers = 1;
  uint64_t seed = 0;
  // "interaction:turn" to print witnesses for one prefix.
  std::string explain;
  // Instances drawn by loss-check.
  size_t loss_check_instances = 50;
};

// Maps a status onto the exit codes: I/O errors are 2, anything else 1.
int ExitCodeFor(const absl::Status& status);

// Runs fn(0..n-1) on `workers` threads; fn must only touch its own slot.
void ParallelFor(size_t n, size_t workers,
                 const std::function<void(size_t)>& fn);

int RunStats(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunLabel(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunExportTrain(const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int RunEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunValidateParse(const RunConfig& config, std::ostream& out,
                     std::ostream& err);
int RunLossCheck(const RunConfig& config, std::ostream& out,
                 std::ostream& err);

}  // namespace convsql

#endif  // CONVSQL_COMMANDS_H_
