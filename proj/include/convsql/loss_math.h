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

// Reference numerics for the auxiliary objectives: the turn feature mixture,
// the per-type binary cross-entropy heads over turn and column vectors, the
// weighted total, and a central-difference gradient checker.

#ifndef CONVSQL_LOSS_MATH_H_
#define CONVSQL_LOSS_MATH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "convsql/schema_diff.h"
#include "convsql/turn_diff.h"

namespace convsql {

using Vector = std::vector<double>;

// Scalar affine map x -> w.x + b.
struct AffineHead {
  Vector weights;
  double bias = 0.0;
};

struct AuxHeadParams {
  // One head per turn-switch type over mixed features (4d inputs).
  std::vector<AffineHead> tsp_heads;
  // One head per column-change type over column vectors (d inputs).
  std::vector<AffineHead> csp_heads;
  double alpha = 0.5;
  double beta = 8.0;
};

// Zero-initialized heads of the default sizes for vectors of dimension d.
AuxHeadParams ZeroParams(size_t d);
// Checks head counts (17 / 11), dimensions and non-negative weights.
absl::Status ValidateParams(const AuxHeadParams& params, size_t d);

// [prev ; curr ; curr - prev ; prev * curr], 4d wide.
absl::StatusOr<Vector> FeatureMix(const Vector& prev, const Vector& curr);

// log(1 + e^z) - y z, evaluated without overflow.
double BceWithLogits(double logit, bool label);
double Sigmoid(double logit);

struct HeadGradients {
  std::vector<AffineHead> heads;  // same shapes as the heads
  std::vector<Vector> inputs;     // same shapes as the input vectors
};

struct LossValue {
  double loss = 0.0;
  HeadGradients gradients;
};

// Sum over turns i and types j of BCE(label_i[j], sigmoid(head_j(mix(t_{i-1},
// t_i)))) with t_0 = 0. Requires one label per turn.
absl::StatusOr<LossValue> TspLoss(const std::vector<Vector>& turns,
                                  const std::vector<TurnSwitchLabel>& labels,
                                  const std::vector<AffineHead>& heads);

// Sum over columns m and types j of BCE(label[m][j], sigmoid(head_j(c_m))).
absl::StatusOr<LossValue> CspLoss(const std::vector<Vector>& columns,
                                  const ColumnChangeLabel& labels,
                                  const std::vector<AffineHead>& heads);

struct LossBreakdown {
  double l_dec = 0.0;
  double l_tsp = 0.0;
  double l_csp = 0.0;
  double l_total = 0.0;
};

// l_total = l_dec + alpha * l_tsp + beta * l_csp.
absl::StatusOr<LossBreakdown> CombinedLoss(double l_dec, double l_tsp,
                                           double l_csp, double alpha,
                                           double beta);

// Relative error |a - n| / max(|a|, |n|, kGradCheckFloor).
inline constexpr double kGradCheckFloor = 1e-6;

// Default finite-difference step for GradCheck.
inline constexpr double kGradCheckStep = 3e-3;

// Largest relative error between `analytic` and five-point central
// differences of `f` at `x` over every coordinate.
double GradCheck(const std::function<double(const Vector&)>& f,
                 const Vector& x, const Vector& analytic, double epsilon);

struct LossCheckReport {
  size_t instances = 0;
  double tsp_max_rel_error = 0.0;
  double csp_max_rel_error = 0.0;
  // Largest |loss - count * ln 2| over zero-parameter instances.
  double zero_param_max_abs_error = 0.0;
};

// Random instances with d cycling over {2, 4, 8}, 1..4 turns and 0..6
// columns, labels and parameters drawn from `seed`.
LossCheckReport RunLossCheck(uint64_t seed, size_t instances, double epsilon);

}  // namespace convsql

#endif  // CONVSQL_LOSS_MATH_H_
