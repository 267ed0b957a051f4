// Copyright 2026 The netbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETBELL_QUANTUM_H
#define NETBELL_QUANTUM_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netbell/scenario.h"
#include "netbell/states.h"

namespace netbell {

/// An inequality bound to a state: the expectation of every segmented operator is computed
/// once, so evaluating at new angles only recomputes the trigonometric coefficients.
class Evaluator {
   public:
    Evaluator(const InequalityExpr &ineq, const QuantumState &state);

    std::size_t n_angles() const { return n_angles_; }
    /// <I_k> for every term.
    std::vector<double> correlators(const AngleAssignment &angles) const;
    double value(const AngleAssignment &angles) const;
    std::vector<double> gradient(const AngleAssignment &angles) const;
    /// Expectation of the segmented Pauli operator of each term.
    const std::vector<double> &pauli_expectations() const { return expectations_; }

   private:
    const InequalityExpr &ineq_;
    std::size_t n_angles_;
    std::vector<SegmentedOperator> ops_;
    std::vector<double> expectations_;
};

double evaluate(const InequalityExpr &ineq, const QuantumState &state, const AngleAssignment &angles);
std::vector<double> gradient(const InequalityExpr &ineq, const QuantumState &state, const AngleAssignment &angles);

struct OptimizeOptions {
    std::size_t grid_points = 64;
    double gradient_tolerance = 1e-10;
    std::size_t max_sweeps = 200;
    /// Extra Nelder-Mead starts, each polished by coordinate descent; 0 disables them.
    std::size_t starts = 0;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
};

struct OptimizeResult {
    AngleAssignment angles;
    double value = 0;
    double gradient_norm = 0;
    std::size_t sweeps = 0;
};

OptimizeResult optimize_angles(const InequalityExpr &ineq, const QuantumState &state, const OptimizeOptions &options = {});

struct ClaimCheck {
    OptimizeResult optimum;
    double claimed = 0;
    double difference = 0;
    bool pass = false;
};

ClaimCheck claimed_max_check(const InequalityExpr &ineq, const QuantumState &state, double tolerance = 1e-6,
                             const OptimizeOptions &options = {});

/// cos^t(theta) + sin^t(theta).
double f_theta(double t, double theta);
/// 2^(1 - t/2), the maximum of f_theta over (0, pi/2) for 0 < t < 2.
double f_theta_max(double t);
struct GridMax {
    double value;
    double argmax;
};
GridMax f_theta_grid_max(double t, std::size_t points = 1 << 16);

struct MahlerResult {
    double lhs;
    double rhs;
    bool holds;
    bool equality_case;
};

/// prod(alpha)^(1/K) + prod(beta)^(1/K) <= prod(alpha + beta)^(1/K) for nonnegative entries.
/// equality_case is set when alpha and beta are proportional.
MahlerResult mahler_check(const std::vector<double> &alpha, const std::vector<double> &beta);

}  // namespace netbell

#endif
