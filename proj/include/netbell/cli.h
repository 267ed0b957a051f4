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

#ifndef NETBELL_CLI_H
#define NETBELL_CLI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "netbell/scenario.h"
#include "netbell/states.h"

namespace netbell {

/// Raised for bad flags, parameters or config files; maps to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string scenario = "chsh";
    std::size_t k = 2;
    std::size_t n = 0;  // (N, K, m) only; 0 means N = K + (number of links)
    std::size_t m = 0;  // (N, K, m) only; 0 means m = K
    int r_num = 1;
    int r_den = 3;
    std::string family = "first";
    /// Inter-Bob sources as "1-2,2-3" (1-indexed Bobs); empty chains Bob j to Bob j+1.
    std::string wiring;
    int inter_bit = 0;
    std::string state = "target";
    double q = 1;
    std::vector<double> angles;
    std::size_t rounds = 0;
    std::uint64_t seed = 1;
    double tolerance = 1e-6;
    std::size_t starts = 0;
    std::string out;
    std::string format = "json";
};

nlohmann::json to_json(const RunConfig &cfg);
/// Reads every key present in `j` over `base`; unknown keys are a usage error.
RunConfig run_config_from_json(const nlohmann::json &j, RunConfig base = {});

/// Builds and validates the inequality a config selects.
InequalityExpr build_scenario(const RunConfig &cfg);

/// State selectors: "target" (alias "bell"), "target-dense", "mixed", "smolin",
/// "rho1" / "rho2" (weight q from the config), and "mix(q,A,B)" where A and B name one
/// Bell state per Bell-pair source, e.g. "mix(0.5,phi+phi+,psi-psi-)".
QuantumState build_state(const std::string &selector, const InequalityExpr &ineq, double q = 1);

/// Angles from the config: empty means pi/4 everywhere, a single value is broadcast.
AngleAssignment resolve_angles(const RunConfig &cfg, const InequalityExpr &ineq);

struct CommandResult {
    nlohmann::json report;
    int exit_code = 0;
    std::string csv;
};

nlohmann::json cmd_list();
CommandResult cmd_certify(const RunConfig &cfg);
CommandResult cmd_evaluate(const RunConfig &cfg);
CommandResult cmd_optimize(const RunConfig &cfg);
CommandResult cmd_simulate(const RunConfig &cfg);

/// Thread count from NETBELL_THREADS (default 1).
std::size_t thread_count();

/// Parses argv, runs the subcommand and writes its output. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace netbell

#endif
