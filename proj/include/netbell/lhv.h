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

#ifndef NETBELL_LHV_H
#define NETBELL_LHV_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netbell/scenario.h"

namespace netbell {

/// Largest number of deterministic strategies any enumeration will visit.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 25;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One hidden-variable value: a fixed +1/-1 output for every (party, input) pair.
struct DeterministicStrategy {
    /// outputs[party] maps input_key(family, input) to +1 or -1.
    std::vector<std::map<std::string, int>> outputs;

    static std::string input_key(std::size_t family, const std::string &input);
    int output(std::size_t party, std::size_t family, const std::string &input) const;
};

/// <I_label> per term of an inequality, in term order.
using CorrelatorVector = std::vector<double>;
using VertexSet = std::set<CorrelatorVector>;

CorrelatorVector evaluate_strategy(const DeterministicStrategy &s, const InequalityExpr &ineq);

/// Every deterministic strategy over every (party, input) pair the inequality uses.
std::vector<DeterministicStrategy> all_strategies(const InequalityExpr &ineq);
/// 4^(single-qubit parties) * 2^(joint inputs), summed over the per-family factors as a product.
double raw_strategy_count(const InequalityExpr &ineq);
/// Strategies visited by the reduced enumeration (joint inputs read by a single correlator
/// are not enumerated: both signs of that correlator are reachable).
double reduced_strategy_count(const InequalityExpr &ineq);

/// The set of deterministic correlator vectors, via the reduced enumeration.
VertexSet enumerate_vertices(const InequalityExpr &ineq);
/// The same set by brute force over all_strategies.
VertexSet enumerate_vertices_raw(const InequalityExpr &ineq);
/// Distinct vectors of full product correlators <a_x ... b_y>, one coordinate per
/// (single-party inputs, joint inputs) cell read by the inequality.
VertexSet enumerate_product_vertices(const InequalityExpr &ineq);

/// Vertex set restricted to the terms of one family.
VertexSet family_vertices(const InequalityExpr &ineq, std::size_t family);
/// True when the vertices are exactly the signed unit vectors, optionally with the origin.
bool is_cross_polytope(const VertexSet &vertices, std::size_t dimension);

/// scale * max over vertices of sum coefficient * term_power(v, 1). Requires r = 1.
double linear_lhv_max(const InequalityExpr &ineq);

struct NonlinearMax {
    double analytic = 0;  // meaningful only when cross_polytope
    double numeric = 0;
    bool cross_polytope = false;
    std::vector<std::string> warnings;

    double value() const { return cross_polytope ? analytic : numeric; }
};

/// Maximum of the inequality over the convex hull of the vertices. Requires r < 1.
NonlinearMax nonlinear_lhv_max(const InequalityExpr &ineq, std::size_t restarts = 100, std::uint64_t seed = 1);

/// Maximizes sum_i p_i^r over the probability simplex of dimension m by projected gradient
/// ascent from random starting points.
double simplex_power_max(std::size_t m, double r, std::size_t restarts, std::uint64_t seed);

/// Checks that every single-party strategy leaves exactly one correlator per family at
/// |value| = 1 and the rest at 0. Returns a counterexample otherwise.
std::optional<DeterministicStrategy> normalization_check(const InequalityExpr &ineq);

struct Certification {
    double bound = 0;
    std::string method;
    double raw_strategies = 0;
    double reduced_strategies = 0;
    std::size_t vertex_count = 0;
    bool cross_polytope = false;
    std::optional<double> enumerated_bound;
    std::optional<double> numeric_bound;
    bool normalization_ok = false;
    std::vector<std::string> warnings;
    /// "PASS", "FAIL", or "N/A" when the stated bound refers to a restricted classical model.
    std::string verdict;
};

Certification certify(const InequalityExpr &ineq, double tolerance = 1e-6);

}  // namespace netbell

#endif
