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

#ifndef NETBELL_SAMPLER_H
#define NETBELL_SAMPLER_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netbell/scenario.h"
#include "netbell/states.h"

namespace netbell {

/// SplitMix64 used as a counter-based generator: draw(c) is the c-th output of the
/// SplitMix64 stream seeded with `seed`, so any block of draws can be produced independently.
class CounterRng {
   public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t draw(std::uint64_t counter) const;
    /// Uniform in [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const;
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t counter, std::uint64_t n) const;

   private:
    std::uint64_t seed_;
};

/// Measurement direction on the Bloch sphere: the observable is x X + y Y + z Z.
struct BlochAxis {
    double x = 0;
    double y = 0;
    double z = 1;
};

/// Joint outcome distribution of measuring `axes[i]` on `qubits[i]`. Entry o has bit i set
/// when qubit i gave -1.
std::vector<double> outcome_distribution(const StabilizerGroup &state, const std::vector<std::size_t> &qubits,
                                         const std::vector<BlochAxis> &axes);

/// True when every generator-group element factors over the sources of the topology.
bool is_product_over_sources(const StabilizerGroup &state, const NetworkTopology &topology);

/// One round, expanded for inspection.
struct RoundRecord {
    std::size_t round;
    std::size_t family;
    std::vector<std::string> inputs;         // per party
    std::vector<int> party_outcomes;         // per party; joint parties report the product
    std::vector<int> qubit_outcomes;         // per qubit
};

/// Struct-of-arrays storage of simulated rounds.
class RoundLog {
   public:
    RoundLog() = default;
    RoundLog(std::size_t n_parties, std::size_t n_qubits, std::vector<std::vector<std::vector<std::string>>> labels);

    std::size_t size() const { return families_.size(); }
    std::size_t n_parties() const { return n_parties_; }
    std::size_t family(std::size_t round) const { return families_[round]; }
    std::size_t input_index(std::size_t round, std::size_t party) const { return inputs_[round * n_parties_ + party]; }
    const std::string &input(std::size_t round, std::size_t party) const;
    int qubit_outcome(std::size_t round, std::size_t qubit) const;
    int party_outcome(std::size_t round, std::size_t party, const NetworkTopology &topology) const;
    std::uint64_t outcome_mask(std::size_t round) const { return outcomes_[round]; }
    std::uint64_t seed() const { return seed_; }
    void set_seed(std::uint64_t seed) { seed_ = seed; }
    RoundRecord record(std::size_t round, const NetworkTopology &topology) const;
    /// labels[family][party] lists the input labels; inputs are stored as indices into it.
    const std::vector<std::vector<std::vector<std::string>>> &labels() const { return labels_; }

    void resize(std::size_t rounds);
    void set(std::size_t round, std::uint8_t family, const std::uint16_t *inputs, std::uint64_t outcomes);

    friend bool operator==(const RoundLog &, const RoundLog &) = default;

   private:
    std::size_t n_parties_ = 0;
    std::size_t n_qubits_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::vector<std::vector<std::string>>> labels_;
    std::vector<std::uint8_t> families_;
    std::vector<std::uint16_t> inputs_;
    std::vector<std::uint64_t> outcomes_;
};

struct SimulationOptions {
    /// Rounds per setting family; combined inequalities simulate each family in turn.
    std::size_t rounds = 0;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::size_t block_size = 1 << 16;
};

/// Simulates Bell-test rounds with uniform inputs. Mixtures draw a component per round;
/// every component must be a product over the sources.
RoundLog simulate_rounds(const InequalityExpr &ineq, const QuantumState &state, const AngleAssignment &angles,
                         const SimulationOptions &options);

struct CorrelatorEstimate {
    std::string label;
    double estimate = 0;
    double standard_error = 0;
};

struct EstimateReport {
    std::vector<CorrelatorEstimate> correlators;
    double value = 0;
    double standard_error = 0;
    std::size_t rounds = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

/// Estimates every correlator from its multilinear expansion over input cells, with
/// per-cell binomial errors propagated by the delta method.
EstimateReport estimate(const RoundLog &log, const InequalityExpr &ineq);

struct MarginalEstimate {
    std::size_t party;
    std::size_t family;
    std::string input;
    double mean;
    double standard_error;
    std::size_t count;
};

/// Mean outcome of every (party, family, input).
std::vector<MarginalEstimate> marginals(const RoundLog &log, const InequalityExpr &ineq);

/// Writes "round,party,input,outcome" rows; combined inequalities prefix inputs with the family digit.
void write_csv(std::ostream &out, const RoundLog &log, const InequalityExpr &ineq);

}  // namespace netbell

#endif
