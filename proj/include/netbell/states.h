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

#ifndef NETBELL_STATES_H
#define NETBELL_STATES_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "netbell/pauli.h"

namespace netbell {

/// The state stabilized by a set of independent, commuting, Hermitian Pauli generators.
///
/// With k = n generators this is a pure stabilizer state. With k < n it is the maximally
/// mixed state on the stabilized code space, which is how a Bell pair embedded in a larger
/// register (or the fully mixed state, k = 0) is represented.
class StabilizerGroup {
   public:
    StabilizerGroup(std::size_t n_qubits, std::vector<PauliString> generators);

    std::size_t n_qubits() const { return n_; }
    const std::vector<PauliString> &generators() const { return generators_; }
    bool is_pure() const { return generators_.size() == n_; }

    /// +1 if p is in the group, -1 if -p is, 0 otherwise. Requires Hermitian p.
    int expectation(const PauliString &p) const;

    /// Tensor product with a group acting on a disjoint set of qubits of the same register.
    StabilizerGroup combined_with(const StabilizerGroup &other) const;

   private:
    struct Row {
        std::uint64_t x;
        std::uint64_t z;
        std::uint64_t combination;
    };

    std::size_t n_;
    std::vector<PauliString> generators_;
    // Reduced row echelon form of the generator masks; pivot column c < 64 is an x bit,
    // c >= 64 the z bit of qubit c - 64.
    std::vector<Row> echelon_;
    std::vector<int> pivots_;
};

struct MixtureComponent {
    double weight;
    StabilizerGroup group;
};

/// Convex combination of stabilizer states.
class StabilizerMixture {
   public:
    explicit StabilizerMixture(std::vector<MixtureComponent> components);

    std::size_t n_qubits() const { return components_.front().group.n_qubits(); }
    const std::vector<MixtureComponent> &components() const { return components_; }

    double expectation(const PauliString &p) const;

   private:
    std::vector<MixtureComponent> components_;
};

/// A state vector over 2^n amplitudes. Basis index bit q is the Z value of qubit q.
class DenseState {
   public:
    DenseState(std::size_t n_qubits, std::vector<std::complex<double>> amplitudes);

    std::size_t n_qubits() const { return n_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amplitudes_; }

    /// Real part of <psi|p|psi>. Requires Hermitian p.
    double expectation(const PauliString &p) const;

   private:
    std::size_t n_;
    std::vector<std::complex<double>> amplitudes_;
};

/// p|psi> on a raw amplitude vector.
std::vector<std::complex<double>> apply_pauli(const PauliString &p, const std::vector<std::complex<double>> &psi);

using QuantumState = std::variant<StabilizerGroup, StabilizerMixture, DenseState>;

std::size_t n_qubits(const QuantumState &state);
double expectation(const QuantumState &state, const PauliString &p);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string bell_kind_name(BellKind kind);
BellKind bell_kind_from_name(const std::string &name);

/// Bell state on qubits (i, j) of an n-qubit register. PhiPlus is stabilized by Z_iZ_j, X_iX_j.
StabilizerGroup bell_state(BellKind kind, std::size_t i, std::size_t j, std::size_t n);
StabilizerGroup bell_pair(std::size_t i, std::size_t j, std::size_t n);

/// GHZ state generated by X_iZ_jZ_k, Z_iX_jZ_k, Z_iZ_jX_k.
StabilizerGroup ghz3(std::size_t i, std::size_t j, std::size_t k, std::size_t n);

/// Four-qubit Smolin state: uniform mixture of [B]_{ij}[B]_{kl} over the four Bell states B.
StabilizerMixture smolin(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t n = 4);

/// q*a + (1-q)*b.
StabilizerMixture mix(double q, const StabilizerGroup &a, const StabilizerGroup &b);

StabilizerGroup maximally_mixed(std::size_t n);

/// Unit vector stabilized by every generator of a pure group (n <= 14).
DenseState to_dense(const StabilizerGroup &group);

}  // namespace netbell

#endif
