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

#ifndef NETBELL_NETWORK_H
#define NETBELL_NETWORK_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "netbell/pauli.h"

namespace netbell {

enum class SourceKind { BellPair, GHZ3 };

std::string source_kind_name(SourceKind kind);

/// One source: the qubits it emits, and the party receiving each of them.
struct SourceSpec {
    std::string id;
    SourceKind kind;
    std::vector<std::size_t> qubits;
    std::vector<std::size_t> recipients;  // party index per emitted qubit

    friend bool operator==(const SourceSpec &, const SourceSpec &) = default;
};

struct Party {
    std::string name;
    std::vector<std::size_t> qubits;

    /// Parties holding one qubit measure a single-qubit observable; the others measure
    /// joint Pauli products on everything they hold.
    bool is_joint() const { return qubits.size() > 1; }

    friend bool operator==(const Party &, const Party &) = default;
};

/// Which source emits which qubit to which party. Qubits are 0-indexed internally.
struct NetworkTopology {
    std::size_t n_qubits = 0;
    std::vector<SourceSpec> sources;
    std::vector<Party> parties;

    std::size_t party_index(const std::string &name) const;
    /// Index of the source that emits `qubit`.
    std::size_t source_of(std::size_t qubit) const;
    /// Index of the party that owns `qubit`.
    std::size_t owner_of(std::size_t qubit) const;

    friend bool operator==(const NetworkTopology &, const NetworkTopology &) = default;
};

struct Diagnostic {
    std::optional<std::size_t> qubit;
    std::string message;
};

/// Checks that every qubit 0..n-1 is emitted by exactly one source and owned by exactly
/// one party, and that source recipients agree with party ownership. Returns the first
/// violation, or nullopt when the topology is well formed.
std::optional<Diagnostic> validate(const NetworkTopology &topology);

NetworkTopology single_pair();
NetworkTopology two_source();
NetworkTopology star(std::size_t k);

/// Inter-Bob source: emits one qubit to each of two distinct Bobs (0-indexed Bob numbers).
struct InterBobLink {
    std::size_t first_bob;
    std::size_t second_bob;
};

/// An (N, K, m) network. Source i < K sends qubit 2i to Alice_i and qubit 2i+1 to
/// Bob `alice_bob[i]` (identity by default); sources K..N-1 follow `links` in order.
struct NkmSpec {
    std::size_t n_sources;
    std::size_t n_alices;
    std::size_t n_bobs;
    std::vector<InterBobLink> links;
    std::vector<std::size_t> alice_bob;
};

NetworkTopology nkm(const NkmSpec &spec);
/// The (K, K, K) network with every Bob identified: a star network with the (N, K, m) qubit layout.
NetworkTopology nkm_collapsed(std::size_t k);

NetworkTopology ghz_case_a();
NetworkTopology ghz_case_b();

nlohmann::json to_json(const NetworkTopology &topology);
NetworkTopology topology_from_json(const nlohmann::json &j);

}  // namespace netbell

#endif
