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

#include "netbell/network.h"

#include <algorithm>
#include <stdexcept>

namespace netbell {

namespace {

std::size_t add_party(NetworkTopology &t, std::string name) {
    t.parties.push_back({std::move(name), {}});
    return t.parties.size() - 1;
}

/// Appends a source emitting fresh consecutive qubits to the given parties.
void add_source(NetworkTopology &t, std::string id, SourceKind kind, const std::vector<std::size_t> &recipients) {
    SourceSpec s{std::move(id), kind, {}, recipients};
    for (std::size_t party : recipients) {
        std::size_t q = t.n_qubits++;
        s.qubits.push_back(q);
        t.parties[party].qubits.push_back(q);
    }
    t.sources.push_back(std::move(s));
}

void sort_party_qubits(NetworkTopology &t) {
    for (auto &p : t.parties) {
        std::sort(p.qubits.begin(), p.qubits.end());
    }
}

}  // namespace

std::string source_kind_name(SourceKind kind) {
    return kind == SourceKind::BellPair ? "BellPair" : "GHZ3";
}

std::size_t NetworkTopology::party_index(const std::string &name) const {
    for (std::size_t i = 0; i < parties.size(); i++) {
        if (parties[i].name == name) {
            return i;
        }
    }
    throw std::invalid_argument("no party named '" + name + "'");
}

std::size_t NetworkTopology::source_of(std::size_t qubit) const {
    for (std::size_t s = 0; s < sources.size(); s++) {
        if (std::find(sources[s].qubits.begin(), sources[s].qubits.end(), qubit) != sources[s].qubits.end()) {
            return s;
        }
    }
    throw std::out_of_range("qubit " + std::to_string(qubit) + " has no source");
}

std::size_t NetworkTopology::owner_of(std::size_t qubit) const {
    for (std::size_t p = 0; p < parties.size(); p++) {
        if (std::find(parties[p].qubits.begin(), parties[p].qubits.end(), qubit) != parties[p].qubits.end()) {
            return p;
        }
    }
    throw std::out_of_range("qubit " + std::to_string(qubit) + " has no owner");
}

std::optional<Diagnostic> validate(const NetworkTopology &t) {
    std::vector<int> emitted(t.n_qubits, 0);
    std::vector<int> owned(t.n_qubits, 0);
    std::vector<std::size_t> owner(t.n_qubits, 0);
    for (std::size_t p = 0; p < t.parties.size(); p++) {
        for (std::size_t q : t.parties[p].qubits) {
            if (q >= t.n_qubits) {
                return Diagnostic{q, "party " + t.parties[p].name + " owns qubit " + std::to_string(q) +
                                         " outside 0.." + std::to_string(t.n_qubits - 1)};
            }
            if (++owned[q] > 1) {
                return Diagnostic{q, "qubit " + std::to_string(q) + " is owned by more than one party"};
            }
            owner[q] = p;
        }
    }
    for (const SourceSpec &s : t.sources) {
        std::size_t expected = s.kind == SourceKind::BellPair ? 2 : 3;
        if (s.qubits.size() != expected) {
            return Diagnostic{std::nullopt, "source " + s.id + " of kind " + source_kind_name(s.kind) + " emits " +
                                                std::to_string(s.qubits.size()) + " qubits, expected " +
                                                std::to_string(expected)};
        }
        if (s.recipients.size() != s.qubits.size()) {
            return Diagnostic{std::nullopt, "source " + s.id + " must list one recipient per qubit"};
        }
        for (std::size_t k = 0; k < s.qubits.size(); k++) {
            std::size_t q = s.qubits[k];
            if (q >= t.n_qubits) {
                return Diagnostic{q, "source " + s.id + " emits qubit " + std::to_string(q) + " outside range"};
            }
            if (++emitted[q] > 1) {
                return Diagnostic{q, "qubit " + std::to_string(q) + " is emitted by more than one source"};
            }
            if (s.recipients[k] >= t.parties.size()) {
                return Diagnostic{q, "source " + s.id + " sends qubit " + std::to_string(q) + " to unknown party"};
            }
            if (owned[q] == 1 && owner[q] != s.recipients[k]) {
                return Diagnostic{q, "source " + s.id + " sends qubit " + std::to_string(q) + " to " +
                                         t.parties[s.recipients[k]].name + " but it is owned by " +
                                         t.parties[owner[q]].name};
            }
        }
    }
    for (std::size_t q = 0; q < t.n_qubits; q++) {
        if (emitted[q] == 0) {
            return Diagnostic{q, "qubit " + std::to_string(q) + " is not emitted by any source"};
        }
        if (owned[q] == 0) {
            return Diagnostic{q, "qubit " + std::to_string(q) + " is not owned by any party"};
        }
    }
    return std::nullopt;
}

NetworkTopology single_pair() {
    NetworkTopology t;
    std::size_t alice = add_party(t, "Alice");
    std::size_t bob = add_party(t, "Bob");
    add_source(t, "e1", SourceKind::BellPair, {alice, bob});
    return t;
}

NetworkTopology two_source() {
    NetworkTopology t;
    std::size_t alice = add_party(t, "Alice");
    std::size_t bob = add_party(t, "Bob");
    std::size_t charlie = add_party(t, "Charlie");
    add_source(t, "e1", SourceKind::BellPair, {alice, bob});
    add_source(t, "e2", SourceKind::BellPair, {bob, charlie});
    return t;
}

NetworkTopology star(std::size_t k) {
    if (k < 2) {
        throw std::invalid_argument("star network needs K >= 2, got " + std::to_string(k));
    }
    if (2 * k > kMaxQubits) {
        throw std::invalid_argument("star network too large");
    }
    NetworkTopology t;
    t.n_qubits = 2 * k;
    for (std::size_t i = 0; i < k; i++) {
        add_party(t, "Alice" + std::to_string(i + 1));
    }
    std::size_t bob = add_party(t, "Bob");
    // Source i emits qubit i to Bob and qubit K+i to Alice_i.
    for (std::size_t i = 0; i < k; i++) {
        t.sources.push_back({"e" + std::to_string(i + 1), SourceKind::BellPair, {i, k + i}, {bob, i}});
        t.parties[bob].qubits.push_back(i);
        t.parties[i].qubits.push_back(k + i);
    }
    return t;
}

NetworkTopology nkm(const NkmSpec &spec) {
    std::size_t n = spec.n_sources;
    std::size_t k = spec.n_alices;
    std::size_t m = spec.n_bobs;
    if (k < 1 || m < 1 || n < k) {
        throw std::invalid_argument("(N, K, m) network needs N >= K >= 1 and m >= 1");
    }
    if (2 * n > kMaxQubits) {
        throw std::invalid_argument("(N, K, m) network too large");
    }
    if (spec.links.size() != n - k) {
        throw std::invalid_argument("wiring must list exactly N - K inter-Bob sources, got " +
                                    std::to_string(spec.links.size()));
    }
    std::vector<std::size_t> alice_bob = spec.alice_bob;
    if (alice_bob.empty()) {
        if (m < k) {
            throw std::invalid_argument("default wiring sends source i to Bob_i, which needs m >= K");
        }
        for (std::size_t i = 0; i < k; i++) {
            alice_bob.push_back(i);
        }
    }
    if (alice_bob.size() != k) {
        throw std::invalid_argument("alice_bob must name one Bob per Alice source");
    }

    NetworkTopology t;
    for (std::size_t i = 0; i < k; i++) {
        add_party(t, "Alice" + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < m; j++) {
        add_party(t, "Bob" + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < k; i++) {
        if (alice_bob[i] >= m) {
            throw std::invalid_argument("source e" + std::to_string(i + 1) + " names Bob" +
                                        std::to_string(alice_bob[i] + 1) + " but m = " + std::to_string(m));
        }
        add_source(t, "e" + std::to_string(i + 1), SourceKind::BellPair, {i, k + alice_bob[i]});
    }
    for (std::size_t l = 0; l < spec.links.size(); l++) {
        const InterBobLink &link = spec.links[l];
        std::string id = "e" + std::to_string(k + l + 1);
        if (link.first_bob >= m || link.second_bob >= m) {
            throw std::invalid_argument("source " + id + " names a Bob beyond m = " + std::to_string(m));
        }
        if (link.first_bob == link.second_bob) {
            throw std::invalid_argument("source " + id + " sends both qubits to the same Bob");
        }
        add_source(t, id, SourceKind::BellPair, {k + link.first_bob, k + link.second_bob});
    }
    for (std::size_t j = 0; j < m; j++) {
        if (t.parties[k + j].qubits.size() < 2) {
            throw std::invalid_argument("Bob" + std::to_string(j + 1) + " receives " +
                                        std::to_string(t.parties[k + j].qubits.size()) +
                                        " qubit(s); every Bob needs at least 2");
        }
    }
    sort_party_qubits(t);
    return t;
}

NetworkTopology nkm_collapsed(std::size_t k) {
    if (k < 2) {
        throw std::invalid_argument("collapsed (N, K, m) network needs K >= 2");
    }
    return nkm({k, k, 1, {}, std::vector<std::size_t>(k, 0)});
}

NetworkTopology ghz_case_a() {
    NetworkTopology t;
    std::size_t alice = add_party(t, "Alice");
    std::size_t bob = add_party(t, "Bob");
    std::size_t charlie = add_party(t, "Charlie");
    add_source(t, "e1", SourceKind::BellPair, {alice, bob});
    add_source(t, "e2", SourceKind::GHZ3, {bob, bob, charlie});
    return t;
}

NetworkTopology ghz_case_b() {
    NetworkTopology t;
    std::size_t alice = add_party(t, "Alice");
    std::size_t bob = add_party(t, "Bob");
    std::size_t charlie1 = add_party(t, "Charlie1");
    std::size_t charlie2 = add_party(t, "Charlie2");
    add_source(t, "e1", SourceKind::BellPair, {alice, bob});
    add_source(t, "e2", SourceKind::GHZ3, {bob, charlie1, charlie2});
    return t;
}

nlohmann::json to_json(const NetworkTopology &t) {
    nlohmann::json sources = nlohmann::json::array();
    for (const SourceSpec &s : t.sources) {
        nlohmann::json recipients = nlohmann::json::array();
        for (std::size_t p : s.recipients) {
            recipients.push_back(t.parties.at(p).name);
        }
        sources.push_back({{"id", s.id}, {"kind", source_kind_name(s.kind)}, {"qubits", s.qubits},
                           {"recipients", recipients}});
    }
    nlohmann::json parties = nlohmann::json::array();
    for (const Party &p : t.parties) {
        parties.push_back({{"name", p.name}, {"qubits", p.qubits}});
    }
    return {{"n_qubits", t.n_qubits}, {"sources", sources}, {"parties", parties}};
}

NetworkTopology topology_from_json(const nlohmann::json &j) {
    NetworkTopology t;
    t.n_qubits = j.at("n_qubits").get<std::size_t>();
    for (const auto &p : j.at("parties")) {
        t.parties.push_back({p.at("name").get<std::string>(), p.at("qubits").get<std::vector<std::size_t>>()});
    }
    for (const auto &s : j.at("sources")) {
        SourceSpec spec;
        spec.id = s.at("id").get<std::string>();
        std::string kind = s.at("kind").get<std::string>();
        if (kind == "BellPair") {
            spec.kind = SourceKind::BellPair;
        } else if (kind == "GHZ3") {
            spec.kind = SourceKind::GHZ3;
        } else {
            throw std::invalid_argument("unknown source kind '" + kind + "'");
        }
        spec.qubits = s.at("qubits").get<std::vector<std::size_t>>();
        for (const auto &r : s.at("recipients")) {
            spec.recipients.push_back(t.party_index(r.get<std::string>()));
        }
        t.sources.push_back(std::move(spec));
    }
    return t;
}

}  // namespace netbell
