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

#include "gtest/gtest.h"

using namespace netbell;

TEST(network, builders_validate) {
    ASSERT_FALSE(validate(single_pair()).has_value());
    ASSERT_FALSE(validate(two_source()).has_value());
    for (std::size_t k = 2; k <= 6; k++) {
        ASSERT_FALSE(validate(star(k)).has_value()) << k;
        ASSERT_FALSE(validate(nkm_collapsed(k)).has_value()) << k;
    }
    ASSERT_FALSE(validate(ghz_case_a()).has_value());
    ASSERT_FALSE(validate(ghz_case_b()).has_value());
    ASSERT_FALSE(validate(nkm({3, 2, 2, {{0, 1}}, {}})).has_value());
}

TEST(network, star_layout) {
    auto t = star(3);
    ASSERT_EQ(t.n_qubits, 6u);
    ASSERT_EQ(t.parties.size(), 4u);
    ASSERT_EQ(t.parties[3].name, "Bob");
    ASSERT_EQ(t.parties[3].qubits, (std::vector<std::size_t>{0, 1, 2}));
    ASSERT_TRUE(t.parties[3].is_joint());
    ASSERT_FALSE(t.parties[0].is_joint());
    ASSERT_EQ(t.source_of(4), 1u);
    ASSERT_EQ(t.owner_of(4), 1u);
    ASSERT_EQ(t.party_index("Alice2"), 1u);
    ASSERT_THROW(t.party_index("Eve"), std::invalid_argument);
    ASSERT_THROW(t.source_of(6), std::out_of_range);
    ASSERT_THROW(star(1), std::invalid_argument);
}

TEST(network, ghz_layouts) {
    auto a = ghz_case_a();
    ASSERT_EQ(a.n_qubits, 5u);
    ASSERT_EQ(a.sources[1].kind, SourceKind::GHZ3);
    ASSERT_EQ(a.parties[a.party_index("Bob")].qubits.size(), 3u);
    ASSERT_EQ(a.parties[a.party_index("Charlie")].qubits.size(), 1u);

    auto b = ghz_case_b();
    ASSERT_EQ(b.n_qubits, 5u);
    ASSERT_EQ(b.parties.size(), 4u);
    ASSERT_EQ(b.parties[b.party_index("Bob")].qubits.size(), 2u);
}

TEST(network, nkm_layout) {
    auto t = nkm({3, 2, 2, {{0, 1}}, {}});
    ASSERT_EQ(t.n_qubits, 6u);
    ASSERT_EQ(t.parties.size(), 4u);
    ASSERT_EQ(t.parties[2].name, "Bob1");
    ASSERT_EQ(t.parties[2].qubits.size(), 2u);
    ASSERT_EQ(t.parties[3].qubits.size(), 2u);
    ASSERT_EQ(t.sources[2].recipients, (std::vector<std::size_t>{2, 3}));

    auto c = nkm_collapsed(3);
    ASSERT_EQ(c.parties.size(), 4u);
    ASSERT_EQ(c.parties[3].qubits.size(), 3u);
}

TEST(network, nkm_errors) {
    ASSERT_THROW(nkm({3, 2, 2, {}, {}}), std::invalid_argument);             // missing link
    ASSERT_THROW(nkm({3, 2, 2, {{0, 0}}, {}}), std::invalid_argument);       // self link
    ASSERT_THROW(nkm({3, 2, 2, {{0, 5}}, {}}), std::invalid_argument);       // unknown Bob
    ASSERT_THROW(nkm({2, 2, 2, {}, {}}), std::invalid_argument);             // Bobs with one qubit
    ASSERT_THROW(nkm({2, 3, 3, {}, {}}), std::invalid_argument);             // N < K
    ASSERT_THROW(nkm({3, 3, 2, {}, {0, 1}}), std::invalid_argument);         // alice_bob length
}

TEST(network, validate_diagnostics) {
    auto t = two_source();
    t.parties[0].qubits.push_back(2);
    auto d = validate(t);
    ASSERT_TRUE(d.has_value());
    ASSERT_EQ(d->qubit, std::optional<std::size_t>(2));

    t = two_source();
    t.sources[1].recipients[1] = 0;
    d = validate(t);
    ASSERT_TRUE(d.has_value());
    ASSERT_NE(d->message.find("owned by"), std::string::npos);

    t = two_source();
    t.n_qubits = 5;
    d = validate(t);
    ASSERT_TRUE(d.has_value());
    ASSERT_EQ(d->qubit, std::optional<std::size_t>(4));

    t = two_source();
    t.sources[0].qubits.pop_back();
    ASSERT_TRUE(validate(t).has_value());
}

TEST(network, json_round_trip) {
    for (const auto &t : {single_pair(), two_source(), star(4), ghz_case_a(), ghz_case_b(), nkm_collapsed(3),
                          nkm({4, 2, 2, {{0, 1}, {1, 0}}, {}})}) {
        ASSERT_EQ(topology_from_json(to_json(t)), t);
    }
    auto j = to_json(single_pair());
    j["sources"][0]["kind"] = "W";
    ASSERT_THROW(topology_from_json(j), std::invalid_argument);
}
