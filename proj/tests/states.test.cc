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

#include "netbell/states.h"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "netbell/cli.h"
#include "test_util.h"

using namespace netbell;
using netbell_test::cplx;
using netbell_test::Ket;
using netbell_test::Matrix;

namespace {

struct NamedScenario {
    std::string scenario;
    std::size_t k;
    std::string family;
};

std::vector<NamedScenario> scenario_list() {
    return {{"chsh", 2, "first"},  {"two-source", 2, "combined"}, {"star", 3, "combined"},
            {"star", 4, "first"},  {"nkm", 2, "combined"},        {"ghz-a", 2, "combined"},
            {"ghz-b", 2, "first"}, {"bilocal-nonlinear", 2, "first"}};
}

InequalityExpr scenario_expr(const NamedScenario &s) {
    RunConfig cfg;
    cfg.scenario = s.scenario;
    cfg.k = s.k;
    cfg.family = s.family;
    return build_scenario(cfg);
}

Ket bell_product_ket(const NetworkTopology &t, const std::vector<BellKind> &kinds) {
    std::vector<netbell_test::Part> parts;
    for (std::size_t i = 0; i < t.sources.size(); i++) {
        parts.push_back({t.sources[i].qubits, netbell_test::bell_ket(kinds[i])});
    }
    return netbell_test::product_ket(t.n_qubits, parts);
}

void expect_agreement(const QuantumState &state, const Matrix &rho, std::size_t n, std::uint64_t seed,
                      const std::string &what) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 1000; trial++) {
        PauliString p = netbell_test::random_pauli(n, rng);
        ASSERT_NEAR(expectation(state, p), netbell_test::pauli_expectation(rho, p), 1e-12) << what << " " << p.str();
    }
}

void expect_agreement(const QuantumState &state, const Ket &psi, std::size_t n, std::uint64_t seed,
                      const std::string &what) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 1000; trial++) {
        PauliString p = netbell_test::random_pauli(n, rng);
        ASSERT_NEAR(expectation(state, p), netbell_test::ket_expectation(psi, p), 1e-12) << what << " " << p.str();
    }
}

}  // namespace

TEST(stabilizer_group, bell_expectations) {
    auto phi = bell_pair(0, 1, 2);
    ASSERT_EQ(phi.expectation(PauliString::from_letters("ZZ")), 1);
    ASSERT_EQ(phi.expectation(PauliString::from_letters("XX")), 1);
    ASSERT_EQ(phi.expectation(PauliString::from_letters("YY")), -1);
    ASSERT_EQ(phi.expectation(PauliString::from_letters("ZI")), 0);
    ASSERT_EQ(phi.expectation(PauliString::identity(2)), 1);

    auto psi_minus = bell_state(BellKind::PsiMinus, 0, 1, 2);
    for (const char *w : {"XX", "YY", "ZZ"}) {
        ASSERT_EQ(psi_minus.expectation(PauliString::from_letters(w)), -1) << w;
    }
    ASSERT_EQ(bell_kind_from_name("psi+"), BellKind::PsiPlus);
    ASSERT_EQ(bell_kind_name(BellKind::PhiMinus), "phi-");
    ASSERT_THROW(bell_kind_from_name("chi"), std::invalid_argument);
}

TEST(stabilizer_group, ghz_expectations) {
    auto g = ghz3(0, 1, 2, 3);
    for (const char *w : {"XZZ", "ZXZ", "ZZX", "YYI", "-XXX"}) {
        ASSERT_EQ(g.expectation(PauliString::from_letters(w)), 1) << w;
    }
    ASSERT_EQ(g.expectation(PauliString::from_letters("ZZI")), 0);
    ASSERT_EQ(g.expectation(PauliString::from_letters("ZII")), 0);
}

TEST(stabilizer_group, constructor_errors) {
    ASSERT_THROW(StabilizerGroup(2, {PauliString::from_letters("XI"), PauliString::from_letters("ZI")}),
                 std::invalid_argument);
    ASSERT_THROW(StabilizerGroup(2, {PauliString::from_letters("XX"), PauliString::from_letters("XX")}),
                 std::invalid_argument);
    ASSERT_THROW(StabilizerGroup(2, {PauliString::from_letters("+iXX")}), std::invalid_argument);
    ASSERT_THROW(StabilizerGroup(2, {PauliString::from_letters("XXX")}), std::invalid_argument);
    ASSERT_THROW(bell_pair(0, 0, 2), std::invalid_argument);
    ASSERT_THROW(bell_pair(0, 2, 2), std::out_of_range);
    ASSERT_THROW(bell_pair(0, 1, 2).expectation(PauliString::from_letters("+iZZ")), std::invalid_argument);
}

TEST(stabilizer_group, combined_with) {
    auto both = bell_pair(0, 1, 4).combined_with(bell_pair(2, 3, 4));
    ASSERT_TRUE(both.is_pure());
    ASSERT_EQ(both.expectation(PauliString::from_letters("ZZXX")), 1);
    ASSERT_THROW(bell_pair(0, 1, 4).combined_with(bell_pair(0, 1, 3)), std::invalid_argument);
}

TEST(stabilizer_mixture, errors) {
    auto a = bell_pair(0, 1, 2);
    ASSERT_THROW(StabilizerMixture({{0.5, a}, {0.4, a}}), std::invalid_argument);
    ASSERT_THROW(StabilizerMixture({{1.5, a}, {-0.5, a}}), std::invalid_argument);
    ASSERT_THROW(StabilizerMixture({}), std::invalid_argument);
    ASSERT_THROW(mix(1.2, a, a), std::invalid_argument);
    ASSERT_THROW(mix(-0.1, a, a), std::invalid_argument);
}

TEST(dense_state, errors) {
    ASSERT_THROW(DenseState(1, {1, 1}), std::invalid_argument);
    ASSERT_THROW(DenseState(2, {1, 0}), std::invalid_argument);
    ASSERT_THROW(to_dense(maximally_mixed(2)), std::invalid_argument);
}

TEST(dense_state, to_dense_matches_ket_up_to_phase) {
    for (const auto &s : scenario_list()) {
        InequalityExpr ineq = scenario_expr(s);
        auto group = std::get<StabilizerGroup>(build_state("target", ineq));
        DenseState dense = to_dense(group);
        Ket expected = netbell_test::target_ket(ineq.topology);
        cplx overlap = 0;
        for (std::size_t b = 0; b < expected.size(); b++) {
            overlap += std::conj(expected[b]) * dense.amplitudes()[b];
        }
        ASSERT_NEAR(std::abs(overlap), 1, 1e-12) << s.scenario;
    }
}

TEST(dense_state, apply_pauli) {
    Ket zero{1, 0};
    auto y = apply_pauli(PauliString::from_letters("Y"), zero);
    ASSERT_NEAR(std::abs(y[1] - cplx(0, 1)), 0, 1e-15);
    ASSERT_NEAR(std::abs(y[0]), 0, 1e-15);
}

TEST(backend_agreement, target_states) {
    std::uint64_t seed = 100;
    for (const auto &s : scenario_list()) {
        InequalityExpr ineq = scenario_expr(s);
        Ket psi = netbell_test::target_ket(ineq.topology);
        std::size_t n = ineq.topology.n_qubits;
        expect_agreement(build_state("target", ineq), psi, n, seed++, s.scenario + " stabilizer");
        expect_agreement(build_state("target-dense", ineq), psi, n, seed++, s.scenario + " dense");
    }
}

TEST(backend_agreement, mixtures) {
    InequalityExpr two = build_two_source_linear().combined;
    const auto &t = two.topology;
    std::size_t n = t.n_qubits;

    Matrix smolin_rho = netbell_test::smolin_density(t.sources[0].qubits[0], t.sources[0].qubits[1],
                                                     t.sources[1].qubits[0], t.sources[1].qubits[1], n);
    expect_agreement(build_state("smolin", two), smolin_rho, n, 1, "smolin");

    Matrix mixed = netbell_test::weighted_sum(
        {{0.3, netbell_test::outer(bell_product_ket(t, {BellKind::PhiPlus, BellKind::PhiPlus}))},
         {0.7, netbell_test::outer(bell_product_ket(t, {BellKind::PsiMinus, BellKind::PsiMinus}))}});
    expect_agreement(build_state("mix(0.3,phi+phi+,psi-psi-)", two), mixed, n, 2, "mix");

    InequalityExpr star3 = build_star_combined(3);
    const auto &t3 = star3.topology;
    std::vector<BellKind> phi(3, BellKind::PhiPlus);
    std::vector<BellKind> psi_minus(3, BellKind::PsiMinus);
    std::vector<BellKind> psi_plus(3, BellKind::PsiPlus);
    Matrix rho1 = netbell_test::weighted_sum({{0.6, netbell_test::outer(bell_product_ket(t3, phi))},
                                              {0.4, netbell_test::outer(bell_product_ket(t3, psi_minus))}});
    Matrix rho2 = netbell_test::weighted_sum({{0.6, netbell_test::outer(bell_product_ket(t3, phi))},
                                              {0.4, netbell_test::outer(bell_product_ket(t3, psi_plus))}});
    expect_agreement(build_state("rho1", star3, 0.6), rho1, t3.n_qubits, 3, "rho1");
    expect_agreement(build_state("rho2", star3, 0.6), rho2, t3.n_qubits, 4, "rho2");

    Matrix identity(std::size_t{1} << n);
    for (std::size_t b = 0; b < identity.dim; b++) {
        identity.at(b, b) = 1.0 / static_cast<double>(identity.dim);
    }
    expect_agreement(build_state("mixed", two), identity, n, 5, "maximally mixed");
}

TEST(smolin_state, separable_signature) {
    auto s = smolin(0, 1, 2, 3);
    // Two-body correlations vanish; four-body ones of matching letters survive.
    ASSERT_EQ(s.expectation(PauliString::from_letters("ZZII")), 0);
    ASSERT_EQ(s.expectation(PauliString::from_letters("XXII")), 0);
    ASSERT_EQ(s.expectation(PauliString::from_letters("ZZZZ")), 1);
    ASSERT_EQ(s.expectation(PauliString::from_letters("XXXX")), 1);
    ASSERT_EQ(s.expectation(PauliString::from_letters("YYYY")), 1);
    ASSERT_EQ(s.expectation(PauliString::from_letters("ZZXX")), 0);
}
