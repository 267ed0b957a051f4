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

#include "netbell/sampler.h"

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "netbell/cli.h"
#include "netbell/quantum.h"
#include "test_util.h"

using namespace netbell;
using netbell_test::Mat2;

namespace {

Mat2 projector(const BlochAxis &a, int sign) {
    Mat2 obs = netbell_test::add(netbell_test::pauli_matrix('X'), netbell_test::pauli_matrix('Y'), a.x, a.y);
    obs = netbell_test::add(obs, netbell_test::pauli_matrix('Z'), 1, a.z);
    return netbell_test::add(netbell_test::pauli_matrix('I'), obs, 0.5, 0.5 * sign);
}

std::vector<double> dense_distribution(const netbell_test::Matrix &rho, std::size_t n,
                                       const std::vector<std::size_t> &qubits, const std::vector<BlochAxis> &axes) {
    std::vector<double> out(std::size_t{1} << qubits.size());
    for (std::size_t o = 0; o < out.size(); o++) {
        std::vector<Mat2> m(n, netbell_test::pauli_matrix('I'));
        for (std::size_t i = 0; i < qubits.size(); i++) {
            m[qubits[i]] = projector(axes[i], ((o >> i) & 1) ? -1 : 1);
        }
        out[o] = netbell_test::trace_product(rho, m).real();
    }
    return out;
}

RoundLog simulate(const InequalityExpr &e, std::size_t rounds, std::uint64_t seed, std::size_t threads = 1,
                  const std::string &state = "target") {
    SimulationOptions opt;
    opt.rounds = rounds;
    opt.seed = seed;
    opt.threads = threads;
    return simulate_rounds(e, build_state(state, e), AngleAssignment::uniform(e.angle_slots.size()), opt);
}

}  // namespace

TEST(counter_rng, reference_stream) {
    // First outputs of SplitMix64 seeded with 0.
    CounterRng rng(0);
    ASSERT_EQ(rng.draw(0), 0xe220a8397b1dcdafULL);
    ASSERT_EQ(rng.draw(1), 0x6e789e6aa1b965f4ULL);
    ASSERT_EQ(rng.draw(2), 0x06c45d188009454fULL);
    for (std::uint64_t c = 0; c < 1000; c++) {
        double u = rng.uniform(c);
        ASSERT_GE(u, 0);
        ASSERT_LT(u, 1);
        ASSERT_LT(rng.below(c, 7), 7u);
    }
}

TEST(outcome_distribution, matches_dense_oracle) {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g;
    auto random_axis = [&] {
        BlochAxis a{g(rng), g(rng), g(rng)};
        double norm = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
        return BlochAxis{a.x / norm, a.y / norm, a.z / norm};
    };
    auto ghz_rho = netbell_test::outer(netbell_test::ghz_ket());
    auto bell_rho = netbell_test::outer(netbell_test::bell_ket(BellKind::PhiPlus));
    for (int trial = 0; trial < 50; trial++) {
        std::vector<BlochAxis> axes3{random_axis(), random_axis(), random_axis()};
        auto lib = outcome_distribution(ghz3(0, 1, 2, 3), {0, 1, 2}, axes3);
        auto oracle = dense_distribution(ghz_rho, 3, {0, 1, 2}, axes3);
        for (std::size_t o = 0; o < lib.size(); o++) {
            ASSERT_NEAR(lib[o], oracle[o], 1e-12);
        }
        std::vector<BlochAxis> axes2{random_axis(), random_axis()};
        auto lib2 = outcome_distribution(bell_pair(0, 1, 2), {1, 0}, axes2);
        auto oracle2 = dense_distribution(bell_rho, 2, {1, 0}, axes2);
        for (std::size_t o = 0; o < lib2.size(); o++) {
            ASSERT_NEAR(lib2[o], oracle2[o], 1e-12);
        }
    }
    ASSERT_THROW(outcome_distribution(bell_pair(0, 1, 2), {0}, {}), std::invalid_argument);
}

TEST(outcome_distribution, product_check) {
    ASSERT_TRUE(is_product_over_sources(bell_pair(0, 1, 4).combined_with(bell_pair(2, 3, 4)), two_source()));
    ASSERT_FALSE(is_product_over_sources(bell_pair(1, 2, 4).combined_with(bell_pair(0, 3, 4)), two_source()));
}

TEST(sampler, phi_plus_zz_outcomes_agree) {
    // Near theta = 0 Alice measures Z; Bob's input 0 is Z as well.
    auto e = build_chsh();
    SimulationOptions opt{2000, 3, 1};
    auto log = simulate_rounds(e, build_state("target", e), AngleAssignment{{1e-9}}, opt);
    std::size_t checked = 0;
    for (std::size_t r = 0; r < log.size(); r++) {
        if (log.input(r, 1) == "0") {
            ASSERT_EQ(log.qubit_outcome(r, 0), log.qubit_outcome(r, 1)) << r;
            checked++;
        }
    }
    ASSERT_GT(checked, 500u);
}

TEST(sampler, ghz_stabilizer_parity) {
    // Bob's second qubit measures X when y3 = 1 and both Charlies measure Z near theta = 0,
    // so the GHZ qubits see X Z Z.
    auto e = build_ghz_b();
    SimulationOptions opt{5000, 9, 1};
    auto log = simulate_rounds(e, build_state("target", e), AngleAssignment::uniform(3, 1e-9), opt);
    std::size_t checked = 0;
    for (std::size_t r = 0; r < log.size(); r++) {
        if (log.input(r, 1).back() == '1') {
            ASSERT_EQ(log.qubit_outcome(r, 2) * log.qubit_outcome(r, 3) * log.qubit_outcome(r, 4), 1) << r;
            checked++;
        }
    }
    ASSERT_GT(checked, 1000u);
}

TEST(sampler, deterministic_and_thread_independent) {
    auto e = build_star_combined(2);
    auto a = simulate(e, 200000, 77, 1);
    auto b = simulate(e, 200000, 77, 4);
    ASSERT_TRUE(a == b);
    auto c = simulate(e, 200000, 78, 1);
    ASSERT_FALSE(a == c);
    ASSERT_EQ(a.size(), 400000u);
    ASSERT_EQ(a.seed(), 77u);
}

TEST(sampler, estimate_close_to_exact) {
    auto e = build_star_first(2);
    auto log = simulate(e, 200000, 5);
    auto rep = estimate(log, e);
    ASSERT_EQ(rep.correlators.size(), 4u);
    ASSERT_LT(std::abs(rep.value - 2), 5 * rep.standard_error);
    ASSERT_GT(rep.standard_error, 0);
    ASSERT_TRUE(rep.warnings.empty());
}

TEST(sampler, marginals_vanish) {
    auto e = build_star_combined(2);
    auto log = simulate(e, 100000, 12);
    auto ms = marginals(log, e);
    ASSERT_FALSE(ms.empty());
    for (const auto &m : ms) {
        ASSERT_LT(std::abs(m.mean), 5 * m.standard_error + 1e-12) << m.party << " " << m.input;
    }
}

TEST(sampler, standard_error_scales) {
    auto e = build_star_first(2);
    double se1 = estimate(simulate(e, 100000, 1), e).standard_error;
    double se4 = estimate(simulate(e, 400000, 1), e).standard_error;
    ASSERT_NEAR(se1 / se4, 2, 0.4);
}

TEST(sampler, empty_cells_flagged) {
    auto e = build_star_first(4);
    auto rep = estimate(simulate(e, 3, 1), e);
    ASSERT_TRUE(std::isinf(rep.standard_error));
    ASSERT_FALSE(rep.warnings.empty());
}

TEST(sampler, mixtures_and_errors) {
    auto two = build_two_source_linear().combined;
    auto rep = estimate(simulate(two, 200000, 2, 1, "smolin"), two);
    ASSERT_LT(std::abs(rep.value - 2), 5 * rep.standard_error);

    ASSERT_THROW(simulate(two, 0, 1), std::invalid_argument);
    ASSERT_THROW(simulate(two, 10, 1, 1, "target-dense"), std::invalid_argument);
    SimulationOptions opt{10, 1, 1};
    StabilizerGroup entangled = bell_pair(1, 2, 4).combined_with(bell_pair(0, 3, 4));
    ASSERT_THROW(simulate_rounds(two, entangled, AngleAssignment::uniform(two.angle_slots.size()), opt),
                 std::invalid_argument);
}

TEST(sampler, csv_log) {
    auto e = build_star_combined(2);
    auto log = simulate(e, 2, 4);
    std::ostringstream out;
    write_csv(out, log, e);
    std::string text = out.str();
    ASSERT_EQ(text.rfind("round,party,input,outcome\n", 0), 0u);
    // 4 rounds, 3 parties each.
    ASSERT_EQ(std::count(text.begin(), text.end(), '\n'), 13);

    auto rec = log.record(0, e.topology);
    ASSERT_EQ(rec.inputs.size(), 3u);
    ASSERT_EQ(rec.qubit_outcomes.size(), 4u);
    ASSERT_EQ(rec.party_outcomes[2], rec.qubit_outcomes[0] * rec.qubit_outcomes[1]);
}
