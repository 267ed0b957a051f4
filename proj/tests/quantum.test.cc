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

#include "netbell/quantum.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "netbell/cli.h"
#include "test_util.h"

using namespace netbell;

namespace {

AngleAssignment random_angles(std::size_t slots, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.05, kPi / 2 - 0.05);
    AngleAssignment a;
    for (std::size_t i = 0; i < slots; i++) {
        a.theta.push_back(u(rng));
    }
    return a;
}

InequalityExpr nkm_322(FamilySelection f) {
    return build_nkm(nkm({3, 2, 2, {{0, 1}}, {}}), f, 0);
}

}  // namespace

TEST(quantum, value_matches_dense_oracle) {
    std::mt19937_64 rng(17);
    std::vector<InequalityExpr> list = {build_chsh(),
                                        build_bilocal_baseline().nonlinear,
                                        build_two_source_linear().combined,
                                        build_star_combined(2),
                                        build_star_nonlinear(3, 1, 0, FamilySelection::Combined),
                                        nkm_322(FamilySelection::Combined),
                                        build_ghz_a(FamilySelection::Combined),
                                        build_ghz_b()};
    for (const auto &e : list) {
        auto rho = netbell_test::outer(netbell_test::target_ket(e.topology));
        QuantumState state = build_state("target", e);
        for (int trial = 0; trial < 4; trial++) {
            auto a = random_angles(e.angle_slots.size(), rng);
            ASSERT_NEAR(evaluate(e, state, a), netbell_test::expanded_value(e, rho, a), 1e-12) << e.name;
        }
    }

    auto two = build_two_source_linear().combined;
    auto smolin_rho = netbell_test::smolin_density(0, 1, 2, 3);
    auto a = random_angles(two.angle_slots.size(), rng);
    ASSERT_NEAR(evaluate(two, build_state("smolin", two), a), netbell_test::expanded_value(two, smolin_rho, a), 1e-12);
}

TEST(quantum, star_closed_form) {
    std::mt19937_64 rng(23);
    for (std::size_t k = 2; k <= 4; k++) {
        auto e = build_star_first(k);
        QuantumState state = build_state("target", e);
        for (int trial = 0; trial < 10; trial++) {
            auto a = random_angles(k, rng);
            double expected = 1;
            for (double t : a.theta) {
                expected *= (std::cos(t) + std::sin(t)) / std::sqrt(2.0);
            }
            expected *= std::pow(2.0, static_cast<double>(k) / 2);
            ASSERT_NEAR(evaluate(e, state, a), expected, 1e-12);
        }
    }
}

TEST(quantum, gradient_matches_finite_differences) {
    std::mt19937_64 rng(29);
    std::vector<InequalityExpr> list = {build_star_combined(3), build_star_nonlinear(3, 1, 0),
                                        build_bilocal_baseline().nonlinear, build_ghz_b(),
                                        build_ghz_a(FamilySelection::Combined)};
    const double h = 1e-5;
    int points = 0;
    for (const auto &e : list) {
        // Bell-pair mixtures only exist on Bell-pair networks; GHZ ones use their target state.
        bool ghz = e.name.rfind("ghz", 0) == 0;
        Evaluator ev(e, ghz ? build_state("target", e) : build_state("rho1", e, 0.8));
        for (int trial = 0; trial < 20; trial++, points++) {
            auto a = random_angles(e.angle_slots.size(), rng);
            auto g = ev.gradient(a);
            for (std::size_t i = 0; i < a.theta.size(); i++) {
                auto plus = a;
                auto minus = a;
                plus.theta[i] += h;
                minus.theta[i] -= h;
                double fd = (ev.value(plus) - ev.value(minus)) / (2 * h);
                ASSERT_NEAR(g[i], fd, 1e-6) << e.name << " slot " << i;
            }
        }
    }
    ASSERT_EQ(points, 100);
}

TEST(quantum, evaluator_errors) {
    auto e = build_star_first(2);
    ASSERT_THROW(Evaluator(e, QuantumState{bell_pair(0, 1, 2)}), std::invalid_argument);
    Evaluator ev(e, build_state("target", e));
    ASSERT_THROW(ev.value(AngleAssignment::uniform(3)), std::invalid_argument);
}

TEST(quantum, optimizer_finds_quarter_pi) {
    for (std::size_t k = 2; k <= 4; k++) {
        auto e = build_star_combined(k);
        auto r = optimize_angles(e, build_state("target", e));
        ASSERT_NEAR(r.value, 2 * std::pow(2.0, static_cast<double>(k) / 2), 1e-9);
        for (double t : r.angles.theta) {
            ASSERT_NEAR(t, kQuarterPi, 1e-6);
        }
        ASSERT_LT(r.gradient_norm, 1e-8);
    }
    auto chsh = build_chsh();
    auto check = claimed_max_check(chsh, build_state("target", chsh));
    ASSERT_TRUE(check.pass);
    ASSERT_NEAR(check.optimum.value, 2 * std::sqrt(2.0), 1e-9);
}

TEST(quantum, multistart_agrees) {
    auto e = build_ghz_b();
    OptimizeOptions opt;
    opt.starts = 4;
    opt.threads = 2;
    auto r = optimize_angles(e, build_state("target", e), opt);
    ASSERT_NEAR(r.value, 2 * std::sqrt(2.0), 1e-9);
    auto again = optimize_angles(e, build_state("target", e), opt);
    ASSERT_EQ(r.value, again.value);
}

TEST(quantum, maximally_mixed_gives_zero) {
    std::mt19937_64 rng(31);
    for (const auto &e : {build_star_combined(3), build_two_source_linear().combined, build_ghz_b()}) {
        auto a = random_angles(e.angle_slots.size(), rng);
        ASSERT_EQ(evaluate(e, build_state("mixed", e), a), 0) << e.name;
    }
}

TEST(quantum, smolin_no_violation) {
    auto two = build_two_source_linear();
    auto a = AngleAssignment::uniform(two.first.angle_slots.size());
    ASSERT_NEAR(evaluate(two.first, build_state("smolin", two.first), a), 1, 1e-12);
    auto ac = AngleAssignment::uniform(two.combined.angle_slots.size());
    ASSERT_NEAR(evaluate(two.combined, build_state("smolin", two.combined), ac), 2, 1e-12);
    auto bil = build_bilocal_baseline().nonlinear;
    ASSERT_NEAR(evaluate(bil, build_state("smolin", bil), AngleAssignment::uniform(bil.angle_slots.size())),
                std::sqrt(2.0), 1e-12);
}

TEST(quantum, rho1_optimum_monotone_in_q) {
    auto e = build_star_combined(2);
    double previous = -1;
    for (int i = 0; i <= 10; i++) {
        double q = std::min(1.0, 0.5 + 0.05 * i);
        auto r = optimize_angles(e, build_state("rho1", e, q));
        ASSERT_GE(r.value, previous - 1e-9) << q;
        previous = r.value;
    }
    ASSERT_NEAR(previous, 4, 1e-9);
}

TEST(quantum, f_theta) {
    for (double t : {0.5, 1.0, 1.5}) {
        auto g = f_theta_grid_max(t);
        ASSERT_NEAR(g.value, f_theta_max(t), 1e-8);
        ASSERT_NEAR(g.argmax, kQuarterPi, 1e-4);
    }
    ASSERT_NEAR(f_theta_max(1), std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(f_theta(1, kQuarterPi), std::sqrt(2.0), 1e-15);
    ASSERT_THROW(f_theta_max(2), std::invalid_argument);
    ASSERT_THROW(f_theta_max(0), std::invalid_argument);
}

TEST(quantum, mahler) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0, 10);
    for (int trial = 0; trial < 100000; trial++) {
        std::size_t k = 1 + trial % 6;
        std::vector<double> a(k);
        std::vector<double> b(k);
        for (std::size_t i = 0; i < k; i++) {
            a[i] = u(rng);
            b[i] = u(rng);
        }
        ASSERT_TRUE(mahler_check(a, b).holds) << trial;
    }
    auto eq = mahler_check({1, 2, 3}, {2, 4, 6});
    ASSERT_TRUE(eq.equality_case);
    ASSERT_NEAR(eq.lhs, eq.rhs, 1e-12);
    ASSERT_THROW(mahler_check({1, -1}, {1, 1}), std::invalid_argument);
    ASSERT_THROW(mahler_check({1}, {1, 1}), std::invalid_argument);
}
