// Copyright 2026 The unot Authors
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

#include "unot/fidelity.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "unot/optimizer.hpp"

using namespace unot;
using unot::testing::brute_fidelity;
using unot::testing::random_gate;

TEST(fidelity, sim_matches_brute_force_on_every_copy) {
    std::mt19937_64 rng(21);
    for (int m = 1; m <= 6; ++m) {
        auto g = random_gate(rng, m, 2);
        for (double th : {0.0, 0.5, 1.9, kPi}) {
            for (double ph : {0.0, 2.5}) {
                double f = fidelity_sim(g, InputState::make(th, ph));
                for (int bit = 0; bit < m; ++bit) {
                    EXPECT_NEAR(f, brute_fidelity(g, th, ph, bit), 1e-12) << m << " " << bit;
                }
            }
        }
    }
}

TEST(fidelity, formula_matches_phi_average_for_random_gates) {
    std::mt19937_64 rng(22);
    for (int m = 1; m <= 6; ++m) {
        for (int d : {1, 2, 3}) {
            auto g = random_gate(rng, m, d);
            for (double th = 0.0; th <= kPi; th += 0.2) {
                EXPECT_NEAR(fidelity_phi_average(g, th, 64), fidelity_formula(g, th), 1e-12) << m << " " << d;
            }
        }
    }
}

TEST(fidelity, closed_matches_quadrature_for_random_gates) {
    std::mt19937_64 rng(23);
    for (int m = 1; m <= 5; ++m) {
        auto g = random_gate(rng, m, 3);
        for (auto [t1, t2] : {std::pair{0.0, kPi}, {0.2, 1.0}, {1.3, 2.8}, {0.7, 0.7}}) {
            auto r = BeltRegion::make(t1, t2);
            EXPECT_NEAR(avg_fidelity_closed(g, r), avg_fidelity_quadrature(g, r), 1e-12) << m;
        }
    }
}

TEST(fidelity, whole_sphere_average) {
    // The maximizer on the whole sphere is not unique; only the average is fixed.
    auto r = BeltRegion::make(0.0, kPi);
    for (int m = 1; m <= 6; ++m) {
        auto g = realize_optimal(r, m);
        EXPECT_NEAR(avg_fidelity_quadrature(g, r), 2.0 / 3.0, 1e-12) << m;
    }
    // One copy: F(theta) = sin^2(theta), perfect on the equator and zero at the poles.
    auto g = realize_optimal(r, 1);
    for (double th = 0.0; th <= kPi; th += 0.3) {
        EXPECT_NEAR(fidelity_sim(g, InputState::make(th, 1.0)), std::pow(std::sin(th), 2), 1e-12);
    }
}

TEST(fidelity, gauss_legendre_exact_on_polynomials) {
    for (int n : {1, 2, 5, 16, 64}) {
        auto rule = gauss_legendre(n, -0.4, 0.9);
        for (int p = 0; p < 2 * n && p < 40; ++p) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
                s += rule.weights[i] * std::pow(rule.nodes[i], p);
            }
            double exact = (std::pow(0.9, p + 1) - std::pow(-0.4, p + 1)) / (p + 1);
            EXPECT_NEAR(s, exact, 1e-13) << n << " " << p;
        }
    }
}

TEST(fidelity, degenerate_belt_is_circle_average) {
    auto r = BeltRegion::make(1.1, 1.1);
    auto g = realize_optimal(r, 3);
    EXPECT_NEAR(avg_fidelity_quadrature(g, r), fidelity_phi_average(g, 1.1, 64), 1e-15);
    EXPECT_NEAR(avg_fidelity_closed(g, r), fidelity_formula(g, 1.1), 1e-12);
}

TEST(fidelity, quadrature_rejects_small_rules) {
    auto r = BeltRegion::make(0.0, 1.0);
    auto g = realize_optimal(r, 2);
    EXPECT_THROW(avg_fidelity_quadrature(g, r, 4, 64), std::invalid_argument);
    EXPECT_THROW(avg_fidelity_quadrature(g, r, 64, 8), std::invalid_argument);
}

TEST(fidelity, closed_requires_valid_gate) {
    auto r = BeltRegion::make(0.0, 1.0);
    auto g = realize_optimal(r, 2);
    g.vector(1) *= 2.0;
    EXPECT_THROW(avg_fidelity_closed(g, r), ValidationError);
}

TEST(fidelity, report_fields) {
    auto r = BeltRegion::make(0.4, 2.0);
    auto g = realize_optimal(r, 3);
    auto rep = fidelity_report(g, r, InputState::make(1.0, 0.3));
    EXPECT_NEAR(rep.pointwise_phi_average, rep.pointwise_formula, 1e-12);
    EXPECT_LT(rep.pointwise_residual, 1e-12);
    EXPECT_LT(rep.avg_residual, 1e-12);
    EXPECT_NEAR(rep.avg_closed, analytic_optimum(r, 3).f_bar, 1e-12);
    EXPECT_NEAR(rep.pointwise_sim, brute_fidelity(g, 1.0, 0.3), 1e-12);
}
