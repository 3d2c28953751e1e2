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

#include "unot/gate.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "unot/fidelity.hpp"
#include "unot/optimizer.hpp"

using namespace unot;
using unot::testing::brute_apply;
using unot::testing::random_gate;

namespace {

std::vector<BeltRegion> belts() {
    std::vector<BeltRegion> out;
    for (double t1 : {0.0, 0.3, 0.9, kPi / 2, 2.0}) {
        for (double t2 : {kPi / 2, 1.9, 2.6, kPi}) {
            if (t1 <= t2) {
                out.push_back(BeltRegion::make(t1, t2));
            }
        }
    }
    out.push_back(BeltRegion::make(0.5, 0.5));
    out.push_back(BeltRegion::make(0.0, 0.0));
    out.push_back(BeltRegion::make(kPi, kPi));
    return out;
}

}  // namespace

TEST(gate, input_state_reduces_phi) {
    auto in = InputState::make(1.0, -0.5);
    EXPECT_NEAR(in.phi, 2 * kPi - 0.5, 1e-15);
    EXPECT_THROW(InputState::make(-0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(InputState::make(4.0, 0.0), std::invalid_argument);
}

TEST(gate, realized_gates_are_valid) {
    for (const auto &r : belts()) {
        for (int m = 1; m <= 8; ++m) {
            auto g = realize_optimal(r, m);
            auto v = validate(g);
            EXPECT_TRUE(v.valid()) << r.theta1 << " " << r.theta2 << " M=" << m;
            EXPECT_LT(v.norm0_residual, kValidityTolerance);
            EXPECT_LT(v.cross_residual, kValidityTolerance);
            EXPECT_EQ(g.anc_dim(), 2);
            for (int c = 1; c <= 4; ++c) {
                bool odd = (c <= 2);
                if (odd != (m % 2 == 1)) {
                    continue;
                }
                EXPECT_TRUE(validate(realize_case_family(r, m, static_cast<CaseKind>(c))).valid());
            }
        }
    }
}

TEST(gate, realized_diagonals_match_report) {
    for (const auto &r : belts()) {
        for (int m = 1; m <= 6; ++m) {
            auto rep = analytic_optimum(r, m);
            auto g = realize_optimal(r, m);
            auto gm = gram(g);
            for (int l = 0; l < g.vector_count(); ++l) {
                EXPECT_NEAR(gm(l, l).real(), rep.a_diagonals[l], 1e-13);
            }
        }
    }
}

TEST(gate, validate_detects_broken_gates) {
    auto g = realize_optimal(BeltRegion::make(0.3, 2.6), 3);
    int l = 0;
    while (g.vector(l).norm() == 0.0) {
        ++l;
    }
    ASSERT_LE(l, g.m());
    g.vector(l) *= 1.1;
    auto v = validate(g);
    EXPECT_FALSE(v.valid());
    EXPECT_GT(v.norm0_residual, 1e-3);
    EXPECT_THROW(require_valid(g), ValidationError);

    // Both branches normalized but not orthogonal: same vector everywhere.
    GateSpec same(1, 1);
    for (int l = 0; l < 4; ++l) {
        same.vector(l)(0) = 1 / std::sqrt(2.0);
    }
    auto vs = validate(same);
    EXPECT_LT(vs.norm0_residual, 1e-15);
    EXPECT_GT(vs.cross_residual, 0.5);
    EXPECT_FALSE(vs.valid());
}

TEST(gate, apply_matches_definition) {
    std::mt19937_64 rng(3);
    for (int m = 1; m <= 7; ++m) {
        for (int d : {1, 2}) {
            auto g = random_gate(rng, m, d);
            ASSERT_TRUE(validate(g).valid());
            for (double th : {0.0, 0.7, 2.1, kPi}) {
                for (double ph : {0.0, 1.3, 4.0}) {
                    auto out = apply(g, InputState::make(th, ph));
                    auto full = expand_to_qubits(out);
                    auto ref = brute_apply(g, th, ph);
                    ASSERT_EQ(full.size(), ref.size());
                    for (std::size_t i = 0; i < ref.size(); ++i) {
                        EXPECT_NEAR(std::abs(full[i] - ref[i]), 0.0, 1e-13);
                    }
                    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
                }
            }
        }
    }
}

TEST(gate, isometry_preserves_inner_products) {
    std::mt19937_64 rng(4);
    auto g = random_gate(rng, 4, 3);
    auto a = apply(g, InputState::make(0.4, 0.2));
    auto b = apply(g, InputState::make(2.2, 5.0));
    Complex in = std::cos(0.2) * std::cos(1.1) + std::sin(0.2) * std::sin(1.1) * std::exp(Complex(0, 5.0 - 0.2));
    EXPECT_NEAR(std::abs(a.inner(b) - in), 0.0, 1e-12);
}

TEST(gate, equatorial_one_copy_is_perfect_not) {
    auto g = realize_optimal(BeltRegion::make(kPi / 2, kPi / 2), 1);
    for (double ph = 0.0; ph < 2 * kPi; ph += 0.25) {
        auto out = apply(g, InputState::make(kPi / 2, ph));
        auto rho = reduced_single_qubit(out, 1);
        Complex p0 = 1 / std::sqrt(2.0);
        Complex p1 = -std::exp(Complex(0, ph)) / std::sqrt(2.0);
        EXPECT_NEAR(rho.expectation(p0, p1), 1.0, 1e-12);
    }
}

TEST(gate, realize_diagonals_rejects_bad_input) {
    EXPECT_THROW(realize_diagonals(2, {0.5, 0.5}, MinusSide::First), std::invalid_argument);
    std::vector<double> bad(6, 0.0);
    bad[0] = -0.5;
    bad[5] = 1.0;
    EXPECT_THROW(realize_diagonals(2, bad, MinusSide::First), std::invalid_argument);
}
