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

#include "unot/optimizer.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "unot/fidelity.hpp"
#include "unot/gate.hpp"

using namespace unot;
using unot::testing::random_gate;

namespace {

std::vector<BeltRegion> grid(int n) {
    std::vector<BeltRegion> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double a = kPi * i / (n - 1);
            double b = kPi * j / (n - 1);
            out.push_back(BeltRegion::make(std::min(a, b), std::max(a, b)));
        }
    }
    return out;
}

}  // namespace

TEST(optimizer, universal_limit) {
    for (int m = 1; m <= 8; ++m) {
        auto rep = analytic_optimum(BeltRegion::make(0.0, kPi), m);
        EXPECT_NEAR(rep.f_bar, 2.0 / 3.0, 1e-12) << m;
    }
}

TEST(optimizer, phase_covariant_limit) {
    for (int m = 1; m <= 8; ++m) {
        double expect = m % 2 == 0 ? 0.5 + std::sqrt(m * (m + 2.0)) / (4.0 * m) : 0.5 + (m + 1.0) / (4.0 * m);
        auto rep = analytic_optimum(BeltRegion::make(kPi / 2, kPi / 2), m);
        EXPECT_NEAR(rep.f_bar, expect, 1e-12) << m;
        EXPECT_NEAR(rep.case_f_bar, expect, 1e-12) << m;
    }
}

TEST(optimizer, frozen_case_formula_values) {
    // Closed-form family below the global optimum on the whole sphere, even M.
    auto r = BeltRegion::make(0.0, kPi);
    EXPECT_NEAR(analytic_optimum(r, 2).case_f_bar, 0.652368927062, 1e-11);
    EXPECT_NEAR(analytic_optimum(r, 4).case_f_bar, 0.662457478565, 1e-11);
    EXPECT_FALSE(analytic_optimum(r, 2).case_formula_optimal);
    EXPECT_TRUE(analytic_optimum(r, 3).case_formula_optimal);
    auto c = case_family_solution(BeltRegion::make(0.0, kPi), 1, CaseKind::Case1);
    EXPECT_NEAR(c.a_star, 1.0, 1e-15);
    EXPECT_TRUE(c.boundary_hit);
}

TEST(optimizer, dual_bound_is_tight) {
    for (const auto &r : grid(9)) {
        for (int m = 1; m <= 8; ++m) {
            auto rep = analytic_optimum(r, m);
            EXPECT_NEAR(rep.f_bar, rep.dual_bound, 1e-12) << r.theta1 << " " << r.theta2 << " " << m;
            EXPECT_GE(rep.f_bar, rep.case_f_bar - 1e-12);
            EXPECT_NEAR(averaged_objective(belt_constants(r), m, rep.a_diagonals), rep.f_bar, 1e-13);
        }
    }
}

TEST(optimizer, random_gates_never_beat_the_optimum) {
    std::mt19937_64 rng(31);
    for (const auto &r : grid(5)) {
        for (int m = 1; m <= 5; ++m) {
            double best = analytic_optimum(r, m).f_bar;
            for (int t = 0; t < 40; ++t) {
                auto g = random_gate(rng, m, 1 + t % 4);
                EXPECT_LE(avg_fidelity_closed(g, r), best + 1e-12);
            }
        }
    }
}

TEST(optimizer, case_family_gate_realizes_case_formula) {
    for (const auto &r : grid(7)) {
        for (int m = 1; m <= 6; ++m) {
            for (int c = 1; c <= 4; ++c) {
                if ((c <= 2) != (m % 2 == 1)) {
                    continue;
                }
                auto kind = static_cast<CaseKind>(c);
                auto sol = case_family_solution(r, m, kind);
                auto g = realize_case_family(r, m, kind);
                EXPECT_NEAR(avg_fidelity_closed(g, r), sol.f_bar, 1e-12) << c << " M=" << m;
                EXPECT_GE(sol.a_star, 0.0);
                EXPECT_LE(sol.a_star, 1.0);
            }
        }
    }
    EXPECT_THROW(case_family_solution(BeltRegion::make(0.0, 1.0), 2, CaseKind::Case1), std::invalid_argument);
}

TEST(optimizer, mirror_symmetry) {
    for (const auto &r : grid(6)) {
        auto mirror = BeltRegion::make(kPi - r.theta2, kPi - r.theta1);
        for (int m = 1; m <= 6; ++m) {
            EXPECT_NEAR(analytic_optimum(r, m).f_bar, analytic_optimum(mirror, m).f_bar, 1e-12);
        }
    }
}

TEST(optimizer, depends_on_copy_count) {
    auto r = BeltRegion::make(kPi / 3, 2 * kPi / 3);
    EXPECT_GT(std::abs(analytic_optimum(r, 1).f_bar - analytic_optimum(r, 4).f_bar), 1e-6);
}

TEST(optimizer, case_consistency_off_ties) {
    for (auto [t1, t2] : {std::pair{0.2, 1.3}, {0.4, 2.9}, {1.7, 2.5}, {0.0, 2.0}}) {
        for (int m = 1; m <= 6; ++m) {
            auto rep = verify_case_consistency(BeltRegion::make(t1, t2), m);
            EXPECT_TRUE(rep.consistent()) << t1 << " " << t2 << " " << m;
            EXPECT_FALSE(rep.tie);
            EXPECT_NEAR(rep.f_bar, rep.realized_avg, 1e-12);
        }
    }
}

TEST(optimizer, case_consistency_symmetric_ties) {
    // theta1 + theta2 = pi: Q = R, both orderings give the same value.
    for (double t1 : {0.0, 0.4, 1.1, kPi / 2}) {
        for (int m = 1; m <= 6; ++m) {
            auto rep = verify_case_consistency(BeltRegion::make(t1, kPi - t1), m);
            EXPECT_TRUE(rep.tie);
            EXPECT_TRUE(rep.consistent()) << t1 << " " << m;
            EXPECT_NEAR(rep.case_f_bar, rep.sibling_f_bar, 1e-12);
        }
    }
}

TEST(optimizer, degenerate_ties_dominated_by_optimum) {
    // A single latitude away from the equator also ties, but Q != R there.
    for (double t : {0.5, 2 * kPi / 3, 2.8}) {
        auto r = BeltRegion::make(t, t);
        for (int m = 1; m <= 6; ++m) {
            auto rep = verify_case_consistency(r, m);
            EXPECT_TRUE(rep.tie);
            EXPECT_GE(rep.f_bar, rep.case_f_bar - 1e-12);
            EXPECT_GE(rep.f_bar, rep.sibling_f_bar - 1e-12);
        }
    }
    auto south = verify_case_consistency(BeltRegion::make(2 * kPi / 3, 2 * kPi / 3), 1);
    EXPECT_FALSE(south.consistent());
    EXPECT_NEAR(south.case_f_bar, 0.75, 1e-12);
    EXPECT_NEAR(south.f_bar, 0.84375, 1e-12);
}

TEST(optimizer, oracle_brackets_analytic_value) {
    for (auto [t1, t2] : {std::pair{0.0, kPi}, {0.3, 2.5}, {1.0, 1.2}, {kPi / 2, kPi / 2}, {0.1, 0.6}}) {
        auto r = BeltRegion::make(t1, t2);
        for (int m = 1; m <= 3; ++m) {
            double f = analytic_optimum(r, m).f_bar;
            auto o = oracle_optimum(r, m);
            EXPECT_LE(o.best_f, f + 1e-9);
            EXPECT_GE(o.best_f, f - 5e-3);
            EXPECT_LE(o.grid_best_f, o.best_f + 1e-15);
            EXPECT_EQ(o.first_branch.size(), static_cast<std::size_t>(m + 1));
            EXPECT_EQ(o.second_branch.size(), static_cast<std::size_t>(m + 1));
        }
    }
}

TEST(optimizer, oracle_paranoid_confirms_saturation) {
    auto r = BeltRegion::make(0.3, 2.0);
    OracleOptions opts;
    opts.resolution = 0.05;
    opts.paranoid = true;
    auto o = oracle_optimum(r, 2, opts);
    EXPECT_TRUE(o.saturation_confirmed);
    EXPECT_LE(o.best_f, analytic_optimum(r, 2).f_bar + 1e-9);
}

TEST(optimizer, oracle_rejects_bad_options) {
    auto r = BeltRegion::make(0.3, 2.0);
    EXPECT_THROW(oracle_optimum(r, kOracleMaxCopies + 1), std::invalid_argument);
    OracleOptions opts;
    opts.resolution = 0.0;
    EXPECT_THROW(oracle_optimum(r, 2, opts), std::invalid_argument);
    opts.resolution = 0.2;
    EXPECT_TRUE(oracle_optimum(r, 2, opts).coarse_resolution);
}
