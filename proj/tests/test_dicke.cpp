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

#include "unot/dicke.hpp"

#include <bit>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace unot;
using unot::testing::brute_reduce;
using unot::testing::random_state;

TEST(dicke, binomial_matches_pascal) {
    std::vector<std::vector<std::uint64_t>> row{{1}};
    for (int n = 1; n <= 62; ++n) {
        std::vector<std::uint64_t> next(n + 1, 1);
        for (int k = 1; k < n; ++k) {
            next[k] = row[n - 1][k - 1] + row[n - 1][k];
        }
        row.push_back(next);
    }
    for (int n = 0; n <= 62; ++n) {
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(binomial_exact(n, k), row[n][k]) << n << " " << k;
        }
        EXPECT_EQ(binomial_exact(n, -1), 0u);
        EXPECT_EQ(binomial_exact(n, n + 1), 0u);
    }
    EXPECT_EQ(binomial_exact(30, 15), 155117520u);
}

TEST(dicke, amplitude_enumeration) {
    for (int m = 1; m <= 8; ++m) {
        for (int k = 0; k <= m; ++k) {
            double norm = 0.0;
            for (unsigned s = 0; s < (1u << m); ++s) {
                std::string bits;
                for (int q = 0; q < m; ++q) {
                    bits += (s >> q) & 1 ? '1' : '0';
                }
                double a = dicke_amplitude({m, k}, bits);
                if (std::popcount(s) == k) {
                    EXPECT_NEAR(a, 1.0 / std::sqrt(unot::testing::choose(m, k)), 1e-15);
                } else {
                    EXPECT_EQ(a, 0.0);
                }
                norm += a * a;
            }
            EXPECT_NEAR(norm, 1.0, 1e-12);
        }
    }
    EXPECT_THROW(dicke_amplitude({3, 1}, "01"), std::invalid_argument);
    EXPECT_THROW(dicke_amplitude({3, 1}, "0x1"), std::invalid_argument);
}

TEST(dicke, expand_bell_like) {
    // (|D(1,0)>|0> + |D(1,1)>|1>)/sqrt2 = (|00> + |11>)/sqrt2 with the ancilla as high bit.
    JointState js(1, 2);
    js.at(0, 0) = 1 / std::sqrt(2.0);
    js.at(1, 1) = 1 / std::sqrt(2.0);
    auto full = expand_to_qubits(js);
    ASSERT_EQ(full.size(), 4u);
    EXPECT_NEAR(full[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(full[1]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(full[2]), 0.0, 1e-15);
    EXPECT_NEAR(full[3].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(dicke, expand_preserves_inner_products) {
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 9; ++m) {
        for (int d = 1; d <= 2; ++d) {
            JointState a(m, d);
            JointState b(m, d);
            auto va = random_state(rng, a.amplitudes().size());
            auto vb = random_state(rng, b.amplitudes().size());
            std::copy(va.begin(), va.end(), a.amplitudes().begin());
            std::copy(vb.begin(), vb.end(), b.amplitudes().begin());
            auto fa = expand_to_qubits(a);
            auto fb = expand_to_qubits(b);
            Complex full{};
            for (std::size_t i = 0; i < fa.size(); ++i) {
                full += std::conj(fa[i]) * fb[i];
            }
            EXPECT_NEAR(std::abs(full - a.inner(b)), 0.0, 1e-12);
            double n = 0.0;
            for (auto &x : fa) {
                n += std::norm(x);
            }
            EXPECT_NEAR(n, 1.0, 1e-12);
        }
    }
}

TEST(dicke, expand_rejects_large_ancilla) {
    JointState js(2, 3);
    EXPECT_THROW(expand_to_qubits(js), std::invalid_argument);
}

TEST(dicke, reduced_state_matches_brute_force) {
    std::mt19937_64 rng(5);
    for (int m = 1; m <= 8; ++m) {
        for (int d = 1; d <= 2; ++d) {
            JointState js(m, d);
            auto v = random_state(rng, js.amplitudes().size());
            std::copy(v.begin(), v.end(), js.amplitudes().begin());
            auto full = expand_to_qubits(js);
            for (int which = 1; which <= m; ++which) {
                auto rho = reduced_single_qubit(js, which);
                auto ref = brute_reduce(full, which - 1);
                for (int r = 0; r < 2; ++r) {
                    for (int c = 0; c < 2; ++c) {
                        EXPECT_NEAR(std::abs(rho(r, c) - ref(r, c)), 0.0, 1e-12) << m << " " << which;
                    }
                }
            }
        }
    }
}

TEST(dicke, reduced_state_properties) {
    std::mt19937_64 rng(9);
    JointState js(5, 2);
    auto v = random_state(rng, js.amplitudes().size());
    std::copy(v.begin(), v.end(), js.amplitudes().begin());
    auto rho = reduced_single_qubit(js, 3);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(rho(0, 1) - std::conj(rho(1, 0))), 0.0, 1e-15);
    auto ev = rho.eigenvalues();
    EXPECT_GE(ev[0], -1e-14);
    EXPECT_GE(ev[1], -1e-14);
    EXPECT_NEAR(ev[0] + ev[1], 1.0, 1e-12);
    EXPECT_THROW(reduced_single_qubit(js, 0), std::out_of_range);
    EXPECT_THROW(reduced_single_qubit(js, 6), std::out_of_range);
}
