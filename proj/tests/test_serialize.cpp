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

#include "unot/serialize.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace unot;

TEST(serialize, format_double_round_trips) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        double v = u(rng) * std::pow(10.0, static_cast<int>(u(rng)));
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(1.0), "1.0");
    EXPECT_EQ(format_double(0.0), "0.0");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(serialize, gate_round_trip_is_exact) {
    auto g = realize_optimal(BeltRegion::make(0.3, 2.2), 3);
    std::string text = dump(gate_to_json(g));
    auto back = gate_from_json(parse_text(text));
    ASSERT_EQ(back.m(), 3);
    for (int l = 0; l < g.vector_count(); ++l) {
        for (int x = 0; x < g.anc_dim(); ++x) {
            EXPECT_EQ(back.vector(l)(x), g.vector(l)(x));
        }
    }
    EXPECT_EQ(dump(gate_to_json(back)), text);
}

TEST(serialize, joint_state_round_trip) {
    std::mt19937_64 rng(52);
    JointState js(4, 2);
    auto v = unot::testing::random_state(rng, js.amplitudes().size());
    std::copy(v.begin(), v.end(), js.amplitudes().begin());
    auto back = joint_state_from_json(parse_text(dump(joint_state_to_json(js))));
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(back.amplitudes()[i], js.amplitudes()[i]);
    }
}

TEST(serialize, chain_round_trip) {
    auto ex = exemplar_chain(ExemplarState::make(5, 0.3));
    std::string text = dump(chain_to_json(ex.chain));
    auto back = chain_from_json(parse_text(text));
    EXPECT_EQ(back.bond_dims(), ex.chain.bond_dims());
    EXPECT_EQ(dump(chain_to_json(back)), text);
}

TEST(serialize, state_readers) {
    auto st = ExemplarState::make(3, 0.5);
    auto js = exemplar_joint_state(st);
    auto full = expand_to_qubits(js);
    auto a = state_from_json(full_state_to_json(full, 4));
    auto b = state_from_json(joint_state_to_json(js));
    Json wrapped;
    wrapped["state"] = joint_state_to_json(js);
    auto c = state_from_json(wrapped);
    EXPECT_EQ(a.qubit_count, 4);
    EXPECT_EQ(b.qubit_count, 4);
    EXPECT_EQ(c.qubit_count, 4);
    EXPECT_EQ(a.amplitudes, full);
    EXPECT_EQ(b.amplitudes, full);
    EXPECT_EQ(c.amplitudes, full);
}

TEST(serialize, reports_are_lossless_text) {
    auto r = BeltRegion::make(0.2, 2.7);
    auto g = realize_optimal(r, 3);
    std::vector<Json> docs = {
        constants_to_json(r, 3),
        report_to_json(analytic_optimum(r, 3)),
        oracle_to_json(oracle_optimum(r, 2), analytic_optimum(r, 2).f_bar),
        fidelity_to_json(fidelity_report(g, r, InputState::make(1.0, 0.5))),
        consistency_to_json(verify_case_consistency(r, 3)),
        validity_to_json(validate(g)),
        schmidt_to_json(ExemplarState::make(3, 0.4), exemplar_chain(ExemplarState::make(3, 0.4)).schmidt),
    };
    for (const auto &d : docs) {
        std::string text = dump(d);
        EXPECT_EQ(parse_text(text), d);
        EXPECT_EQ(dump(parse_text(text)), text);
    }
    auto c = constants_to_json(r, 3);
    std::vector<std::string> keys;
    for (auto it = c.begin(); it != c.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"theta1", "theta2", "K", "P", "Q", "R", "case"}));
}

TEST(serialize, malformed_documents_name_the_field) {
    auto expect_error = [](const std::string &text, const std::string &needle, auto reader) {
        try {
            reader(parse_text(text));
            ADD_FAILURE() << "no error for " << text;
        } catch (const ParseError &e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    auto gate_reader = [](const Json &j) { gate_from_json(j); };
    auto chain_reader = [](const Json &j) { chain_from_json(j); };
    expect_error("{\"anc_dim\": 1, \"A\": []}", "m", gate_reader);
    expect_error("{\"m\": 1, \"anc_dim\": 1, \"A\": [[[1,0]],[[0,0]],[[0,0]]]}", "A", gate_reader);
    expect_error("{\"m\": 1, \"anc_dim\": 1, \"A\": [[[1,0]],[[0,0]],[[0]],[[0,0]]]}", "A[2][0]", gate_reader);
    expect_error("{\"m\": 1.5, \"anc_dim\": 1, \"A\": []}", "m", gate_reader);
    expect_error("{\"sites\": []}", "sites", chain_reader);
    expect_error(
        "{\"sites\": [{\"bond_in\": 1, \"bond_out\": 2, \"V0\": [[[1,0]]], \"V1\": [[[0,0]]]}],"
        " \"boundary_in\": [[1,0]], \"boundary_out\": [[1,0]]}",
        "V0", chain_reader);
    EXPECT_THROW(parse_text("{not json"), ParseError);
}
