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

#ifndef UNOT_SERIALIZE_HPP
#define UNOT_SERIALIZE_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "unot/belt.hpp"
#include "unot/dicke.hpp"
#include "unot/fidelity.hpp"
#include "unot/gate.hpp"
#include "unot/mps.hpp"
#include "unot/optimizer.hpp"

namespace unot {

using Json = nlohmann::ordered_json;

/// Malformed document; the message names the offending field.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// `value` with 17 significant digits, locale independent.
std::string format_double(double value);

/// Pretty-printed document with 17-significant-digit numbers and a trailing newline.
/// Arrays holding only scalars are kept on one line.
std::string dump(const Json &doc);

Json parse_text(std::string_view text);

Json constants_to_json(const BeltRegion &region, int m);

Json joint_state_to_json(const JointState &state);
JointState joint_state_from_json(const Json &doc);

Json gate_to_json(const GateSpec &spec);
GateSpec gate_from_json(const Json &doc);

/// {qubit_count, amplitudes}
Json full_state_to_json(std::span<const Complex> amplitudes, int qubit_count);

struct FullState {
    int qubit_count = 0;
    std::vector<Complex> amplitudes;
};

/// Accepts a full state, a JointState (expanded to qubits), or an object
/// whose "state" field holds either.
FullState state_from_json(const Json &doc);

Json chain_to_json(const MpsChain &chain);
MpsChain chain_from_json(const Json &doc);

Json report_to_json(const OptimalGateReport &report);
Json oracle_to_json(const OracleResult &result, double analytic_f_bar);
Json fidelity_to_json(const FidelityReport &report);
Json consistency_to_json(const ConsistencyReport &report);
Json validity_to_json(const ValidityReport &report);
Json schmidt_to_json(const ExemplarState &state, const SchmidtData &data);
Json certificate_to_json(const ChainCertificate &cert);

}  // namespace unot

#endif
