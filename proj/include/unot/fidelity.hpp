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

#ifndef UNOT_FIDELITY_HPP
#define UNOT_FIDELITY_HPP

#include <vector>

#include "unot/belt.hpp"
#include "unot/gate.hpp"

namespace unot {

/// <psi_perp|rho|psi_perp> for one copy, with
/// |psi_perp> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>.
double fidelity_sim(const GateSpec &spec, const InputState &input);

/// Mean of fidelity_sim over `phi_nodes` equally spaced azimuths.
double fidelity_phi_average(const GateSpec &spec, double theta, int phi_nodes);

/// Closed-form azimuth-averaged fidelity at polar angle theta, evaluated from
/// the Gram matrix. Pair couplings enter as -Re<A_{M+k+1}|A_{M-k-1}>, which
/// equals sqrt(a_{M+k+1} a_{M-k-1}) for saturated negative couplings.
double fidelity_formula(const GateSpec &spec, double theta);

/// Belt-averaged fidelity from K, P, Q, R and the Gram matrix (needs a valid gate).
double avg_fidelity_closed(const GateSpec &spec, const BeltRegion &region);

/// Gauss-Legendre nodes and weights on [lo, hi].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int order, double lo, double hi);

inline constexpr int kDefaultThetaNodes = 64;
inline constexpr int kDefaultPhiNodes = 64;

/// Belt average of fidelity_sim: Gauss-Legendre in u = cos(theta), where the
/// sin(theta) weight is uniform, times an equally spaced azimuth rule. A
/// degenerate belt reduces to the azimuth average on its circle.
double avg_fidelity_quadrature(const GateSpec &spec, const BeltRegion &region, int nodes = kDefaultThetaNodes,
                               int phi_nodes = kDefaultPhiNodes);

struct FidelityReport {
    double theta = 0.0;
    double phi = 0.0;
    double pointwise_sim = 0.0;
    double pointwise_phi_average = 0.0;
    double pointwise_formula = 0.0;
    double avg_closed = 0.0;
    double avg_quadrature = 0.0;
    double pointwise_residual = 0.0;  // |phi average - formula|
    double avg_residual = 0.0;        // |closed - quadrature|
};

FidelityReport fidelity_report(const GateSpec &spec, const BeltRegion &region, const InputState &input,
                               int nodes = kDefaultThetaNodes, int phi_nodes = kDefaultPhiNodes);

}  // namespace unot

#endif
