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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unot {

namespace {

// -Re<A_{2M-j}|A_j>: the coupling between Dicke labels j and j+1 that
// survives the azimuth average.
double signed_coupling(const GateSpec &spec, int j) {
    int m = spec.m();
    return -spec.vector(2 * m - j).dot(spec.vector(j)).real();
}

}  // namespace

double fidelity_sim(const GateSpec &spec, const InputState &input) {
    JointState out = apply(spec, input);
    DensityMatrix2 rho = reduced_single_qubit(out, 1);
    Complex perp0(std::sin(input.theta / 2), 0.0);
    Complex perp1 = -std::cos(input.theta / 2) * std::polar(1.0, input.phi);
    return rho.expectation(perp0, perp1);
}

double fidelity_phi_average(const GateSpec &spec, double theta, int phi_nodes) {
    if (phi_nodes < 1) {
        throw std::invalid_argument("phi_nodes must be positive");
    }
    double total = 0.0;
    for (int i = 0; i < phi_nodes; ++i) {
        double phi = 2 * kPi * i / phi_nodes;
        total += fidelity_sim(spec, InputState{theta, phi});
    }
    return total / phi_nodes;
}

double fidelity_formula(const GateSpec &spec, double theta) {
    int m = spec.m();
    auto a = [&](int l) { return spec.vector(l).squaredNorm(); };
    double c2 = std::pow(std::cos(theta / 2), 2);
    double s2 = std::pow(std::sin(theta / 2), 2);

    double bracket = 0.0;
    double sin4_sum = 0.0;
    double cos4_sum = 0.0;
    for (int k = 0; k < m; ++k) {
        bracket += static_cast<double>(m - k) / m * (a(k) + a(m + k + 1));
        bracket += 2 * std::sqrt(static_cast<double>(m - k) * (k + 1)) / m * signed_coupling(spec, m - k - 1);
        sin4_sum += binomial(m - 1, m - k - 1) / binomial(m, k + 1) * a(m + k + 2);
        cos4_sum += binomial(m - 1, k) / binomial(m, k + 1) * a(k + 1);
    }
    return s2 * c2 * bracket + s2 * s2 * sin4_sum + c2 * c2 * cos4_sum;
}

double avg_fidelity_closed(const GateSpec &spec, const BeltRegion &region) {
    require_valid(spec);
    int m = spec.m();
    BeltConstants bc = belt_constants(region);
    double coupling = 0.0;
    double first = 0.0;
    double second = 0.0;
    for (int k = 0; k < m; ++k) {
        coupling += std::sqrt(static_cast<double>(m - k) * (k + 1)) / m * signed_coupling(spec, m - k - 1);
        first += static_cast<double>(m - k) / m * spec.vector(k).squaredNorm();
        second += static_cast<double>(m - k) / m * spec.vector(m + k + 1).squaredNorm();
    }
    return 0.5 + bc.k / 6 + bc.p * coupling - bc.q * first - bc.r * second;
}

QuadratureRule gauss_legendre(int order, double lo, double hi) {
    if (order < 1) {
        throw std::invalid_argument("quadrature order must be positive");
    }
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    double mid = 0.5 * (hi + lo);
    double half = 0.5 * (hi - lo);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[order - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[order - 1 - i] = half * w;
    }
    return rule;
}

double avg_fidelity_quadrature(const GateSpec &spec, const BeltRegion &region, int nodes, int phi_nodes) {
    if (nodes < 8) {
        throw std::invalid_argument("quadrature needs at least 8 theta nodes");
    }
    if (phi_nodes < 16) {
        throw std::invalid_argument("quadrature needs at least 16 phi nodes");
    }
    require_valid(spec);
    if (region.degenerate()) {
        return fidelity_phi_average(spec, region.theta1, phi_nodes);
    }
    double u_lo = std::cos(region.theta2);
    double u_hi = std::cos(region.theta1);
    QuadratureRule rule = gauss_legendre(nodes, u_lo, u_hi);
    double total = 0.0;
    for (int i = 0; i < nodes; ++i) {
        double u = std::clamp(rule.nodes[i], -1.0, 1.0);
        total += rule.weights[i] * fidelity_phi_average(spec, std::acos(u), phi_nodes);
    }
    // The weights integrate to u_hi - u_lo = int sin(theta) dtheta.
    return total / (u_hi - u_lo);
}

FidelityReport fidelity_report(const GateSpec &spec, const BeltRegion &region, const InputState &input, int nodes,
                               int phi_nodes) {
    FidelityReport r;
    r.theta = input.theta;
    r.phi = input.phi;
    r.pointwise_sim = fidelity_sim(spec, input);
    r.pointwise_phi_average = fidelity_phi_average(spec, input.theta, phi_nodes);
    r.pointwise_formula = fidelity_formula(spec, input.theta);
    r.avg_closed = avg_fidelity_closed(spec, region);
    r.avg_quadrature = avg_fidelity_quadrature(spec, region, nodes, phi_nodes);
    r.pointwise_residual = std::abs(r.pointwise_phi_average - r.pointwise_formula);
    r.avg_residual = std::abs(r.avg_closed - r.avg_quadrature);
    return r;
}

}  // namespace unot
