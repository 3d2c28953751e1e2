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

#ifndef UNOT_MPS_HPP
#define UNOT_MPS_HPP

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "unot/dicke.hpp"

namespace unot {

/// -sqrt(gamma)|D(M,(M-1)/2)>|0> + sqrt(1-gamma)|1...1>|1>, M odd: the
/// |0>-branch output of the odd-M, first-ordering optimal gate.
struct ExemplarState {
    int m = 1;
    double gamma = 1.0;

    /// Rejects even M and gamma outside [0, 1].
    static ExemplarState make(int m, double gamma);
};

JointState exemplar_joint_state(const ExemplarState &state);

/// One sequential-generation step. v[i] is bond_out x bond_in and the step
/// is an isometry: sum_i v[i]^dagger v[i] = 1 on the input bond.
struct MpsSite {
    int bond_in = 1;
    int bond_out = 1;
    std::array<Eigen::MatrixXcd, 2> v;
};

/// psi(i_1..i_N) = <phi_F| V[N]^{i_N} ... V[1]^{i_1} |phi_I>, site 1 is the
/// least significant qubit and is generated first.
struct MpsChain {
    std::vector<MpsSite> sites;
    Eigen::VectorXcd boundary_in;
    Eigen::VectorXcd boundary_out;

    int site_count() const { return static_cast<int>(sites.size()); }
    /// bond_dims[0] is the input bond of site 1, bond_dims[N] the output of site N.
    std::vector<int> bond_dims() const;
};

/// Throws std::invalid_argument when bonds of neighbouring sites, matrix
/// shapes, or boundary vectors disagree.
void check_chain_shape(const MpsChain &chain);

/// Schmidt coefficients of the exemplar at every cut, from the closed form,
/// and the Vidal tensors of the analytic chain.
struct SchmidtData {
    std::vector<std::vector<double>> lambdas;  // cut n = 1..M, entries for l = 0..n
    std::vector<std::vector<int>> kept;        // cut n = 0..M, labels l with lambda > 0
    std::vector<std::array<Eigen::MatrixXd, 2>> gammas;  // site n = 1..M, bond_{n-1} x bond_n
};

/// Labels with coefficients at or below this value are trimmed from the bonds.
inline constexpr double kSchmidtTrim = 1e-14;

/// Closed-form Schmidt coefficients across the cut after qubit n (1 <= n <= M),
/// listed by the number l of ones among the first n qubits.
std::vector<double> exemplar_lambdas(const ExemplarState &state, int n);

struct ExemplarChain {
    MpsChain chain;
    SchmidtData schmidt;
};

ExemplarChain exemplar_chain(const ExemplarState &state);

inline constexpr int kMaxGenericQubits = 14;
inline constexpr double kNormTolerance = 1e-10;

/// Sequential SVD from the last generated qubit down to the first; singular
/// values below 1e-12 of the largest are dropped.
MpsChain generic_chain(std::span<const Complex> amplitudes, int qubit_count);

/// Dense state of the chain over 2^N amplitudes.
std::vector<Complex> contract(const MpsChain &chain);

/// max |sum_i V^dagger V - 1| per site.
std::vector<double> isometry_residuals(const MpsChain &chain);

/// Singular values (descending) of the state reshaped across the cut after `cut` qubits.
std::vector<double> schmidt_spectrum(std::span<const Complex> amplitudes, int qubit_count, int cut);

struct ChainCertificate {
    std::vector<double> site_residuals;
    double max_residual = 0.0;
    double overlap = 0.0;  // |<reference|chain>|
    bool passed = false;
};

inline constexpr double kIsometryTolerance = 1e-12;
inline constexpr double kOverlapTolerance = 1e-10;

ChainCertificate verify_chain(const MpsChain &chain, std::span<const Complex> reference);

}  // namespace unot

#endif
