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

#ifndef UNOT_GATE_HPP
#define UNOT_GATE_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "unot/belt.hpp"
#include "unot/dicke.hpp"

namespace unot {

/// Raised when a gate or chain fails its structural checks.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Pure input qubit cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
struct InputState {
    double theta = 0.0;
    double phi = 0.0;

    /// theta in [0, pi]; phi is reduced into [0, 2 pi).
    static InputState make(double theta, double phi);
};

/// The 1-to-M NOT gate as its 2M+2 ancilla vectors |A_0> ... |A_{2M+1}>.
///
/// |0>|X> -> sum_k |D(M, k)>   (x) |A_k>
/// |1>|X> -> sum_k |D(M, M-k)> (x) |A_{M+k+1}>
///
/// where D(M, j) is the Dicke state with j ones. Vectors 0..M belong to the
/// first branch and M+1..2M+1 to the second; in the second branch vector
/// M+k+1 multiplies the Dicke state with M-k ones.
class GateSpec {
   public:
    GateSpec() = default;
    GateSpec(int m, int anc_dim);

    int m() const { return m_; }
    int anc_dim() const { return anc_dim_; }
    int vector_count() const { return 2 * m_ + 2; }

    Eigen::VectorXcd &vector(int l);
    const Eigen::VectorXcd &vector(int l) const;
    const std::vector<Eigen::VectorXcd> &vectors() const { return vectors_; }

   private:
    int m_ = 0;
    int anc_dim_ = 0;
    std::vector<Eigen::VectorXcd> vectors_;
};

/// gram(k, l) = <A_l|A_k>.
Eigen::MatrixXcd gram(const GateSpec &spec);

/// Residuals of the isometry conditions on span{|0>,|1>}.
struct ValidityReport {
    double norm0_residual = 0.0;
    double norm1_residual = 0.0;
    double cross_residual = 0.0;
    std::vector<std::string> failures;

    bool valid() const { return failures.empty(); }
};

inline constexpr double kValidityTolerance = 1e-12;

ValidityReport validate(const GateSpec &spec);

/// Throws ValidationError listing the failed checks.
void require_valid(const GateSpec &spec);

/// Gate output for one input qubit, second branch re-indexed by ones count.
JointState apply(const GateSpec &spec, const InputState &input);

/// Which vector of a coupled pair carries the minus sign.
enum class MinusSide { First, Second };

/// Builds a two-dimensional-ancilla gate from a Gram-diagonal assignment.
///
/// `diagonals` holds a_0 ... a_{2M+1}. Coupled pairs are (a_j, a_{2M-j}),
/// j < M, realised on one ancilla basis vector with <A_{2M-j}|A_j> =
/// -sqrt(a_j a_{2M-j}); a_M and a_{2M+1} are uncoupled. Items adjacent in
/// the cross-orthogonality sum get different basis vectors.
GateSpec realize_diagonals(int m, const std::vector<double> &diagonals, MinusSide side);

/// Gate achieving the global optimum of the belt-averaged fidelity.
GateSpec realize_optimal(const BeltRegion &region, int m);

/// Gate of the closed-form case family for `kind`, on the up/down ancilla basis.
GateSpec realize_case_family(const BeltRegion &region, int m, CaseKind kind);

}  // namespace unot

#endif
