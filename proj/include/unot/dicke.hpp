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

#ifndef UNOT_DICKE_HPP
#define UNOT_DICKE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace unot {

using Complex = std::complex<double>;

/// Largest copy count for which binomials are computed exactly.
inline constexpr int kMaxExactBinomial = 62;

/// Exact C(n, k) in 64-bit arithmetic; 0 outside 0 <= k <= n.
std::uint64_t binomial_exact(int n, int k);
double binomial(int n, int k);

/// Label of the normalized symmetric state of m qubits with k ones.
struct DickeIndex {
    int m = 0;
    int k = 0;
};

/// Amplitude of `bits` (one '0'/'1' character per qubit) in the Dicke state.
/// Throws std::invalid_argument on a length mismatch or a non-binary character.
double dicke_amplitude(DickeIndex index, std::string_view bits);

/// Output of the gate in the compressed Dicke(M) (x) ancilla basis.
/// amplitudes are row-major over (k = number of ones, ancilla index).
class JointState {
   public:
    JointState() = default;
    JointState(int m, int anc_dim);

    int m() const { return m_; }
    int anc_dim() const { return anc_dim_; }

    Complex &at(int k, int anc) { return amplitudes_[index(k, anc)]; }
    const Complex &at(int k, int anc) const { return amplitudes_[index(k, anc)]; }

    std::span<Complex> amplitudes() { return amplitudes_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    double norm_squared() const;
    /// <this|other>; both states must share (m, anc_dim).
    Complex inner(const JointState &other) const;

   private:
    std::size_t index(int k, int anc) const;

    int m_ = 0;
    int anc_dim_ = 1;
    std::vector<Complex> amplitudes_;
};

/// 2x2 single-qubit density matrix, entries (row, col) over {|0>, |1>}.
struct DensityMatrix2 {
    std::array<Complex, 4> entries{};

    Complex &operator()(int row, int col) { return entries[2 * row + col]; }
    const Complex &operator()(int row, int col) const { return entries[2 * row + col]; }

    Complex trace() const { return entries[0] + entries[3]; }
    /// <v|rho|v> for a qubit vector v = (v0, v1).
    double expectation(Complex v0, Complex v1) const;
    std::array<double, 2> eigenvalues() const;
};

/// Largest copy count accepted by expand_to_qubits (2^(M+1) amplitudes).
inline constexpr int kMaxExpandCopies = 24;

/// Full computational-basis vector. Copy qubit 1 is the least significant bit,
/// the ancilla (when anc_dim == 2) is the most significant one.
std::vector<Complex> expand_to_qubits(const JointState &state);

/// Reduced state of copy qubit `which` (1-based). Computed in the compressed
/// representation; independent of `which` by permutation symmetry.
DensityMatrix2 reduced_single_qubit(const JointState &state, int which);

}  // namespace unot

#endif
