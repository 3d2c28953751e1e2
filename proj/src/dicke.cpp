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
#include <cmath>
#include <stdexcept>
#include <string>

namespace unot {

std::uint64_t binomial_exact(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (n > kMaxExactBinomial) {
        throw std::invalid_argument("binomial_exact: n exceeds " + std::to_string(kMaxExactBinomial));
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step.
        result = result / static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n - k + i) +
                 result % static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n - k + i) /
                     static_cast<std::uint64_t>(i);
    }
    return result;
}

double binomial(int n, int k) {
    return static_cast<double>(binomial_exact(n, k));
}

double dicke_amplitude(DickeIndex index, std::string_view bits) {
    if (index.m < 0 || index.k < 0 || index.k > index.m) {
        throw std::invalid_argument("dicke_amplitude: need 0 <= k <= m");
    }
    if (static_cast<int>(bits.size()) != index.m) {
        throw std::invalid_argument("dicke_amplitude: bitstring length " + std::to_string(bits.size()) +
                                    " does not match m = " + std::to_string(index.m));
    }
    int ones = 0;
    for (char c : bits) {
        if (c == '1') {
            ++ones;
        } else if (c != '0') {
            throw std::invalid_argument("dicke_amplitude: bitstring must contain only '0' and '1'");
        }
    }
    if (ones != index.k) {
        return 0.0;
    }
    return 1.0 / std::sqrt(binomial(index.m, index.k));
}

JointState::JointState(int m, int anc_dim) : m_(m), anc_dim_(anc_dim) {
    if (m < 1) {
        throw std::invalid_argument("JointState: m must be at least 1");
    }
    if (anc_dim < 1) {
        throw std::invalid_argument("JointState: anc_dim must be at least 1");
    }
    amplitudes_.assign(static_cast<std::size_t>(m + 1) * anc_dim, Complex{});
}

std::size_t JointState::index(int k, int anc) const {
    if (k < 0 || k > m_ || anc < 0 || anc >= anc_dim_) {
        throw std::out_of_range("JointState index out of range");
    }
    return static_cast<std::size_t>(k) * anc_dim_ + anc;
}

double JointState::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

Complex JointState::inner(const JointState &other) const {
    if (other.m_ != m_ || other.anc_dim_ != anc_dim_) {
        throw std::invalid_argument("JointState::inner: shape mismatch");
    }
    Complex total{};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return total;
}

double DensityMatrix2::expectation(Complex v0, Complex v1) const {
    Complex value = std::conj(v0) * ((*this)(0, 0) * v0 + (*this)(0, 1) * v1) +
                    std::conj(v1) * ((*this)(1, 0) * v0 + (*this)(1, 1) * v1);
    return value.real();
}

std::array<double, 2> DensityMatrix2::eigenvalues() const {
    double a = (*this)(0, 0).real();
    double d = (*this)(1, 1).real();
    double off = std::abs((*this)(0, 1));
    double mean = 0.5 * (a + d);
    double radius = std::hypot(0.5 * (a - d), off);
    return {mean - radius, mean + radius};
}

std::vector<Complex> expand_to_qubits(const JointState &state) {
    if (state.anc_dim() > 2) {
        throw std::invalid_argument("expand_to_qubits: anc_dim " + std::to_string(state.anc_dim()) +
                                    " > 2 is not supported");
    }
    int m = state.m();
    if (m > kMaxExpandCopies) {
        throw std::invalid_argument("expand_to_qubits: m exceeds " + std::to_string(kMaxExpandCopies));
    }
    std::size_t copies_dim = std::size_t{1} << m;
    std::vector<Complex> out(copies_dim * state.anc_dim());
    std::vector<double> weight(m + 1);
    for (int k = 0; k <= m; ++k) {
        weight[k] = 1.0 / std::sqrt(binomial(m, k));
    }
    for (int anc = 0; anc < state.anc_dim(); ++anc) {
        for (std::size_t bits = 0; bits < copies_dim; ++bits) {
            int k = std::popcount(bits);
            out[anc * copies_dim + bits] = state.at(k, anc) * weight[k];
        }
    }
    return out;
}

DensityMatrix2 reduced_single_qubit(const JointState &state, int which) {
    int m = state.m();
    if (which < 1 || which > m) {
        throw std::out_of_range("reduced_single_qubit: qubit index " + std::to_string(which) + " outside 1.." +
                                std::to_string(m));
    }
    // |D(m,k)> = sqrt((m-k)/m) |0>|D(m-1,k)> + sqrt(k/m) |1>|D(m-1,k-1)>, so the
    // single-qubit marginal only couples neighbouring k.
    DensityMatrix2 rho;
    double inv_m = 1.0 / m;
    int d = state.anc_dim();
    for (int k = 0; k <= m; ++k) {
        double row_norm = 0.0;
        for (int anc = 0; anc < d; ++anc) {
            row_norm += std::norm(state.at(k, anc));
        }
        rho(0, 0) += (m - k) * inv_m * row_norm;
        rho(1, 1) += k * inv_m * row_norm;
        if (k < m) {
            Complex overlap{};
            for (int anc = 0; anc < d; ++anc) {
                overlap += std::conj(state.at(k + 1, anc)) * state.at(k, anc);
            }
            rho(0, 1) += std::sqrt(static_cast<double>(m - k) * (k + 1)) * inv_m * overlap;
        }
    }
    rho(1, 0) = std::conj(rho(0, 1));
    return rho;
}

}  // namespace unot
