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

#include "unot/mps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace unot {

ExemplarState ExemplarState::make(int m, double gamma) {
    if (m < 1 || m % 2 == 0) {
        throw std::invalid_argument("exemplar state needs odd M >= 1, got " + std::to_string(m));
    }
    if (m > kMaxExpandCopies) {
        throw std::invalid_argument("exemplar state: M exceeds " + std::to_string(kMaxExpandCopies));
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("gamma must lie in [0, 1]");
    }
    return ExemplarState{m, gamma};
}

JointState exemplar_joint_state(const ExemplarState &state) {
    JointState out(state.m, 2);
    out.at((state.m - 1) / 2, 0) = -std::sqrt(state.gamma);
    out.at(state.m, 1) = std::sqrt(1.0 - state.gamma);
    return out;
}

std::vector<int> MpsChain::bond_dims() const {
    std::vector<int> dims;
    if (sites.empty()) {
        return dims;
    }
    dims.push_back(sites.front().bond_in);
    for (const auto &s : sites) {
        dims.push_back(s.bond_out);
    }
    return dims;
}

void check_chain_shape(const MpsChain &chain) {
    if (chain.sites.empty()) {
        throw std::invalid_argument("chain has no sites");
    }
    for (int n = 0; n < chain.site_count(); ++n) {
        const MpsSite &s = chain.sites[n];
        std::string where = "site " + std::to_string(n + 1);
        if (s.bond_in < 1 || s.bond_out < 1) {
            throw std::invalid_argument(where + ": bond dimensions must be positive");
        }
        for (int i = 0; i < 2; ++i) {
            if (s.v[i].rows() != s.bond_out || s.v[i].cols() != s.bond_in) {
                throw std::invalid_argument(where + ": V" + std::to_string(i) + " is " + std::to_string(s.v[i].rows()) +
                                            "x" + std::to_string(s.v[i].cols()) + ", expected " +
                                            std::to_string(s.bond_out) + "x" + std::to_string(s.bond_in));
            }
        }
        if (n > 0 && chain.sites[n - 1].bond_out != s.bond_in) {
            throw std::invalid_argument(where + ": bond_in does not match the previous bond_out");
        }
    }
    if (chain.boundary_in.size() != chain.sites.front().bond_in) {
        throw std::invalid_argument("boundary_in length does not match the first bond");
    }
    if (chain.boundary_out.size() != chain.sites.back().bond_out) {
        throw std::invalid_argument("boundary_out length does not match the last bond");
    }
}

std::vector<double> exemplar_lambdas(const ExemplarState &state, int n) {
    int m = state.m;
    if (m % 2 == 0) {
        throw std::invalid_argument("exemplar_lambdas: M must be odd");
    }
    if (n < 1 || n > m) {
        throw std::invalid_argument("exemplar_lambdas: cut must lie in 1..M");
    }
    int half = (m - 1) / 2;
    double g = state.gamma;
    double norm = binomial(m, half);
    std::vector<double> lambda(n + 1, 0.0);
    // Dicke part splits hypergeometrically; l = n also collects |1..1>|1>.
    int l_lo = std::max(0, n - (m + 1) / 2);
    int l_hi = std::min(n - 1, half);
    for (int l = l_lo; l <= l_hi; ++l) {
        lambda[l] = std::sqrt(g * binomial(n, l) * binomial(m - n, half - l) / norm);
    }
    double last = 1.0 - g + g * binomial(m - n, half - n) / norm;
    lambda[n] = std::sqrt(std::max(0.0, last));
    return lambda;
}

ExemplarChain exemplar_chain(const ExemplarState &state) {
    int m = state.m;
    int half = (m - 1) / 2;
    ExemplarChain out;
    SchmidtData &sd = out.schmidt;

    std::vector<std::vector<double>> lambda(m + 1);
    lambda[0] = {1.0};
    sd.kept.push_back({0});
    for (int n = 1; n <= m; ++n) {
        lambda[n] = exemplar_lambdas(state, n);
        sd.lambdas.push_back(lambda[n]);
        std::vector<int> kept;
        for (int l = 0; l <= n; ++l) {
            if (lambda[n][l] > kSchmidtTrim) {
                kept.push_back(l);
            }
        }
        sd.kept.push_back(kept);
    }

    MpsChain &chain = out.chain;
    for (int n = 1; n <= m; ++n) {
        const auto &in = sd.kept[n - 1];
        const auto &outk = sd.kept[n];
        int din = static_cast<int>(in.size());
        int dout = static_cast<int>(outk.size());
        MpsSite site;
        site.bond_in = din;
        site.bond_out = dout;
        std::array<Eigen::MatrixXd, 2> gamma{Eigen::MatrixXd::Zero(din, dout), Eigen::MatrixXd::Zero(din, dout)};
        for (int i = 0; i < 2; ++i) {
            site.v[i] = Eigen::MatrixXcd::Zero(dout, din);
        }
        for (int b = 0; b < din; ++b) {
            int l = in[b];
            for (int i = 0; i < 2; ++i) {
                auto it = std::find(outk.begin(), outk.end(), l + i);
                if (it == outk.end()) {
                    continue;  // trimmed branch, lambda = 0
                }
                int a = static_cast<int>(it - outk.begin());
                double g = std::sqrt(binomial(n - 1, l)) / (lambda[n - 1][l] * std::sqrt(binomial(n, l + i)));
                gamma[i](b, a) = g;
                site.v[i](a, b) = g * lambda[n][l + i];
            }
        }
        sd.gammas.push_back(gamma);
        chain.sites.push_back(std::move(site));
    }

    // Final qubit: the remaining one-qubit states are -|0> (l = (M-1)/2) and |1> (l = M).
    const auto &last = sd.kept[m];
    MpsSite site;
    site.bond_in = static_cast<int>(last.size());
    site.bond_out = 1;
    for (int i = 0; i < 2; ++i) {
        site.v[i] = Eigen::MatrixXcd::Zero(1, site.bond_in);
    }
    for (int b = 0; b < site.bond_in; ++b) {
        if (last[b] == half) {
            site.v[0](0, b) = -1.0;
        } else if (last[b] == m) {
            site.v[1](0, b) = 1.0;
        }
    }
    chain.sites.push_back(std::move(site));
    chain.boundary_in = Eigen::VectorXcd::Ones(1);
    chain.boundary_out = Eigen::VectorXcd::Ones(1);
    return out;
}

namespace {

void check_state(std::span<const Complex> amplitudes, int qubit_count, int max_qubits) {
    if (qubit_count < 1 || qubit_count > max_qubits) {
        throw std::invalid_argument("qubit count must lie in 1.." + std::to_string(max_qubits));
    }
    if (amplitudes.size() != (std::size_t{1} << qubit_count)) {
        throw std::invalid_argument("state has " + std::to_string(amplitudes.size()) + " amplitudes, expected 2^" +
                                    std::to_string(qubit_count));
    }
}

}  // namespace

MpsChain generic_chain(std::span<const Complex> amplitudes, int qubit_count) {
    check_state(amplitudes, qubit_count, kMaxGenericQubits);
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(std::sqrt(norm) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("generic_chain: state is not normalized (norm " + std::to_string(std::sqrt(norm)) +
                                    ")");
    }

    int n_sites = qubit_count;
    std::vector<MpsSite> reversed;
    // rows: (bond, qubit value) with row = bond * 2 + value; columns: the
    // lower qubits as an integer.
    Eigen::MatrixXcd block(2, std::size_t{1} << (n_sites - 1));
    std::size_t half = std::size_t{1} << (n_sites - 1);
    for (std::size_t c = 0; c < half; ++c) {
        block(0, c) = amplitudes[c];
        block(1, c) = amplitudes[half + c];
    }
    int bond = 1;
    for (int n = n_sites; n >= 2; --n) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(block, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto &s = svd.singularValues();
        double smax = s.size() > 0 ? s(0) : 0.0;
        int rank = 0;
        for (int i = 0; i < s.size(); ++i) {
            if (s(i) > 1e-12 * smax) {
                ++rank;
            }
        }
        rank = std::max(rank, 1);
        MpsSite site;
        site.bond_out = bond;
        site.bond_in = rank;
        for (int i = 0; i < 2; ++i) {
            site.v[i] = Eigen::MatrixXcd(bond, rank);
            for (int a = 0; a < bond; ++a) {
                site.v[i].row(a) = svd.matrixU().row(a * 2 + i).head(rank);
            }
        }
        reversed.push_back(std::move(site));

        Eigen::MatrixXcd rest = s.head(rank).asDiagonal() * svd.matrixV().leftCols(rank).adjoint();
        std::size_t cols = std::size_t{1} << (n - 2);
        Eigen::MatrixXcd next(2 * rank, cols);
        for (int b = 0; b < rank; ++b) {
            for (std::size_t c = 0; c < cols; ++c) {
                next(2 * b, c) = rest(b, c);
                next(2 * b + 1, c) = rest(b, cols + c);
            }
        }
        block = std::move(next);
        bond = rank;
    }
    MpsSite first;
    first.bond_out = bond;
    first.bond_in = 1;
    double col_norm = block.col(0).norm();
    for (int i = 0; i < 2; ++i) {
        first.v[i] = Eigen::MatrixXcd(bond, 1);
        for (int a = 0; a < bond; ++a) {
            first.v[i](a, 0) = block(a * 2 + i, 0) / col_norm;
        }
    }
    reversed.push_back(std::move(first));

    MpsChain chain;
    chain.sites.assign(std::make_move_iterator(reversed.rbegin()), std::make_move_iterator(reversed.rend()));
    chain.boundary_in = Eigen::VectorXcd::Ones(1);
    chain.boundary_out = Eigen::VectorXcd::Ones(1);
    return chain;
}

std::vector<Complex> contract(const MpsChain &chain) {
    check_chain_shape(chain);
    int n_sites = chain.site_count();
    if (n_sites > 24) {
        throw std::invalid_argument("contract: too many sites for a dense state");
    }
    // partial[index] = V[n]...V[1] phi_I for the first n qubit values.
    std::vector<Eigen::VectorXcd> partial{chain.boundary_in};
    for (int n = 0; n < n_sites; ++n) {
        const MpsSite &s = chain.sites[n];
        std::vector<Eigen::VectorXcd> next(partial.size() * 2);
        std::size_t stride = partial.size();
        for (int i = 0; i < 2; ++i) {
            for (std::size_t idx = 0; idx < stride; ++idx) {
                next[i * stride + idx] = s.v[i] * partial[idx];
            }
        }
        partial = std::move(next);
    }
    std::vector<Complex> out(partial.size());
    for (std::size_t idx = 0; idx < partial.size(); ++idx) {
        out[idx] = chain.boundary_out.dot(partial[idx]);
    }
    return out;
}

std::vector<double> isometry_residuals(const MpsChain &chain) {
    check_chain_shape(chain);
    std::vector<double> out;
    for (const auto &s : chain.sites) {
        Eigen::MatrixXcd sum = s.v[0].adjoint() * s.v[0] + s.v[1].adjoint() * s.v[1];
        sum -= Eigen::MatrixXcd::Identity(s.bond_in, s.bond_in);
        out.push_back(sum.cwiseAbs().maxCoeff());
    }
    return out;
}

std::vector<double> schmidt_spectrum(std::span<const Complex> amplitudes, int qubit_count, int cut) {
    check_state(amplitudes, qubit_count, kMaxExpandCopies + 1);
    if (cut < 1 || cut >= qubit_count) {
        throw std::invalid_argument("schmidt_spectrum: cut must lie in 1..N-1");
    }
    std::size_t rows = std::size_t{1} << cut;
    std::size_t cols = std::size_t{1} << (qubit_count - cut);
    Eigen::MatrixXcd mat(rows, cols);
    for (std::size_t hi = 0; hi < cols; ++hi) {
        for (std::size_t lo = 0; lo < rows; ++lo) {
            mat(lo, hi) = amplitudes[lo + rows * hi];
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
    const auto &s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

ChainCertificate verify_chain(const MpsChain &chain, std::span<const Complex> reference) {
    check_chain_shape(chain);
    if (reference.size() != (std::size_t{1} << chain.site_count())) {
        throw std::invalid_argument("reference has " + std::to_string(reference.size()) +
                                    " amplitudes but the chain has " + std::to_string(chain.site_count()) + " sites");
    }
    ChainCertificate cert;
    cert.site_residuals = isometry_residuals(chain);
    cert.max_residual = *std::max_element(cert.site_residuals.begin(), cert.site_residuals.end());
    std::vector<Complex> state = contract(chain);
    Complex overlap{};
    for (std::size_t i = 0; i < state.size(); ++i) {
        overlap += std::conj(reference[i]) * state[i];
    }
    cert.overlap = std::abs(overlap);
    cert.passed = cert.max_residual < kIsometryTolerance && cert.overlap > 1.0 - kOverlapTolerance;
    return cert;
}

}  // namespace unot
