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

#include "unot/gate.hpp"

#include <cmath>
#include <stdexcept>

#include "unot/optimizer.hpp"

namespace unot {

InputState InputState::make(double theta, double phi) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
        throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phi must be finite");
    }
    double reduced = std::fmod(phi, 2 * kPi);
    if (reduced < 0) {
        reduced += 2 * kPi;
    }
    if (reduced >= 2 * kPi) {
        reduced = 0.0;
    }
    return InputState{theta, reduced};
}

GateSpec::GateSpec(int m, int anc_dim) : m_(m), anc_dim_(anc_dim) {
    if (m < 1) {
        throw std::invalid_argument("GateSpec: M must be at least 1");
    }
    if (anc_dim < 1) {
        throw std::invalid_argument("GateSpec: anc_dim must be at least 1");
    }
    vectors_.assign(2 * m + 2, Eigen::VectorXcd::Zero(anc_dim));
}

Eigen::VectorXcd &GateSpec::vector(int l) {
    if (l < 0 || l >= vector_count()) {
        throw std::out_of_range("GateSpec: vector index " + std::to_string(l) + " out of range");
    }
    return vectors_[l];
}

const Eigen::VectorXcd &GateSpec::vector(int l) const {
    if (l < 0 || l >= vector_count()) {
        throw std::out_of_range("GateSpec: vector index " + std::to_string(l) + " out of range");
    }
    return vectors_[l];
}

Eigen::MatrixXcd gram(const GateSpec &spec) {
    int n = spec.vector_count();
    Eigen::MatrixXcd g(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            g(k, l) = spec.vector(l).dot(spec.vector(k));  // dot conjugates its left side
        }
    }
    return g;
}

ValidityReport validate(const GateSpec &spec) {
    ValidityReport report;
    int m = spec.m();
    double norm0 = 0.0;
    double norm1 = 0.0;
    Complex cross{};
    for (int k = 0; k <= m; ++k) {
        norm0 += spec.vector(k).squaredNorm();
        norm1 += spec.vector(m + k + 1).squaredNorm();
        cross += spec.vector(2 * m + 1 - k).dot(spec.vector(k));
    }
    report.norm0_residual = std::abs(norm0 - 1.0);
    report.norm1_residual = std::abs(norm1 - 1.0);
    report.cross_residual = std::abs(cross);
    if (!(report.norm0_residual <= kValidityTolerance)) {
        report.failures.push_back("normalization of |0> branch: residual " + std::to_string(report.norm0_residual));
    }
    if (!(report.norm1_residual <= kValidityTolerance)) {
        report.failures.push_back("normalization of |1> branch: residual " + std::to_string(report.norm1_residual));
    }
    if (!(report.cross_residual <= kValidityTolerance)) {
        report.failures.push_back("orthogonality of branches: residual " + std::to_string(report.cross_residual));
    }
    return report;
}

void require_valid(const GateSpec &spec) {
    ValidityReport report = validate(spec);
    if (!report.valid()) {
        std::string msg = "invalid gate:";
        for (const auto &f : report.failures) {
            msg += " " + f + ";";
        }
        throw ValidationError(msg);
    }
}

JointState apply(const GateSpec &spec, const InputState &input) {
    require_valid(spec);
    int m = spec.m();
    Complex c0(std::cos(input.theta / 2), 0.0);
    Complex c1 = std::sin(input.theta / 2) * std::polar(1.0, input.phi);
    JointState out(m, spec.anc_dim());
    for (int k = 0; k <= m; ++k) {
        // First branch contributes A_k; the second branch's Dicke state with
        // k ones carries A_{M + (M - k) + 1}.
        const auto &first = spec.vector(k);
        const auto &second = spec.vector(2 * m + 1 - k);
        for (int a = 0; a < spec.anc_dim(); ++a) {
            out.at(k, a) = c0 * first(a) + c1 * second(a);
        }
    }
    return out;
}

GateSpec realize_diagonals(int m, const std::vector<double> &diagonals, MinusSide side) {
    if (static_cast<int>(diagonals.size()) != 2 * m + 2) {
        throw std::invalid_argument("realize_diagonals: expected " + std::to_string(2 * m + 2) + " diagonals");
    }
    for (double a : diagonals) {
        if (!(a >= 0.0)) {
            throw std::invalid_argument("realize_diagonals: diagonals must be non-negative");
        }
    }
    // Items in cross-orthogonality order: second-branch slack a_{2M+1}, the
    // pairs j = 0..M-1, then first-branch slack a_M. Only neighbours share a
    // term of sum_k <A_{2M+1-k}|A_k>.
    int items = m + 2;
    auto active = [&](int item) {
        if (item == 0) {
            return diagonals[2 * m + 1] > 0.0;
        }
        if (item == items - 1) {
            return diagonals[m] > 0.0;
        }
        int j = item - 1;
        return diagonals[j] > 0.0 || diagonals[2 * m - j] > 0.0;
    };
    std::vector<int> colour(items, 1);
    int item = 0;
    while (item < items) {
        if (!active(item)) {
            ++item;
            continue;
        }
        int end = item;
        while (end + 1 < items && active(end + 1)) {
            ++end;
        }
        int anchor = -1;
        for (int i = item; i <= end; ++i) {
            if (i != 0 && i != items - 1) {
                anchor = i;
                break;
            }
        }
        for (int i = item; i <= end; ++i) {
            colour[i] = anchor < 0 ? 1 : std::abs(i - anchor) % 2;
        }
        item = end + 1;
    }

    GateSpec spec(m, 2);
    auto basis = [](int c) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2);
        v(c) = 1.0;
        return v;
    };
    spec.vector(2 * m + 1) = std::sqrt(diagonals[2 * m + 1]) * basis(colour[0]);
    spec.vector(m) = std::sqrt(diagonals[m]) * basis(colour[items - 1]);
    for (int j = 0; j < m; ++j) {
        Eigen::VectorXcd e = basis(colour[j + 1]);
        double first = std::sqrt(diagonals[j]);
        double second = std::sqrt(diagonals[2 * m - j]);
        if (side == MinusSide::First) {
            first = -first;
        } else {
            second = -second;
        }
        spec.vector(j) = first * e;
        spec.vector(2 * m - j) = second * e;
    }
    return spec;
}

namespace {

MinusSide minus_side_for(CaseKind kind) {
    return (kind == CaseKind::Case1 || kind == CaseKind::Case3) ? MinusSide::First : MinusSide::Second;
}

}  // namespace

GateSpec realize_optimal(const BeltRegion &region, int m) {
    OptimalGateReport report = analytic_optimum(region, m);
    return realize_diagonals(m, report.a_diagonals, minus_side_for(report.case_id.kind));
}

GateSpec realize_case_family(const BeltRegion &region, int m, CaseKind kind) {
    CaseSolution sol = case_family_solution(region, m, kind);
    return realize_diagonals(m, sol.a_diagonals, minus_side_for(kind));
}

}  // namespace unot
