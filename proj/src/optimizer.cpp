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

#include "unot/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "unot/fidelity.hpp"
#include "unot/gate.hpp"

namespace unot {

double averaged_objective(const BeltConstants &bc, int m, std::span<const double> a) {
    if (static_cast<int>(a.size()) != 2 * m + 2) {
        throw std::invalid_argument("averaged_objective: expected 2M+2 diagonals");
    }
    double coupling = 0.0;
    double first = 0.0;
    double second = 0.0;
    for (int k = 0; k < m; ++k) {
        coupling += std::sqrt(static_cast<double>(m - k) * (k + 1)) / m * std::sqrt(a[m + k + 1] * a[m - k - 1]);
        first += static_cast<double>(m - k) / m * a[k];
        second += static_cast<double>(m - k) / m * a[m + k + 1];
    }
    return 0.5 + bc.k / 6 + bc.p * coupling - bc.q * first - bc.r * second;
}

CaseSolution case_family_solution(const BeltRegion &region, int m, CaseKind kind) {
    if (m < 1) {
        throw std::invalid_argument("M must be at least 1");
    }
    bool odd = (m % 2) == 1;
    bool kind_odd = kind == CaseKind::Case1 || kind == CaseKind::Case2;
    if (odd != kind_odd) {
        throw std::invalid_argument("case family parity does not match M");
    }
    BeltConstants bc = belt_constants(region);
    double base = 0.5 + bc.k / 6;
    double mm = m;

    CaseSolution sol;
    sol.kind = kind;
    sol.a_diagonals.assign(2 * m + 2, 0.0);
    bool first_side = kind == CaseKind::Case1 || kind == CaseKind::Case3;
    double divisor = first_side ? bc.q : bc.r;
    double other = first_side ? bc.r : bc.q;

    double ratio;
    if (divisor <= kDegenerateConstant) {
        ratio = std::numeric_limits<double>::infinity();
    } else if (odd) {
        ratio = std::pow(bc.p / (2 * divisor), 2);
    } else {
        ratio = bc.p * bc.p * (mm + 2) / (4 * divisor * divisor * mm);
    }
    sol.boundary_hit = !(ratio < 1.0);
    sol.a_star = sol.boundary_hit ? 1.0 : ratio;
    double a = sol.a_star;

    if (odd) {
        int low = (m - 1) / 2;
        int high = (3 * m + 1) / 2;
        double scale = (mm + 1) / (2 * mm);
        if (first_side) {
            sol.a_diagonals[low] = a;
            sol.a_diagonals[m] = 1 - a;
            sol.a_diagonals[high] = 1;
        } else {
            sol.a_diagonals[low] = 1;
            sol.a_diagonals[high] = a;
            sol.a_diagonals[2 * m + 1] = 1 - a;
        }
        sol.f_bar = sol.boundary_hit ? base + scale * (bc.p - bc.q - bc.r)
                                     : base + scale * (bc.p * bc.p / (4 * divisor) - other);
    } else {
        double scale = (mm + 2) / (2 * mm);
        double coupling = std::sqrt(mm / 2 * (1 + mm / 2)) / mm;
        if (first_side) {
            sol.a_diagonals[m / 2] = a;
            sol.a_diagonals[m] = 1 - a;
            sol.a_diagonals[3 * m / 2] = 1;
        } else {
            sol.a_diagonals[m / 2 - 1] = 1;
            sol.a_diagonals[3 * m / 2 + 1] = a;
            sol.a_diagonals[2 * m + 1] = 1 - a;
        }
        sol.f_bar = sol.boundary_hit ? base + bc.p * coupling - other * scale - 0.5 * divisor
                                     : base + scale * (bc.p * bc.p / (4 * divisor) - other);
    }
    return sol;
}

namespace {

// Pair j couples a_j (first branch, weight alpha_j) with a_{2M-j} (second
// branch, weight beta_j); its contribution is
//   P sqrt(alpha beta) sqrt(x y) - Q alpha x - R beta y.
struct PairTerms {
    std::vector<double> q;  // Q alpha_j
    std::vector<double> r;  // R beta_j
    std::vector<double> c;  // P^2 alpha_j beta_j / 4
    std::vector<double> w;  // P sqrt(alpha_j beta_j)
};

PairTerms pair_terms(const BeltConstants &bc, int m) {
    PairTerms t;
    for (int j = 0; j < m; ++j) {
        double alpha = static_cast<double>(m - j) / m;
        double beta = static_cast<double>(j + 1) / m;
        t.q.push_back(bc.q * alpha);
        t.r.push_back(bc.r * beta);
        t.w.push_back(bc.p * std::sqrt(alpha * beta));
        t.c.push_back(bc.p * bc.p * alpha * beta / 4);
    }
    return t;
}

struct DualSolution {
    double value = 0.0;  // max of the pair sum, without 1/2 + K/6
    double mu = 0.0;
    double nu = 0.0;
};

// For fixed first-budget price mu, the smallest feasible second-budget price.
double dual_nu(const PairTerms &t, double mu) {
    double nu = 0.0;
    for (std::size_t j = 0; j < t.c.size(); ++j) {
        double shifted = mu + t.q[j];
        if (!(shifted > 0.0)) {
            return std::numeric_limits<double>::infinity();
        }
        nu = std::max(nu, t.c[j] / shifted - t.r[j]);
    }
    return nu;
}

DualSolution solve_dual(const PairTerms &t, double p) {
    int n = static_cast<int>(t.c.size());
    DualSolution best;
    if (!(p > 0.0)) {
        // No coupling: each budget goes to its best single term or to slack.
        double mu = 0.0;
        double nu = 0.0;
        for (int j = 0; j < n; ++j) {
            mu = std::max(mu, -t.q[j]);
            nu = std::max(nu, -t.r[j]);
        }
        best.value = mu + nu;
        best.mu = mu;
        best.nu = nu;
        return best;
    }
    double lo = 0.0;
    for (int j = 0; j < n; ++j) {
        lo = std::max(lo, -t.q[j]);
    }
    std::vector<double> candidates{lo};
    for (int j = 0; j < n; ++j) {
        candidates.push_back(std::sqrt(t.c[j]) - t.q[j]);
        if (t.r[j] > 0.0) {
            candidates.push_back(t.c[j] / t.r[j] - t.q[j]);
        }
        for (int k = j + 1; k < n; ++k) {
            double d = t.r[k] - t.r[j];
            double a2 = d;
            double a1 = d * (t.q[j] + t.q[k]) + t.c[j] - t.c[k];
            double a0 = d * t.q[j] * t.q[k] + t.c[j] * t.q[k] - t.c[k] * t.q[j];
            if (a2 == 0.0) {
                if (a1 != 0.0) {
                    candidates.push_back(-a0 / a1);
                }
                continue;
            }
            double disc = a1 * a1 - 4 * a2 * a0;
            if (disc < 0.0) {
                continue;
            }
            double root = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
            if (root != 0.0) {
                candidates.push_back(root / a2);
                candidates.push_back(a0 / root);
            } else {
                candidates.push_back(0.0);
            }
        }
    }
    best.value = std::numeric_limits<double>::infinity();
    for (double mu : candidates) {
        if (!(mu >= lo) || !std::isfinite(mu)) {
            continue;
        }
        double nu = dual_nu(t, mu);
        double value = mu + nu;
        if (value < best.value) {
            best.value = value;
            best.mu = mu;
            best.nu = nu;
        }
    }
    return best;
}

std::vector<double> flip_assignment(int m) {
    std::vector<double> a(2 * m + 2, 0.0);
    a[m] = 1.0;
    a[2 * m + 1] = 1.0;
    return a;
}

void place_pair(std::vector<double> &a, int m, int j, double x, double y) {
    a[j] += x;
    a[2 * m - j] += y;
    a[m] -= x;
    a[2 * m + 1] -= y;
}

// Best weights for pair j alone within the unit box; the pair term is
// homogeneous so one coordinate sits at 1.
std::vector<std::vector<double>> single_pair_candidates(const PairTerms &t, int m, int j) {
    std::vector<std::vector<double>> out;
    auto best_partner = [](double w, double price) {
        if (!(price > 0.0)) {
            return 1.0;
        }
        return std::min(1.0, std::pow(w / (2 * price), 2));
    };
    std::vector<double> a = flip_assignment(m);
    place_pair(a, m, j, 1.0, best_partner(t.w[j], t.r[j]));
    out.push_back(a);
    a = flip_assignment(m);
    place_pair(a, m, j, best_partner(t.w[j], t.q[j]), 1.0);
    out.push_back(a);
    return out;
}

// Two pairs sharing both budgets, with y/x ratios fixed by the dual prices.
std::vector<std::vector<double>> two_pair_candidates(const PairTerms &t, int m, const DualSolution &dual) {
    std::vector<std::vector<double>> out;
    if (!std::isfinite(dual.value)) {
        return out;
    }
    std::vector<int> active;
    double tol = 1e-12 * std::max(1.0, std::abs(dual.nu));
    for (int j = 0; j < m; ++j) {
        double shifted = dual.mu + t.q[j];
        if (shifted > 0.0 && t.c[j] / shifted - t.r[j] >= dual.nu - tol) {
            active.push_back(j);
        }
    }
    for (std::size_t u = 0; u < active.size(); ++u) {
        for (std::size_t v = u + 1; v < active.size(); ++v) {
            int j = active[u];
            int k = active[v];
            double rho_j = (dual.mu + t.q[j]) / (dual.nu + t.r[j]);
            double rho_k = (dual.mu + t.q[k]) / (dual.nu + t.r[k]);
            if (!std::isfinite(rho_j) || !std::isfinite(rho_k) || rho_j == rho_k) {
                continue;
            }
            double tj = (1.0 - rho_k) / (rho_j - rho_k);
            if (!(tj >= 0.0 && tj <= 1.0)) {
                continue;
            }
            double tk = 1.0 - tj;
            std::vector<double> a = flip_assignment(m);
            place_pair(a, m, j, tj, std::clamp(tj * rho_j, 0.0, 1.0));
            place_pair(a, m, k, tk, std::clamp(tk * rho_k, 0.0, 1.0));
            for (double &value : a) {
                value = std::max(value, 0.0);
            }
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace

OptimalGateReport analytic_optimum(const BeltRegion &region, int m) {
    OptimalGateReport report;
    report.region = region;
    report.m = m;
    report.case_id = classify_case(region, m);
    report.constants = belt_constants(region);
    const BeltConstants &bc = report.constants;

    CaseSolution family = case_family_solution(region, m, report.case_id.kind);
    report.a_star = family.a_star;
    report.boundary_hit = family.boundary_hit;
    report.case_f_bar = family.f_bar;

    PairTerms terms = pair_terms(bc, m);
    DualSolution dual = solve_dual(terms, bc.p);
    report.dual_bound = 0.5 + bc.k / 6 + dual.value;

    std::vector<std::vector<double>> candidates{flip_assignment(m)};
    for (int j = 0; j < m; ++j) {
        for (auto &a : single_pair_candidates(terms, m, j)) {
            candidates.push_back(std::move(a));
        }
    }
    for (auto &a : two_pair_candidates(terms, m, dual)) {
        candidates.push_back(std::move(a));
    }

    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<double> best;
    for (const auto &a : candidates) {
        double value = averaged_objective(bc, m, a);
        if (value > best_value) {
            best_value = value;
            best = a;
        }
    }
    double family_value = averaged_objective(bc, m, family.a_diagonals);
    report.case_formula_optimal = family_value >= best_value - 1e-13;
    if (report.case_formula_optimal) {
        best = family.a_diagonals;
        best_value = family_value;
    }
    report.a_diagonals = best;
    report.f_bar = best_value;
    for (int j = 0; j < m; ++j) {
        if (best[j] > 0.0 && best[2 * m - j] > 0.0) {
            report.coupled_pairs.emplace_back(j, 2 * m - j);
        }
    }
    return report;
}

ConsistencyReport verify_case_consistency(const BeltRegion &region, int m) {
    ConsistencyReport out;
    OptimalGateReport report = analytic_optimum(region, m);
    out.f_bar = report.f_bar;
    out.realized_avg = avg_fidelity_closed(realize_optimal(region, m), region);
    out.case_f_bar = report.case_f_bar;
    out.case_realized_avg = avg_fidelity_closed(realize_case_family(region, m, report.case_id.kind), region);

    auto check = [&](double lhs, double rhs, const std::string &what) {
        if (!(std::abs(lhs - rhs) <= kConsistencyTolerance)) {
            out.mismatches.push_back(what + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
        }
    };
    check(out.realized_avg, out.f_bar, "optimal gate average vs f_bar");
    check(out.case_realized_avg, out.case_f_bar, "case gate average vs case formula");
    if (out.f_bar < out.case_f_bar - kConsistencyTolerance) {
        out.mismatches.push_back("global optimum below the case formula");
    }

    double d1 = std::abs(region.theta1 - kPi / 2);
    double d2 = std::abs(region.theta2 - kPi / 2);
    out.tie = d1 == d2;
    if (out.tie) {
        CaseId sibling = sibling_case(report.case_id);
        out.sibling_f_bar = case_family_solution(region, m, sibling.kind).f_bar;
        check(out.sibling_f_bar, out.case_f_bar, "tied case branches " + report.case_id.name() + "/" + sibling.name());
    }
    return out;
}

}  // namespace unot
