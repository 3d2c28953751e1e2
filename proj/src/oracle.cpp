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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "unot/optimizer.hpp"

namespace unot {

namespace {

// The averaged fidelity written term by term over a_0..a_{2M+1}, coupling k
// joining a_{M+k+1} and a_{M-k-1} with an optional factor in [-1, 1].
double oracle_objective(const BeltConstants &bc, int m, const std::vector<double> &a,
                        const std::vector<double> *factors = nullptr) {
    double total = 0.5 + bc.k / 6;
    for (int k = 0; k < m; ++k) {
        double factor = factors ? (*factors)[k] : 1.0;
        total += bc.p * factor * std::sqrt(static_cast<double>((m - k) * (k + 1))) / m *
                 std::sqrt(a[m + k + 1] * a[m - k - 1]);
        total -= bc.q * (m - k) / m * a[k];
        total -= bc.r * (m - k) / m * a[m + k + 1];
    }
    return total;
}

// Grid table for coupling k: value of (u, v) = (a_{M-k-1}, a_{M+k+1}) in
// units of 1/N, i.e. everything in the objective that depends on them.
struct PairTable {
    int n = 0;
    std::vector<double> value;
    std::vector<double> factor;

    double at(int u, int v) const { return value[u * (n + 1) + v]; }
};

PairTable pair_table(const BeltConstants &bc, int m, int k, int n, bool paranoid) {
    PairTable t;
    t.n = n;
    t.value.resize((n + 1) * (n + 1));
    t.factor.assign((n + 1) * (n + 1), 1.0);
    double coupling = bc.p * std::sqrt(static_cast<double>((m - k) * (k + 1))) / m;
    double first_weight = bc.q * (k + 1) / m;   // a_{M-k-1} carries (M - (M-k-1))/M
    double second_weight = bc.r * (m - k) / m;  // a_{M+k+1} carries (M-k)/M
    for (int u = 0; u <= n; ++u) {
        for (int v = 0; v <= n; ++v) {
            double x = static_cast<double>(u) / n;
            double y = static_cast<double>(v) / n;
            double root = std::sqrt(x * y);
            double best = coupling * root;
            double best_factor = 1.0;
            if (paranoid) {
                best = -std::numeric_limits<double>::infinity();
                for (int s = 0; s <= 20; ++s) {
                    double f = -1.0 + 0.1 * s;
                    double candidate = coupling * f * root;
                    if (candidate > best) {
                        best = candidate;
                        best_factor = f;
                    }
                }
            }
            t.value[u * (n + 1) + v] = best - first_weight * x - second_weight * y;
            t.factor[u * (n + 1) + v] = best_factor;
        }
    }
    return t;
}

// Coordinate ascent: move mass between entries of the same simplex, and
// between the slacks and both members of a coupling at once.
void refine(const BeltConstants &bc, int m, std::vector<double> &a, double start_step, double min_step,
            std::int64_t &evaluations) {
    double current = oracle_objective(bc, m, a);
    ++evaluations;
    auto try_move = [&](std::vector<double> &candidate) {
        double value = oracle_objective(bc, m, candidate);
        ++evaluations;
        if (value > current + 1e-16) {
            current = value;
            a = candidate;
            return true;
        }
        return false;
    };
    for (double step = start_step; step >= min_step; step *= 0.5) {
        bool improved = true;
        int sweeps = 0;
        while (improved && sweeps < 10000) {
            improved = false;
            ++sweeps;
            for (int branch = 0; branch < 2; ++branch) {
                int offset = branch * (m + 1);
                for (int from = 0; from <= m; ++from) {
                    for (int to = 0; to <= m; ++to) {
                        if (from == to || a[offset + from] < step) {
                            continue;
                        }
                        std::vector<double> candidate = a;
                        candidate[offset + from] -= step;
                        candidate[offset + to] += step;
                        improved |= try_move(candidate);
                    }
                }
            }
            for (int k = 0; k < m; ++k) {
                for (int sign = -1; sign <= 1; sign += 2) {
                    std::vector<double> candidate = a;
                    candidate[m - k - 1] += sign * step;
                    candidate[m] -= sign * step;
                    candidate[m + k + 1] += sign * step;
                    candidate[2 * m + 1] -= sign * step;
                    bool feasible = candidate[m - k - 1] >= 0 && candidate[m] >= 0 && candidate[m + k + 1] >= 0 &&
                                    candidate[2 * m + 1] >= 0;
                    if (feasible) {
                        improved |= try_move(candidate);
                    }
                }
            }
        }
    }
}

}  // namespace

OracleResult oracle_optimum(const BeltRegion &region, int m, const OracleOptions &options) {
    if (m < 1 || m > kOracleMaxCopies) {
        throw std::invalid_argument("oracle: M must lie in 1.." + std::to_string(kOracleMaxCopies));
    }
    if (!(options.resolution > 0.0) || options.resolution > 1.0) {
        throw std::invalid_argument("oracle: resolution must lie in (0, 1]");
    }
    OracleResult result;
    int n = std::max(1, static_cast<int>(std::lround(1.0 / options.resolution)));
    result.resolution = 1.0 / n;
    result.coarse_resolution = options.resolution > kOracleMaxResolution;
    BeltConstants bc = belt_constants(region);

    // best[u][v]: best sum over the couplings processed so far using at most
    // u and v grid units of the two budgets. Exhaustive over the grid because
    // the objective separates over couplings once the budgets are fixed.
    int side = n + 1;
    std::vector<PairTable> tables;
    for (int k = 0; k < m; ++k) {
        tables.push_back(pair_table(bc, m, k, n, options.paranoid));
    }
    std::vector<std::vector<int>> choice_u(m, std::vector<int>(side * side, 0));
    std::vector<std::vector<int>> choice_v(m, std::vector<int>(side * side, 0));
    std::vector<double> best(side * side, 0.0);
    for (int k = 0; k < m; ++k) {
        std::vector<double> next(side * side, -std::numeric_limits<double>::infinity());
        bool last = k == m - 1;
        if (k == 0) {
            // Nothing placed yet: a running maximum over the table suffices.
            for (int bu = 0; bu <= n; ++bu) {
                for (int bv = 0; bv <= n; ++bv) {
                    int at = bu * side + bv;
                    double top = tables[0].at(bu, bv);
                    int top_u = bu;
                    int top_v = bv;
                    if (bu > 0 && next[at - side] >= top) {
                        top = next[at - side];
                        top_u = choice_u[0][at - side];
                        top_v = choice_v[0][at - side];
                    }
                    if (bv > 0 && next[at - 1] >= top) {
                        top = next[at - 1];
                        top_u = choice_u[0][at - 1];
                        top_v = choice_v[0][at - 1];
                    }
                    next[at] = top;
                    choice_u[0][at] = top_u;
                    choice_v[0][at] = top_v;
                    ++result.evaluations;
                }
            }
            best = std::move(next);
            continue;
        }
        for (int bu = last ? n : 0; bu <= n; ++bu) {
            for (int bv = last ? n : 0; bv <= n; ++bv) {
                double top = -std::numeric_limits<double>::infinity();
                int top_u = 0;
                int top_v = 0;
                for (int u = 0; u <= bu; ++u) {
                    for (int v = 0; v <= bv; ++v) {
                        double value = tables[k].at(u, v) + best[(bu - u) * side + (bv - v)];
                        if (value > top) {
                            top = value;
                            top_u = u;
                            top_v = v;
                        }
                    }
                }
                result.evaluations += static_cast<std::int64_t>(bu + 1) * (bv + 1);
                next[bu * side + bv] = top;
                choice_u[k][bu * side + bv] = top_u;
                choice_v[k][bu * side + bv] = top_v;
            }
        }
        best = std::move(next);
    }

    std::vector<double> a(2 * m + 2, 0.0);
    int bu = n;
    int bv = n;
    int used_u = 0;
    int used_v = 0;
    for (int k = m - 1; k >= 0; --k) {
        int u = choice_u[k][bu * side + bv];
        int v = choice_v[k][bu * side + bv];
        a[m - k - 1] = static_cast<double>(u) / n;
        a[m + k + 1] = static_cast<double>(v) / n;
        if (options.paranoid) {
            result.coupling_factors.insert(result.coupling_factors.begin(), tables[k].factor[u * side + v]);
            if (u > 0 && v > 0 && tables[k].factor[u * side + v] != 1.0) {
                result.saturation_confirmed = false;
            }
        }
        bu -= u;
        bv -= v;
        used_u += u;
        used_v += v;
    }
    a[m] = static_cast<double>(n - used_u) / n;
    a[2 * m + 1] = static_cast<double>(n - used_v) / n;

    if (options.paranoid) {
        result.grid_best_f = oracle_objective(bc, m, a, &result.coupling_factors);
    } else {
        result.grid_best_f = oracle_objective(bc, m, a);
    }
    ++result.evaluations;

    refine(bc, m, a, result.resolution, options.refine_step, result.evaluations);
    result.best_f = std::max(result.grid_best_f, oracle_objective(bc, m, a));
    result.first_branch.assign(a.begin(), a.begin() + m + 1);
    result.second_branch.assign(a.begin() + m + 1, a.end());
    return result;
}

}  // namespace unot
