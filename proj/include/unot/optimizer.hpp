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

#ifndef UNOT_OPTIMIZER_HPP
#define UNOT_OPTIMIZER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unot/belt.hpp"

namespace unot {

/// Belt-averaged fidelity as a function of the Gram diagonals a_0..a_{2M+1},
/// with every pair coupling saturated at sqrt(a_{M+k+1} a_{M-k-1}).
double averaged_objective(const BeltConstants &constants, int m, std::span<const double> diagonals);

/// One of the four closed-form gate families: a single coupled pair with one
/// free weight a_star and the matching closed-form fidelity.
struct CaseSolution {
    CaseKind kind = CaseKind::Case1;
    double a_star = 0.0;
    bool boundary_hit = false;  // a_star clipped to 1 (or the divisor constant vanished)
    double f_bar = 0.0;         // closed-form case expression
    std::vector<double> a_diagonals;
};

/// Throws std::invalid_argument when the parity of `kind` does not match m.
CaseSolution case_family_solution(const BeltRegion &region, int m, CaseKind kind);

/// Divisor constants at or below this value force a_star = 1.
inline constexpr double kDegenerateConstant = 1e-12;

struct OptimalGateReport {
    BeltRegion region;
    int m = 1;
    BeltConstants constants;
    CaseId case_id;

    // Closed-form family selected by case_id.
    double a_star = 0.0;
    bool boundary_hit = false;
    double case_f_bar = 0.0;

    // Global maximum of the averaged fidelity over both simplices.
    std::vector<double> a_diagonals;
    double f_bar = 0.0;
    double dual_bound = 0.0;
    bool case_formula_optimal = false;
    std::vector<std::pair<int, int>> coupled_pairs;  // (j, 2M-j) with weight on both sides
};

/// Exact maximiser. The averaged fidelity is a sum of concave, positively
/// homogeneous pair terms under two simplex budgets; its Lagrange dual is a
/// one-dimensional convex problem whose minimiser lies on a finite candidate
/// set (pair stationary points, pairwise kinks, zero crossings). At most two
/// pairs are active in the recovered primal solution. The case family is
/// preferred whenever it attains the maximum within 1e-13.
OptimalGateReport analytic_optimum(const BeltRegion &region, int m);

struct ConsistencyReport {
    double f_bar = 0.0;
    double realized_avg = 0.0;  // avg_fidelity_closed on realize_optimal
    double case_f_bar = 0.0;
    double case_realized_avg = 0.0;  // avg_fidelity_closed on the case-family gate
    bool tie = false;                // |theta1 - pi/2| == |theta2 - pi/2|
    double sibling_f_bar = 0.0;      // the other ordering's family, when tied
    std::vector<std::string> mismatches;

    bool consistent() const { return mismatches.empty(); }
};

inline constexpr double kConsistencyTolerance = 1e-12;

ConsistencyReport verify_case_consistency(const BeltRegion &region, int m);

/// Brute-force optimiser: exhaustive grid over both simplices followed by
/// coordinate ascent. Uses only the averaged-fidelity expression.
struct OracleOptions {
    double resolution = 0.01;
    double refine_step = 1e-6;
    bool paranoid = false;  // also sweep a coupling factor in [-1, 1] per pair
};

struct OracleResult {
    std::vector<double> first_branch;   // a_0 .. a_M
    std::vector<double> second_branch;  // a_{M+1} .. a_{2M+1}
    double best_f = 0.0;
    double grid_best_f = 0.0;
    std::int64_t evaluations = 0;
    double resolution = 0.0;     // effective grid step 1/N
    bool coarse_resolution = false;
    std::vector<double> coupling_factors;  // paranoid mode, per pair k
    bool saturation_confirmed = true;
};

inline constexpr int kOracleMaxCopies = 6;
inline constexpr double kOracleMaxResolution = 0.05;

OracleResult oracle_optimum(const BeltRegion &region, int m, const OracleOptions &options = {});

}  // namespace unot

#endif
