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

#ifndef UNOT_BELT_HPP
#define UNOT_BELT_HPP

#include <string>

namespace unot {

inline constexpr double kPi = 3.14159265358979323846;

/// Latitude belt of the Bloch sphere, 0 <= theta1 <= theta2 <= pi (radians).
/// theta1 == theta2 is a single latitude circle.
struct BeltRegion {
    double theta1 = 0.0;
    double theta2 = kPi;

    /// Throws std::invalid_argument naming the offending field.
    static BeltRegion make(double theta1, double theta2);

    bool degenerate() const { return theta1 == theta2; }
};

/// The constants K, P, Q, R of the belt-averaged fidelity.
struct BeltConstants {
    double k = 0.0;
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
};

BeltConstants belt_constants(const BeltRegion &region);

enum class CaseKind { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

/// Which of the four optimal-gate families applies. Case1/Case3 hold when
/// |theta1 - pi/2| >= |theta2 - pi/2|; Case1/Case2 need odd M.
struct CaseId {
    CaseKind kind = CaseKind::Case1;
    bool odd_m = true;
    bool ordering_holds = true;

    int number() const { return static_cast<int>(kind); }
    std::string name() const { return "Case" + std::to_string(number()); }
};

/// Exact >= comparison on the computed deviations, no epsilon.
bool latitude_ordering_holds(const BeltRegion &region);

CaseId classify_case(const BeltRegion &region, int m);

/// The case with the same parity but the other latitude ordering.
CaseId sibling_case(const CaseId &id);

}  // namespace unot

#endif
