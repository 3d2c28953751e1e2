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

#include "unot/belt.hpp"

#include <cmath>
#include <stdexcept>

namespace unot {

namespace {

void check_angle(double value, const char *field) {
    if (!std::isfinite(value) || value < 0.0 || value > kPi) {
        throw std::invalid_argument(std::string(field) + " must lie in [0, pi], got " + std::to_string(value));
    }
}

}  // namespace

BeltRegion BeltRegion::make(double theta1, double theta2) {
    check_angle(theta1, "theta1");
    check_angle(theta2, "theta2");
    if (theta1 > theta2) {
        throw std::invalid_argument("theta1 must not exceed theta2");
    }
    return BeltRegion{theta1, theta2};
}

BeltConstants belt_constants(const BeltRegion &region) {
    double c1 = std::cos(region.theta1);
    double c2 = std::cos(region.theta2);
    BeltConstants out;
    out.k = c1 * c1 + c1 * c2 + c2 * c2;
    out.p = (3.0 - out.k) / 6.0;
    out.q = out.k / 6.0 + (c1 + c2) / 4.0;
    out.r = out.k / 6.0 - (c1 + c2) / 4.0;
    return out;
}

bool latitude_ordering_holds(const BeltRegion &region) {
    return std::abs(region.theta1 - kPi / 2) >= std::abs(region.theta2 - kPi / 2);
}

CaseId classify_case(const BeltRegion &region, int m) {
    if (m < 1) {
        throw std::invalid_argument("M must be at least 1");
    }
    CaseId id;
    id.odd_m = (m % 2) == 1;
    id.ordering_holds = latitude_ordering_holds(region);
    if (id.odd_m) {
        id.kind = id.ordering_holds ? CaseKind::Case1 : CaseKind::Case2;
    } else {
        id.kind = id.ordering_holds ? CaseKind::Case3 : CaseKind::Case4;
    }
    return id;
}

CaseId sibling_case(const CaseId &id) {
    CaseId out = id;
    out.ordering_holds = !id.ordering_holds;
    switch (id.kind) {
        case CaseKind::Case1: out.kind = CaseKind::Case2; break;
        case CaseKind::Case2: out.kind = CaseKind::Case1; break;
        case CaseKind::Case3: out.kind = CaseKind::Case4; break;
        case CaseKind::Case4: out.kind = CaseKind::Case3; break;
    }
    return out;
}

}  // namespace unot
