// Copyright 2026 The Curvekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CURVEKIT_TYPES_HPP
#define CURVEKIT_TYPES_HPP

#include <algorithm>
#include <cmath>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace curvekit {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Closed arclength interval [lo, hi].
struct ArcInterval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }

    /// Membership with a relative slack that absorbs grid round-off.
    bool contains(double s, double slack = 1e-12) const {
        const double tol = slack * std::max({1.0, std::abs(lo), std::abs(hi)});
        return s >= lo - tol && s <= hi + tol;
    }

    bool contains(const ArcInterval& other, double slack = 1e-12) const {
        return contains(other.lo, slack) && contains(other.hi, slack);
    }

    double clamp(double s) const { return std::clamp(s, lo, hi); }
};

} // namespace curvekit

#endif // CURVEKIT_TYPES_HPP
