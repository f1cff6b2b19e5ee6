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

#ifndef CURVEKIT_INTERPOLATION_HPP
#define CURVEKIT_INTERPOLATION_HPP

#include <cstddef>
#include <vector>

namespace curvekit {

/// Piecewise cubic Hermite interpolant over strictly increasing knots.
///
/// The plain constructor takes slopes verbatim, which keeps O(h^4) accuracy
/// when the slopes are exact derivatives. The `monotone` factories produce a
/// shape-preserving interpolant: no overshoot between knots, so a
/// nonnegative or monotone table stays that way.
class CubicHermite {
public:
    CubicHermite() = default;
    CubicHermite(std::vector<double> knots, std::vector<double> values,
                 std::vector<double> slopes);

    /// Fritsch-Carlson slopes estimated from the data (PCHIP rule).
    static CubicHermite monotone(std::vector<double> knots, std::vector<double> values);

    /// Given slopes, limited so that monotone data yields a monotone curve.
    static CubicHermite monotoneWithSlopes(std::vector<double> knots,
                                           std::vector<double> values,
                                           std::vector<double> slopes);

    /// Evaluates at x. Throws OutOfDomain outside [front, back] beyond
    /// round-off slack.
    double operator()(double x) const;
    double derivative(double x) const;

    double front() const { return knots_.front(); }
    double back() const { return knots_.back(); }
    std::size_t size() const { return knots_.size(); }
    bool empty() const { return knots_.empty(); }

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& slopes() const { return slopes_; }

private:
    std::size_t segment(double x) const;
    double clampChecked(double x) const;

    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> slopes_;
    bool uniform_ = false;
    double uniformStep_ = 0.0;
};

} // namespace curvekit

#endif // CURVEKIT_INTERPOLATION_HPP
