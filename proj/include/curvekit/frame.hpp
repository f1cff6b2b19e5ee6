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

#ifndef CURVEKIT_FRAME_HPP
#define CURVEKIT_FRAME_HPP

#include <string_view>
#include <vector>

#include <curvekit/types.hpp>

namespace curvekit {

/// Tolerance on orthonormality and handedness for frames supplied by callers.
inline constexpr double kFrameTolerance = 1e-10;

/// Right-handed orthonormal triple (tangent, principal normal, binormal).
struct FrenetFrame {
    Vec3 T = Vec3::UnitX();
    Vec3 N = Vec3::UnitY();
    Vec3 B = Vec3::UnitZ();

    static FrenetFrame canonical() { return {}; }

    /// Columns T, N, B.
    Mat3 matrix() const;

    /// Rotates all three vectors.
    FrenetFrame rotated(const Mat3& rotation) const;
};

/// Max-norm deviation of the Gram matrix of (T, N, B) from the identity.
double gram_deviation(const Vec3& T, const Vec3& N, const Vec3& B);

/// max(gram deviation, |det[T N B] - 1|).
double frame_deviation(const FrenetFrame& frame);

/// Throws InvalidFrame when frame_deviation exceeds `tolerance`.
void validate_frame(const FrenetFrame& frame, double tolerance = kFrameTolerance);

/// Gram-Schmidt in the order T, N, then B := T x N. The input B only enters
/// the degeneracy check. Throws TooDegenerate when the Gram matrix deviates
/// from the identity by more than 0.1.
FrenetFrame reorthonormalize(const Vec3& T, const Vec3& N, const Vec3& B);
FrenetFrame reorthonormalize(const FrenetFrame& frame);

struct CurveSample {
    double s = 0.0;
    Vec3 position = Vec3::Zero();
    FrenetFrame frame;
    double kappa = 0.0;
    double tau = 0.0;
};

enum class Provenance { Integrated, ClosedForm, External };

std::string_view to_string(Provenance provenance);

/// Arclength-parameterized curve sampled on a uniform grid of spacing `step`.
struct SampledCurve {
    double step = 0.0;
    std::vector<CurveSample> samples;
    Provenance provenance = Provenance::External;

    std::size_t size() const { return samples.size(); }
    const CurveSample& front() const { return samples.front(); }
    const CurveSample& back() const { return samples.back(); }

    std::vector<double> arclengths() const;
    std::vector<Vec3> positions() const;
    std::vector<double> curvatures() const;
    std::vector<double> torsions() const;

    /// Applies x -> rotation * x + translation to positions and frames.
    SampledCurve transformed(const Mat3& rotation, const Vec3& translation) const;
};

/// Grid with `intervals` equal steps covering [lo, hi]; the last node is
/// exactly hi.
std::vector<double> uniform_grid(double lo, double hi, std::size_t intervals);

/// Smallest interval count whose step does not exceed `step`.
std::size_t interval_count(double length, double step);

} // namespace curvekit

#endif // CURVEKIT_FRAME_HPP
