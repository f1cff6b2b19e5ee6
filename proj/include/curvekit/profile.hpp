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

#ifndef CURVEKIT_PROFILE_HPP
#define CURVEKIT_PROFILE_HPP

#include <curvekit/scalar_field.hpp>
#include <curvekit/types.hpp>

namespace curvekit {

/// Curvature values in [-kCurvatureClampTolerance, 0] are treated as zero;
/// anything more negative is an error.
inline constexpr double kCurvatureClampTolerance = 1e-12;

struct CurvatureTorsion {
    double kappa = 0.0;
    double tau = 0.0;
};

/// Intrinsic data of a space curve: curvature and torsion over a closed
/// arclength interval.
///
/// Construction validates the curvature on a dense grid. A profile is either
/// straight (kappa identically zero, torsion ignored) or frame-bearing
/// (kappa strictly positive on the open interior). Curvature that vanishes
/// at interior points, or changes sign, is rejected.
class IntrinsicProfile {
public:
    IntrinsicProfile(ScalarField kappa, ScalarField tau, ArcInterval domain);

    const ScalarField& kappa() const { return kappa_; }
    const ScalarField& tau() const { return tau_; }
    const ArcInterval& domain() const { return domain_; }
    bool isStraight() const { return straight_; }

private:
    ScalarField kappa_;
    ScalarField tau_;
    ArcInterval domain_;
    bool straight_ = false;
};

/// (kappa(s), tau(s)); (0, 0) for straight profiles.
CurvatureTorsion eval_profile(const IntrinsicProfile& profile, double s);

/// theta(s1) = integral of kappa over [s0, s1], zero when s1 == s0.
double total_curvature(const IntrinsicProfile& profile, double s0, double s1);

/// Same integral on a bare field; no domain check.
double total_curvature(const ScalarField& kappa, double s0, double s1);

/// m = n / sqrt(1 - n^2), where n is the cosine of the angle between the
/// principal normal of a slant helix and its axis.
double slant_parameter(double n);

/// Torsion that turns `kappa` into a slant helix:
///   tau = sign * kappa * m theta / sqrt(1 - m^2 theta^2),
/// with theta accumulated from domain.lo. Throws DomainViolation when
/// |m theta| reaches 1 inside the domain.
ScalarField slant_torsion_from_curvature(const ScalarField& kappa, double m, int sign,
                                         ArcInterval domain);

struct PrecessionParams {
    double mu = 1.0;
    double m = 1.0;
    bool phase_swapped = false;
};

/// kappa = (mu/m) sin(mu s), tau = (mu/m) cos(mu s); sine and cosine trade
/// places when phase_swapped is set. The domain must keep kappa >= 0.
IntrinsicProfile precession_profile(const PrecessionParams& params, ArcInterval domain);

} // namespace curvekit

#endif // CURVEKIT_PROFILE_HPP
