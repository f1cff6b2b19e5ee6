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

#ifndef CURVEKIT_GENERATORS_HPP
#define CURVEKIT_GENERATORS_HPP

#include <cstddef>

#include <curvekit/frame.hpp>
#include <curvekit/quadrature.hpp>
#include <curvekit/scalar_field.hpp>

namespace curvekit {

// Closed-form position vectors built from a prescribed curvature. Every
// indefinite integral is anchored at domain.lo: the inner angle integral
// starts at zero and the curve starts at the origin. Frames, curvature and
// torsion in the output come from the same analytic expressions that drive
// the quadrature.

/// Plane curve psi(s) = int (cos theta, sin theta, 0) ds, theta = int kappa.
SampledCurve gen_plane_curve(const ScalarField& kappa, ArcInterval domain, double step,
                             QuadratureConfig config = {});

/// General helix whose tangent makes angle arccos(n) with e3:
///   psi(s) = int (a cos u, a sin u, n) ds,  u = int kappa / a,  a = sqrt(1 - n^2).
/// Throws BadAngle unless 0 < n < 1.
SampledCurve gen_general_helix(const ScalarField& kappa, double n, ArcInterval domain,
                               double step, QuadratureConfig config = {});

/// Slant helix whose principal normal makes angle arccos(n) with e3:
///   T(s) = T0 + int kappa (a cos t, a sin t, n) ds,  psi(s) = int T ds,
///   t = arcsin(m theta) / n,  m = n / a.
/// T0 = (0, -1, 0) is the Salkowski tangent at t = 0, the one initial value
/// that keeps T a unit vector orthogonal to the normal field. Throws
/// DomainViolation when |m theta| reaches 1.
SampledCurve gen_slant_helix(const ScalarField& kappa, double n, ArcInterval domain,
                             double step, QuadratureConfig config = {});

/// Salkowski curve (unit curvature, torsion tan(n t)) sampled uniformly in
/// arclength u = sin(n t) / m over the parameter range `t_range`.
/// Throws BadAngle for n outside (0, 1) or n = 1/2 (the explicit
/// coordinates are singular there), BranchViolation when |n t| >= pi/2,
/// TooFewSamples below 9 samples.
SampledCurve gen_salkowski(double n, ArcInterval t_range, std::size_t samples);

/// Salkowski position at parameter t, oriented so that the principal normal
/// satisfies <N, e3> = n and the torsion is +tan(n t).
Vec3 salkowski_position(double n, double t);

/// u = sin(n t) / m, the arclength of the Salkowski curve at parameter t.
double salkowski_arclength(double n, double t);

/// Inverse of salkowski_arclength on the principal branch.
double salkowski_parameter(double n, double u);

} // namespace curvekit

#endif // CURVEKIT_GENERATORS_HPP
