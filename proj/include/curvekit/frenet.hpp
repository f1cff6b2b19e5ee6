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

#ifndef CURVEKIT_FRENET_HPP
#define CURVEKIT_FRENET_HPP

#include <vector>

#include <curvekit/frame.hpp>
#include <curvekit/profile.hpp>

namespace curvekit {

/// Integrates the Frenet-Serret system
///   T' = kappa N,  N' = -kappa T + tau B,  B' = -tau N,  psi' = T
/// with classical RK4 over the whole profile domain, re-orthonormalizing the
/// frame after every step. The step actually used is the largest value not
/// exceeding `step` that divides the domain evenly; it is stored in the
/// result.
SampledCurve integrate_frenet(const IntrinsicProfile& profile, const FrenetFrame& frame0,
                              const Vec3& pos0, double step);

/// Same, over a sub-range of the domain. A zero-length range yields the
/// single initial sample.
SampledCurve integrate_frenet(const IntrinsicProfile& profile, const FrenetFrame& frame0,
                              const Vec3& pos0, double step, ArcInterval range);

/// psi(s) = pos0 + (s - lo) * direction. Straight lines carry no Frenet
/// frame; the normal and binormal are an arbitrary orthonormal completion.
SampledCurve straight_line(ArcInterval domain, const Vec3& direction, const Vec3& pos0,
                           double step);

struct TangentResidual {
    double theta_step = 0.0;
    std::vector<double> theta;
    std::vector<double> residual;

    double max() const;
};

/// Norm of
///   (T''/f)' + ((1 + f^2)/f) T' - (f'/f^2) T,   f = tau/kappa,
/// with derivatives taken in the total-curvature parameter theta on a grid of
/// spacing `theta_step`. The tangent is resampled onto that grid by cubic
/// Hermite interpolation (slopes kappa N from the Frenet equations) after
/// inverting the cumulative theta table. Second-order central differences;
/// the third derivative uses the five-point stencil.
TangentResidual tangent_ode_residual(const SampledCurve& curve, double theta_step);

} // namespace curvekit

#endif // CURVEKIT_FRENET_HPP
