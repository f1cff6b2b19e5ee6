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

#ifndef CURVEKIT_SIMILARITY_HPP
#define CURVEKIT_SIMILARITY_HPP

#include <cstddef>

#include <curvekit/frame.hpp>
#include <curvekit/interpolation.hpp>
#include <curvekit/profile.hpp>

namespace curvekit {

/// Reparameterization between the arclengths of two curves,
///   ds_alpha = lambda(s_beta) ds_beta,   lambda > 0,
/// stored as a cumulative table on a uniform s_beta grid together with its
/// inverse. Both directions are monotone cubic Hermite interpolants whose
/// knot slopes are lambda and 1/lambda.
class VariableTransformation {
public:
    VariableTransformation(ScalarField lambda, CubicHermite forward, CubicHermite backward);

    /// lambda^alpha_beta = ds_alpha / ds_beta as a field over s_beta.
    const ScalarField& lambda() const { return lambda_; }

    ArcInterval beta_domain() const { return {forward_.front(), forward_.back()}; }
    ArcInterval alpha_range() const { return {backward_.front(), backward_.back()}; }

    double to_alpha(double s_beta) const;
    double to_beta(double s_alpha) const;

    /// s_alpha(s_beta) as a field.
    ScalarField correspondence() const;

    /// The transformation from alpha back to beta, lambda^beta_alpha = 1/lambda.
    VariableTransformation inverse() const;

private:
    ScalarField lambda_;
    CubicHermite forward_;
    CubicHermite backward_;
};

/// s_alpha(s_beta) = alpha_start + int_{beta.lo}^{s_beta} lambda. Throws
/// NonPositiveLambda if lambda <= 0 anywhere on the grid.
VariableTransformation transformation_from_lambda(const ScalarField& lambda,
                                                  ArcInterval beta_domain, double alpha_start,
                                                  double step = 1e-3);

/// The transformation that equalizes total curvature,
///   ds_alpha / ds_beta = kappa_beta(s_beta) / kappa_alpha(s_alpha),
/// integrated with RK4 from s_alpha = alpha_domain.lo. Throws
/// NonPositiveCurvature for a curvature that is not strictly positive and
/// DomainExhausted (with the s_beta location) when s_alpha runs past
/// alpha_domain.hi.
VariableTransformation make_transformation(const ScalarField& kappa_alpha,
                                           ArcInterval alpha_domain,
                                           const ScalarField& kappa_beta,
                                           ArcInterval beta_domain, double step = 1e-3);

/// Profile of the curve similar to `alpha` under lambda:
///   kappa_beta(s) = kappa_alpha(s_alpha(s)) lambda(s),  tau_beta likewise.
IntrinsicProfile similar_partner(const IntrinsicProfile& alpha, const ScalarField& lambda,
                                 ArcInterval beta_domain, double step = 1e-3);

/// Largest [beta_start, beta_start + L] whose image under lambda fits in an
/// alpha interval of the given length.
ArcInterval max_beta_domain(const ScalarField& lambda, double beta_start, double alpha_length,
                            double step = 1e-3);

double correspond(const VariableTransformation& transformation, double s_beta);
double correspond_inverse(const VariableTransformation& transformation, double s_alpha);

struct SimilarityTolerances {
    double frame = 1e-4;
    double ratio = 1e-6;
    double theta = 1e-6;
};

struct SimilarityVerdicts {
    bool tangent = false;
    bool normal = false;
    bool binormal = false;
    /// Equal tau/kappa together with equal total curvature.
    bool ratio_theta = false;
    bool overall = false;
};

struct SimilarityReport {
    double tangent_dev = 0.0;
    double normal_dev = 0.0;
    double binormal_dev = 0.0;
    double ratio_dev = 0.0;
    double theta_dev = 0.0;
    std::size_t compared = 0;
    /// Rotation applied to alpha's frames before comparing.
    Mat3 alignment = Mat3::Identity();
    SimilarityVerdicts verdicts;
};

/// Compares two sampled curves at corresponding parameters. The beta grid
/// drives the comparison; alpha's frame, ratio and total curvature are
/// interpolated at s_alpha(s_beta). Alpha's frames are first rotated by the
/// orthogonal Procrustes solution that maps its initial frame onto beta's.
SimilarityReport check_similar(const SampledCurve& alpha, const SampledCurve& beta,
                               const VariableTransformation& transformation,
                               const SimilarityTolerances& tol = {});

/// Rotation R minimizing sum_j |R a_j - b_j|^2 over the three frame vectors.
Mat3 align_frames(const FrenetFrame& from, const FrenetFrame& to);

} // namespace curvekit

#endif // CURVEKIT_SIMILARITY_HPP
