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

#include <curvekit/similarity.hpp>

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include <curvekit/error.hpp>
#include <curvekit/quadrature.hpp>

namespace curvekit {

namespace {

constexpr int kPositivitySamples = 4096;
constexpr double kRatioCurvatureFloor = 1e-9;

void requirePositive(const ScalarField& field, ArcInterval domain, ErrorKind kind,
                     const char* what) {
    for (int i = 0; i <= kPositivitySamples; ++i) {
        const double s = i == kPositivitySamples
                             ? domain.hi
                             : domain.lo + domain.length() * i / kPositivitySamples;
        const double v = field(s);
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw CurveError(kind, std::string(what) + " must be strictly positive", s);
        }
    }
}

void checkBetaDomain(ArcInterval domain) {
    if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
        throw CurveError(ErrorKind::InvalidArgument, "beta domain must satisfy lo < hi");
    }
}

VariableTransformation fromTable(ScalarField lambda, std::vector<double> sBeta,
                                 std::vector<double> sAlpha, const std::vector<double>& slope) {
    std::vector<double> inverseSlope(slope.size());
    for (std::size_t i = 0; i < slope.size(); ++i) {
        inverseSlope[i] = 1.0 / slope[i];
    }
    CubicHermite forward = CubicHermite::monotoneWithSlopes(sBeta, sAlpha, slope);
    CubicHermite backward = CubicHermite::monotoneWithSlopes(std::move(sAlpha), std::move(sBeta),
                                                             std::move(inverseSlope));
    return VariableTransformation(std::move(lambda), std::move(forward), std::move(backward));
}

std::array<CubicHermite, 9> frameInterpolants(const SampledCurve& curve) {
    const std::vector<double> s = curve.arclengths();
    std::array<std::vector<double>, 9> comps;
    for (auto& c : comps) {
        c.reserve(curve.size());
    }
    for (const auto& p : curve.samples) {
        for (int c = 0; c < 3; ++c) {
            comps[c].push_back(p.frame.T[c]);
            comps[3 + c].push_back(p.frame.N[c]);
            comps[6 + c].push_back(p.frame.B[c]);
        }
    }
    std::array<CubicHermite, 9> out;
    for (int c = 0; c < 9; ++c) {
        out[c] = CubicHermite::monotone(s, comps[c]);
    }
    return out;
}

FrenetFrame interpolateFrame(const std::array<CubicHermite, 9>& f, double s) {
    const Vec3 T(f[0](s), f[1](s), f[2](s));
    const Vec3 N(f[3](s), f[4](s), f[5](s));
    const Vec3 B(f[6](s), f[7](s), f[8](s));
    return reorthonormalize(T, N, B);
}

bool frameBearing(const SampledCurve& curve) {
    for (const auto& p : curve.samples) {
        if (p.kappa > kRatioCurvatureFloor) {
            return true;
        }
    }
    return false;
}

} // namespace

VariableTransformation::VariableTransformation(ScalarField lambda, CubicHermite forward,
                                               CubicHermite backward)
    : lambda_(std::move(lambda))
    , forward_(std::move(forward))
    , backward_(std::move(backward)) {
}

double VariableTransformation::to_alpha(double s_beta) const {
    return forward_(s_beta);
}

double VariableTransformation::to_beta(double s_alpha) const {
    return backward_(s_alpha);
}

ScalarField VariableTransformation::correspondence() const {
    return ScalarField::interpolant(forward_);
}

VariableTransformation VariableTransformation::inverse() const {
    ScalarField inverseLambda = ScalarField::quotient(
        ScalarField::constant(1.0),
        ScalarField::composition(lambda_, ScalarField::interpolant(backward_)));
    return VariableTransformation(std::move(inverseLambda), backward_, forward_);
}

VariableTransformation transformation_from_lambda(const ScalarField& lambda,
                                                  ArcInterval beta_domain, double alpha_start,
                                                  double step) {
    checkBetaDomain(beta_domain);
    const std::size_t count = interval_count(beta_domain.length(), step);
    const std::vector<double> sBeta = uniform_grid(beta_domain.lo, beta_domain.hi, count);
    const double h = beta_domain.length() / static_cast<double>(count);
    // Nodes and panel midpoints are exactly what the quadrature touches.
    for (std::size_t i = 0; i <= 2 * count; ++i) {
        const double s = i == 2 * count ? beta_domain.hi
                                        : beta_domain.lo + 0.5 * h * static_cast<double>(i);
        const double v = lambda(s);
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw CurveError(ErrorKind::NonPositiveLambda,
                             "variable transformation lambda must be positive", s);
        }
    }
    std::vector<double> sAlpha = cumulativeSimpson(lambda, beta_domain.lo, h, count);
    std::vector<double> slope(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        sAlpha[i] += alpha_start;
        slope[i] = lambda(sBeta[i]);
    }
    return fromTable(lambda, sBeta, std::move(sAlpha), slope);
}

VariableTransformation make_transformation(const ScalarField& kappa_alpha,
                                           ArcInterval alpha_domain,
                                           const ScalarField& kappa_beta,
                                           ArcInterval beta_domain, double step) {
    checkBetaDomain(beta_domain);
    if (!(alpha_domain.lo < alpha_domain.hi)) {
        throw CurveError(ErrorKind::InvalidArgument, "alpha domain must satisfy lo < hi");
    }
    requirePositive(kappa_alpha, alpha_domain, ErrorKind::NonPositiveCurvature, "kappa_alpha");
    requirePositive(kappa_beta, beta_domain, ErrorKind::NonPositiveCurvature, "kappa_beta");

    const std::size_t count = interval_count(beta_domain.length(), step);
    const std::vector<double> sBeta = uniform_grid(beta_domain.lo, beta_domain.hi, count);
    std::vector<double> sAlpha(count + 1);
    std::vector<double> slope(count + 1);

    auto rate = [&](double x, double y) {
        return kappa_beta(x) / kappa_alpha(alpha_domain.clamp(y));
    };
    const double slack = 1e-9 * std::max(1.0, std::abs(alpha_domain.hi));
    sAlpha[0] = alpha_domain.lo;
    slope[0] = rate(sBeta[0], sAlpha[0]);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = sBeta[i];
        const double h = sBeta[i + 1] - x;
        const double y = sAlpha[i];
        const double k1 = slope[i];
        const double k2 = rate(x + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = rate(x + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = rate(x + h, y + h * k3);
        const double next = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (next > alpha_domain.hi + slack) {
            const double where = x + h * (alpha_domain.hi - y) / (next - y);
            throw CurveError(ErrorKind::DomainExhausted,
                             "s_alpha leaves the alpha domain before the beta domain ends",
                             where);
        }
        sAlpha[i + 1] = std::min(next, alpha_domain.hi);
        slope[i + 1] = rate(sBeta[i + 1], sAlpha[i + 1]);
    }

    CubicHermite forward = CubicHermite::monotoneWithSlopes(sBeta, sAlpha, slope);
    ScalarField lambda = ScalarField::quotient(
        kappa_beta, ScalarField::composition(kappa_alpha, ScalarField::interpolant(forward)));
    return fromTable(std::move(lambda), sBeta, std::move(sAlpha), slope);
}

IntrinsicProfile similar_partner(const IntrinsicProfile& alpha, const ScalarField& lambda,
                                 ArcInterval beta_domain, double step) {
    const VariableTransformation tr =
        transformation_from_lambda(lambda, beta_domain, alpha.domain().lo, step);
    const ArcInterval image = tr.alpha_range();
    if (!alpha.domain().contains(image.hi)) {
        throw CurveError(ErrorKind::DomainExhausted,
                         "correspondence leaves the alpha domain before the beta domain ends",
                         tr.to_beta(alpha.domain().hi));
    }
    if (alpha.isStraight()) {
        return IntrinsicProfile(ScalarField::constant(0.0), ScalarField::constant(0.0),
                                beta_domain);
    }
    const ScalarField corr = tr.correspondence();
    ScalarField kappa = ScalarField::product(ScalarField::composition(alpha.kappa(), corr), lambda);
    ScalarField tau = ScalarField::product(ScalarField::composition(alpha.tau(), corr), lambda);
    return IntrinsicProfile(std::move(kappa), std::move(tau), beta_domain);
}

ArcInterval max_beta_domain(const ScalarField& lambda, double beta_start, double alpha_length,
                            double step) {
    if (!(alpha_length > 0.0)) {
        throw CurveError(ErrorKind::InvalidArgument, "alpha length must be positive");
    }
    // March until the accumulated image reaches alpha_length, then bisect
    // inside the last step.
    double s = beta_start;
    double acc = 0.0;
    for (std::size_t guard = 0; guard < 100000000; ++guard) {
        const double mid = lambda(s + 0.5 * step);
        const double inc = step / 6.0 * (lambda(s) + 4.0 * mid + lambda(s + step));
        if (!(lambda(s) > 0.0) || !(mid > 0.0)) {
            throw CurveError(ErrorKind::NonPositiveLambda, "lambda must be positive", s);
        }
        if (acc + inc >= alpha_length) {
            double lo = 0.0;
            double hi = step;
            for (int it = 0; it < 60; ++it) {
                const double c = 0.5 * (lo + hi);
                const double part =
                    c / 6.0 * (lambda(s) + 4.0 * lambda(s + 0.5 * c) + lambda(s + c));
                (acc + part < alpha_length ? lo : hi) = c;
            }
            // Back off slightly so a table built on another grid cannot
            // overshoot the alpha domain.
            return {beta_start, beta_start + (s + lo - beta_start) * (1.0 - 1e-8)};
        }
        acc += inc;
        s += step;
    }
    throw CurveError(ErrorKind::InvalidArgument, "lambda too small to cover the alpha domain");
}

double correspond(const VariableTransformation& transformation, double s_beta) {
    return transformation.to_alpha(s_beta);
}

double correspond_inverse(const VariableTransformation& transformation, double s_alpha) {
    return transformation.to_beta(s_alpha);
}

Mat3 align_frames(const FrenetFrame& from, const FrenetFrame& to) {
    const Mat3 h = from.matrix() * to.matrix().transpose();
    Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat3 u = svd.matrixU();
    const Mat3 v = svd.matrixV();
    Mat3 d = Mat3::Identity();
    d(2, 2) = (v * u.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    return v * d * u.transpose();
}

SimilarityReport check_similar(const SampledCurve& alpha, const SampledCurve& beta,
                               const VariableTransformation& transformation,
                               const SimilarityTolerances& tol) {
    if (alpha.size() < 4 || beta.size() < 4) {
        throw CurveError(ErrorKind::TooFewSamples, "similarity check needs 4 samples per curve");
    }
    if (!frameBearing(alpha) || !frameBearing(beta)) {
        throw CurveError(ErrorKind::DegenerateCurve,
                         "similarity check needs frame-bearing curves (straight line given)");
    }
    const ArcInterval betaDomain = transformation.beta_domain();
    const ArcInterval alphaSampled{alpha.front().s, alpha.back().s};
    for (const auto& p : beta.samples) {
        if (!betaDomain.contains(p.s)) {
            throw CurveError(ErrorKind::DomainExhausted,
                             "beta sample outside the transformation domain", p.s);
        }
        if (!alphaSampled.contains(transformation.to_alpha(betaDomain.clamp(p.s)), 1e-9)) {
            throw CurveError(ErrorKind::DomainExhausted,
                             "corresponding alpha parameter outside alpha's samples", p.s);
        }
    }

    const auto alphaFrame = frameInterpolants(alpha);
    std::vector<double> ratioKnots;
    std::vector<double> ratioValues;
    for (const auto& p : alpha.samples) {
        if (p.kappa > kRatioCurvatureFloor) {
            ratioKnots.push_back(p.s);
            ratioValues.push_back(p.tau / p.kappa);
        }
    }
    if (ratioKnots.size() < 2) {
        throw CurveError(ErrorKind::DegenerateCurve, "alpha curvature vanishes almost everywhere");
    }
    const CubicHermite alphaRatio = CubicHermite::monotone(ratioKnots, ratioValues);
    const CubicHermite alphaTheta =
        CubicHermite::monotone(alpha.arclengths(), cumulativeSampled(alpha.curvatures(), alpha.step));
    const std::vector<double> betaTheta = cumulativeSampled(beta.curvatures(), beta.step);

    auto alphaAt = [&](double sb) {
        return alphaSampled.clamp(transformation.to_alpha(betaDomain.clamp(sb)));
    };

    SimilarityReport report;
    report.alignment = align_frames(interpolateFrame(alphaFrame, alphaAt(beta.front().s)),
                                    beta.front().frame);
    const Mat3& r = report.alignment;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const CurveSample& pb = beta.samples[i];
        const double sa = alphaAt(pb.s);
        const FrenetFrame fa = interpolateFrame(alphaFrame, sa).rotated(r);
        report.tangent_dev = std::max(report.tangent_dev, (pb.frame.T - fa.T).norm());
        report.normal_dev = std::max(report.normal_dev, (pb.frame.N - fa.N).norm());
        report.binormal_dev = std::max(report.binormal_dev, (pb.frame.B - fa.B).norm());
        if (pb.kappa > kRatioCurvatureFloor && sa >= ratioKnots.front() && sa <= ratioKnots.back()) {
            report.ratio_dev = std::max(report.ratio_dev, std::abs(pb.tau / pb.kappa - alphaRatio(sa)));
        }
        report.theta_dev = std::max(report.theta_dev, std::abs(betaTheta[i] - alphaTheta(sa)));
        ++report.compared;
    }
    // NaN deviations must fail the predicates.
    auto pass = [](double dev, double limit) { return dev < limit; };
    report.verdicts.tangent = pass(report.tangent_dev, tol.frame);
    report.verdicts.normal = pass(report.normal_dev, tol.frame);
    report.verdicts.binormal = pass(report.binormal_dev, tol.frame);
    report.verdicts.ratio_theta = pass(report.ratio_dev, tol.ratio) && pass(report.theta_dev, tol.theta);
    report.verdicts.overall = report.verdicts.tangent && report.verdicts.normal
                              && report.verdicts.binormal && report.verdicts.ratio_theta;
    return report;
}

} // namespace curvekit
