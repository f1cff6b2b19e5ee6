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

#include <curvekit/generators.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <curvekit/error.hpp>
#include <curvekit/profile.hpp>

namespace curvekit {

namespace {

struct Grid {
    std::size_t intervals = 0;
    std::size_t substeps = 0;
    double step = 0.0;
    std::vector<double> nodes;
};

Grid makeGrid(ArcInterval domain, double step, const QuadratureConfig& config) {
    config.validate();
    if (!(domain.lo < domain.hi)) {
        throw CurveError(ErrorKind::InvalidArgument, "generator domain must satisfy lo < hi");
    }
    Grid g;
    g.intervals = interval_count(domain.length(), step);
    g.substeps = static_cast<std::size_t>(config.substeps);
    g.step = domain.length() / static_cast<double>(g.intervals);
    g.nodes = uniform_grid(domain.lo, domain.hi, g.intervals);
    return g;
}

// kappa sampled on the fine grid (spacing step / substeps / 2 when `halves`),
// rejecting negative values.
void checkCurvature(const ScalarField& kappa, double lo, double fine, std::size_t count) {
    for (std::size_t i = 0; i <= count; ++i) {
        const double s = lo + static_cast<double>(i) * fine;
        if (kappa(s) < -kCurvatureClampTolerance) {
            throw CurveError(ErrorKind::NegativeCurvature, "curvature is negative", s);
        }
    }
}

// Positions at the output nodes from tangents on the fine grid: composite
// Simpson over each block of `substeps` fine intervals.
std::vector<Vec3> integrateTangent(const std::vector<Vec3>& fineTangent, const Grid& g,
                                   double fine) {
    std::vector<Vec3> pos(g.intervals + 1, Vec3::Zero());
    for (std::size_t i = 0; i < g.intervals; ++i) {
        Vec3 acc = Vec3::Zero();
        const std::size_t base = i * g.substeps;
        for (std::size_t j = 0; j <= g.substeps; ++j) {
            const double w = (j == 0 || j == g.substeps) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            acc += w * fineTangent[base + j];
        }
        pos[i + 1] = pos[i] + (fine / 3.0) * acc;
    }
    return pos;
}

double clampCurvature(double k) {
    return std::max(k, 0.0);
}

void checkAngle(double n) {
    if (!(n > 0.0 && n < 1.0)) {
        throw CurveError(ErrorKind::BadAngle, "angle cosine n must lie in (0, 1)", n);
    }
}

} // namespace

SampledCurve gen_plane_curve(const ScalarField& kappa, ArcInterval domain, double step,
                             QuadratureConfig config) {
    const Grid g = makeGrid(domain, step, config);
    const std::size_t fineCount = g.intervals * g.substeps;
    const double fine = g.step / static_cast<double>(g.substeps);
    checkCurvature(kappa, domain.lo, fine, fineCount);

    const std::vector<double> theta = cumulativeSimpson(kappa, domain.lo, fine, fineCount);
    std::vector<Vec3> tangent(fineCount + 1);
    for (std::size_t i = 0; i <= fineCount; ++i) {
        tangent[i] = Vec3(std::cos(theta[i]), std::sin(theta[i]), 0.0);
    }
    const std::vector<Vec3> pos = integrateTangent(tangent, g, fine);

    SampledCurve curve;
    curve.provenance = Provenance::ClosedForm;
    curve.step = g.step;
    curve.samples.reserve(g.intervals + 1);
    for (std::size_t i = 0; i <= g.intervals; ++i) {
        const double th = theta[i * g.substeps];
        FrenetFrame frame;
        frame.T = tangent[i * g.substeps];
        frame.N = Vec3(-std::sin(th), std::cos(th), 0.0);
        frame.B = Vec3::UnitZ();
        curve.samples.push_back({g.nodes[i], pos[i], frame, clampCurvature(kappa(g.nodes[i])), 0.0});
    }
    return curve;
}

SampledCurve gen_general_helix(const ScalarField& kappa, double n, ArcInterval domain,
                               double step, QuadratureConfig config) {
    checkAngle(n);
    const Grid g = makeGrid(domain, step, config);
    const std::size_t fineCount = g.intervals * g.substeps;
    const double fine = g.step / static_cast<double>(g.substeps);
    checkCurvature(kappa, domain.lo, fine, fineCount);

    const double a = std::sqrt(1.0 - n * n);
    const std::vector<double> theta = cumulativeSimpson(kappa, domain.lo, fine, fineCount);
    std::vector<Vec3> tangent(fineCount + 1);
    for (std::size_t i = 0; i <= fineCount; ++i) {
        const double u = theta[i] / a;
        tangent[i] = Vec3(a * std::cos(u), a * std::sin(u), n);
    }
    const std::vector<Vec3> pos = integrateTangent(tangent, g, fine);

    SampledCurve curve;
    curve.provenance = Provenance::ClosedForm;
    curve.step = g.step;
    curve.samples.reserve(g.intervals + 1);
    for (std::size_t i = 0; i <= g.intervals; ++i) {
        const double u = theta[i * g.substeps] / a;
        FrenetFrame frame;
        frame.T = tangent[i * g.substeps];
        frame.N = Vec3(-std::sin(u), std::cos(u), 0.0);
        frame.B = Vec3(-n * std::cos(u), -n * std::sin(u), a);
        const double k = clampCurvature(kappa(g.nodes[i]));
        curve.samples.push_back({g.nodes[i], pos[i], frame, k, k * n / a});
    }
    return curve;
}

SampledCurve gen_slant_helix(const ScalarField& kappa, double n, ArcInterval domain,
                             double step, QuadratureConfig config) {
    checkAngle(n);
    const Grid g = makeGrid(domain, step, config);
    const std::size_t fineCount = g.intervals * g.substeps;
    const double fine = g.step / static_cast<double>(g.substeps);
    // theta is needed at fine nodes and fine midpoints.
    const double half = 0.5 * fine;
    checkCurvature(kappa, domain.lo, half, 2 * fineCount);

    const double a = std::sqrt(1.0 - n * n);
    const double m = n / a;
    const std::vector<double> theta = cumulativeSimpson(kappa, domain.lo, half, 2 * fineCount);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (std::abs(m * theta[i]) >= 1.0) {
            throw CurveError(ErrorKind::DomainViolation,
                             "arcsine argument m*theta leaves (-1, 1)",
                             domain.lo + static_cast<double>(i) * half);
        }
    }
    auto normalAt = [&](std::size_t halfIndex) {
        const double t = std::asin(m * theta[halfIndex]) / n;
        return Vec3(a * std::cos(t), a * std::sin(t), n);
    };
    auto integrand = [&](std::size_t halfIndex) {
        const double s = domain.lo + static_cast<double>(halfIndex) * half;
        return Vec3(clampCurvature(kappa(s)) * normalAt(halfIndex));
    };

    // Inner cumulative integral: one Simpson panel per fine interval.
    std::vector<Vec3> tangent(fineCount + 1);
    tangent[0] = Vec3(0.0, -1.0, 0.0);
    Vec3 left = integrand(0);
    for (std::size_t i = 0; i < fineCount; ++i) {
        const Vec3 mid = integrand(2 * i + 1);
        const Vec3 right = integrand(2 * i + 2);
        tangent[i + 1] = tangent[i] + (fine / 6.0) * (left + 4.0 * mid + right);
        left = right;
    }
    const std::vector<Vec3> pos = integrateTangent(tangent, g, fine);

    SampledCurve curve;
    curve.provenance = Provenance::ClosedForm;
    curve.step = g.step;
    curve.samples.reserve(g.intervals + 1);
    for (std::size_t i = 0; i <= g.intervals; ++i) {
        const std::size_t h = 2 * i * g.substeps;
        const Vec3 N = normalAt(h);
        const FrenetFrame frame = reorthonormalize(tangent[i * g.substeps], N, tangent[i * g.substeps].cross(N));
        const double k = clampCurvature(kappa(g.nodes[i]));
        const double mt = m * theta[h];
        curve.samples.push_back({g.nodes[i], pos[i], frame, k, k * mt / std::sqrt(1.0 - mt * mt)});
    }
    return curve;
}

double salkowski_arclength(double n, double t) {
    return std::sin(n * t) / slant_parameter(n);
}

double salkowski_parameter(double n, double u) {
    const double mu = slant_parameter(n) * u;
    if (!(std::abs(mu) < 1.0)) {
        throw CurveError(ErrorKind::BranchViolation, "|m u| must stay below 1", u);
    }
    return std::asin(mu) / n;
}

Vec3 salkowski_position(double n, double t) {
    checkAngle(n);
    if (std::abs(2.0 * n - 1.0) < 1e-9) {
        throw CurveError(ErrorKind::BadAngle,
                         "explicit Salkowski coordinates are singular at n = 1/2", n);
    }
    const double m = slant_parameter(n);
    const double c = n / (4.0 * m);
    const double p = (n - 1.0) / (2.0 * n + 1.0);
    const double q = (n + 1.0) / (2.0 * n - 1.0);
    const double x = c * (p * std::cos((2.0 * n + 1.0) * t) + q * std::cos((2.0 * n - 1.0) * t)
                          - 2.0 * std::cos(t));
    const double y = c * (p * std::sin((2.0 * n + 1.0) * t) - q * std::sin((2.0 * n - 1.0) * t)
                          - 2.0 * std::sin(t));
    const double z = -n / (4.0 * m * m) * std::cos(2.0 * n * t);
    return {x, y, z};
}

SampledCurve gen_salkowski(double n, ArcInterval t_range, std::size_t samples) {
    checkAngle(n);
    if (samples < 9) {
        throw CurveError(ErrorKind::TooFewSamples, "Salkowski sampling needs at least 9 samples");
    }
    if (!(t_range.lo < t_range.hi)) {
        throw CurveError(ErrorKind::InvalidArgument, "parameter range must satisfy lo < hi");
    }
    constexpr double halfPi = std::numbers::pi / 2.0;
    for (double t : {t_range.lo, t_range.hi}) {
        if (!(std::abs(n * t) < halfPi)) {
            throw CurveError(ErrorKind::BranchViolation,
                             "parameter range leaves the principal branch |n t| < pi/2", t);
        }
    }
    const double m = slant_parameter(n);
    const double a = n / m;
    const double u0 = salkowski_arclength(n, t_range.lo);
    const double u1 = salkowski_arclength(n, t_range.hi);

    SampledCurve curve;
    curve.provenance = Provenance::ClosedForm;
    curve.step = (u1 - u0) / static_cast<double>(samples - 1);
    curve.samples.reserve(samples);
    for (double u : uniform_grid(u0, u1, samples - 1)) {
        const double t = salkowski_parameter(n, u);
        const double snt = std::sin(n * t);
        const double cnt = std::cos(n * t);
        FrenetFrame frame;
        frame.T = Vec3(-(n * std::cos(t) * snt - std::sin(t) * cnt),
                       -(n * std::sin(t) * snt + std::cos(t) * cnt), a * snt);
        frame.N = Vec3(a * std::cos(t), a * std::sin(t), n);
        frame.B = frame.T.cross(frame.N);
        curve.samples.push_back({u, salkowski_position(n, t), frame, 1.0, snt / cnt});
    }
    return curve;
}

} // namespace curvekit
