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

#include <curvekit/frenet.hpp>

#include <array>
#include <cmath>

#include <curvekit/error.hpp>
#include <curvekit/interpolation.hpp>
#include <curvekit/quadrature.hpp>

namespace curvekit {

namespace {

constexpr double kTorsionFloor = 1e-9;

struct State {
    Vec3 T;
    Vec3 N;
    Vec3 B;
    Vec3 x;
};

State derivative(const State& y, const CurvatureTorsion& ct) {
    return {ct.kappa * y.N, -ct.kappa * y.T + ct.tau * y.B, -ct.tau * y.N, y.T};
}

State axpy(const State& y, double h, const State& k) {
    return {y.T + h * k.T, y.N + h * k.N, y.B + h * k.B, y.x + h * k.x};
}

} // namespace

SampledCurve integrate_frenet(const IntrinsicProfile& profile, const FrenetFrame& frame0,
                              const Vec3& pos0, double step) {
    return integrate_frenet(profile, frame0, pos0, step, profile.domain());
}

SampledCurve integrate_frenet(const IntrinsicProfile& profile, const FrenetFrame& frame0,
                              const Vec3& pos0, double step, ArcInterval range) {
    if (profile.isStraight()) {
        throw CurveError(ErrorKind::DegenerateProfile,
                         "curvature is identically zero; use straight_line instead");
    }
    validate_frame(frame0);
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw CurveError(ErrorKind::InvalidArgument, "step must be positive");
    }
    if (!(range.lo <= range.hi) || !profile.domain().contains(range)) {
        throw CurveError(ErrorKind::OutOfDomain, "integration range leaves the profile domain",
                         range.hi);
    }

    SampledCurve curve;
    curve.provenance = Provenance::Integrated;
    const double length = range.length();
    if (length == 0.0) {
        const auto ct = eval_profile(profile, range.lo);
        curve.step = step;
        curve.samples.push_back({range.lo, pos0, frame0, ct.kappa, ct.tau});
        return curve;
    }
    if (step > length / 4.0) {
        throw CurveError(ErrorKind::InvalidArgument,
                         "step must not exceed a quarter of the integration range");
    }

    const std::size_t count = interval_count(length, step);
    const std::vector<double> grid = uniform_grid(range.lo, range.hi, count);
    const double h = length / static_cast<double>(count);
    curve.step = h;
    curve.samples.reserve(count + 1);

    State y{frame0.T, frame0.N, frame0.B, pos0};
    auto ct = eval_profile(profile, grid[0]);
    curve.samples.push_back({grid[0], pos0, frame0, ct.kappa, ct.tau});
    for (std::size_t i = 0; i < count; ++i) {
        const double s0 = grid[i];
        const double s1 = grid[i + 1];
        const double hs = s1 - s0;
        const auto ctMid = eval_profile(profile, s0 + 0.5 * hs);
        const auto ctEnd = eval_profile(profile, s1);

        const State k1 = derivative(y, ct);
        const State k2 = derivative(axpy(y, 0.5 * hs, k1), ctMid);
        const State k3 = derivative(axpy(y, 0.5 * hs, k2), ctMid);
        const State k4 = derivative(axpy(y, hs, k3), ctEnd);
        const double w = hs / 6.0;
        y.T += w * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T);
        y.N += w * (k1.N + 2.0 * k2.N + 2.0 * k3.N + k4.N);
        y.B += w * (k1.B + 2.0 * k2.B + 2.0 * k3.B + k4.B);
        y.x += w * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);

        const FrenetFrame frame = reorthonormalize(y.T, y.N, y.B);
        y.T = frame.T;
        y.N = frame.N;
        y.B = frame.B;
        ct = ctEnd;
        curve.samples.push_back({s1, y.x, frame, ct.kappa, ct.tau});
    }
    return curve;
}

SampledCurve straight_line(ArcInterval domain, const Vec3& direction, const Vec3& pos0,
                           double step) {
    if (!(domain.lo <= domain.hi)) {
        throw CurveError(ErrorKind::InvalidArgument, "empty domain");
    }
    const double norm = direction.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw CurveError(ErrorKind::InvalidArgument, "line direction must be nonzero");
    }
    FrenetFrame frame;
    frame.T = direction / norm;
    const Vec3 helper = std::abs(frame.T.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    frame.N = (helper - helper.dot(frame.T) * frame.T).normalized();
    frame.B = frame.T.cross(frame.N);

    SampledCurve curve;
    curve.provenance = Provenance::ClosedForm;
    const std::size_t count = interval_count(domain.length(), step);
    curve.step = count == 0 ? step : domain.length() / static_cast<double>(count);
    for (double s : uniform_grid(domain.lo, domain.hi, count)) {
        curve.samples.push_back({s, pos0 + (s - domain.lo) * frame.T, frame, 0.0, 0.0});
    }
    return curve;
}

double TangentResidual::max() const {
    double m = 0.0;
    for (double r : residual) {
        m = std::max(m, r);
    }
    return m;
}

TangentResidual tangent_ode_residual(const SampledCurve& curve, double theta_step) {
    const std::size_t n = curve.size();
    if (n < 7) {
        throw CurveError(ErrorKind::TooFewSamples, "tangent residual needs at least 7 samples");
    }
    if (!(theta_step > 0.0)) {
        throw CurveError(ErrorKind::InvalidArgument, "theta step must be positive");
    }
    std::vector<double> s(n);
    std::vector<double> kappa(n);
    std::vector<double> ratio(n);
    std::vector<double> dsdtheta(n);
    std::array<std::vector<double>, 3> tangent;
    std::array<std::vector<double>, 3> tangentSlope;
    for (auto& v : tangent) {
        v.resize(n);
    }
    for (auto& v : tangentSlope) {
        v.resize(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const CurveSample& p = curve.samples[i];
        if (!(p.kappa > 0.0)) {
            throw CurveError(ErrorKind::DegenerateCurve,
                             "tangent residual needs strictly positive curvature", p.s);
        }
        if (std::abs(p.tau) < kTorsionFloor) {
            throw CurveError(ErrorKind::TorsionVanishes,
                             "torsion vanishes; the third-order tangent equation is undefined",
                             p.s);
        }
        s[i] = p.s;
        kappa[i] = p.kappa;
        ratio[i] = p.tau / p.kappa;
        dsdtheta[i] = 1.0 / p.kappa;
        for (int c = 0; c < 3; ++c) {
            tangent[c][i] = p.frame.T[c];
            tangentSlope[c][i] = p.kappa * p.frame.N[c];
        }
    }

    const std::vector<double> theta = cumulativeSampled(kappa, curve.step);
    const CubicHermite arclengthOfTheta = CubicHermite::monotoneWithSlopes(theta, s, dsdtheta);
    const CubicHermite ratioOfS = CubicHermite::monotone(s, ratio);
    std::array<CubicHermite, 3> tangentOfS;
    for (int c = 0; c < 3; ++c) {
        tangentOfS[c] = CubicHermite(s, tangent[c], tangentSlope[c]);
    }

    const double span = theta.back() - theta.front();
    // Nodes stay strictly uniform; clamping the last one onto the table end
    // would perturb the spacing, which the third difference amplifies.
    auto nodes = static_cast<std::size_t>(std::floor(span / theta_step));
    while (nodes > 0 && theta.front() + static_cast<double>(nodes) * theta_step > theta.back()) {
        --nodes;
    }
    if (nodes < 4) {
        throw CurveError(ErrorKind::TooFewSamples,
                         "total curvature too small for five theta nodes at this step");
    }
    std::vector<double> th(nodes + 1);
    std::vector<Vec3> T(nodes + 1);
    std::vector<double> f(nodes + 1);
    for (std::size_t j = 0; j <= nodes; ++j) {
        th[j] = theta.front() + static_cast<double>(j) * theta_step;
        const double sj = arclengthOfTheta(th[j]);
        T[j] = Vec3(tangentOfS[0](sj), tangentOfS[1](sj), tangentOfS[2](sj));
        f[j] = ratioOfS(sj);
    }

    TangentResidual out;
    out.theta_step = theta_step;
    const double k = theta_step;
    for (std::size_t j = 2; j + 2 <= nodes; ++j) {
        const Vec3 d1 = (T[j + 1] - T[j - 1]) / (2.0 * k);
        const Vec3 d2 = (T[j + 1] - 2.0 * T[j] + T[j - 1]) / (k * k);
        const Vec3 d3 = (T[j + 2] - 2.0 * T[j + 1] + 2.0 * T[j - 1] - T[j - 2]) / (2.0 * k * k * k);
        const double fj = f[j];
        const double fp = (f[j + 1] - f[j - 1]) / (2.0 * k);
        // Expanding (T''/f)' with T'' = -T + f B gives the T coefficient
        // f'/f^2; the printed form f'/f holds only where f' = 0.
        const Vec3 r = d3 / fj - (fp / (fj * fj)) * d2 + ((1.0 + fj * fj) / fj) * d1
                       - (fp / (fj * fj)) * T[j];
        out.theta.push_back(th[j]);
        out.residual.push_back(r.norm());
    }
    return out;
}

} // namespace curvekit
