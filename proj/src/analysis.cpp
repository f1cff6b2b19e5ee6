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

#include <curvekit/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include <curvekit/error.hpp>

namespace curvekit {

namespace {

struct Differences {
    Vec3 d1;
    Vec3 d2;
    Vec3 d3;
};

// Second-order central stencils around sample i with spacing k samples.
Differences differences(const std::vector<CurveSample>& p, std::size_t i, std::size_t k,
                        double h) {
    const Vec3& x0 = p[i].position;
    const Vec3 xm1 = p[i - k].position - x0;
    const Vec3 xp1 = p[i + k].position - x0;
    const Vec3 xm2 = p[i - 2 * k].position - x0;
    const Vec3 xp2 = p[i + 2 * k].position - x0;
    return {(xp1 - xm1) / (2.0 * h), (xp1 + xm1) / (h * h),
            (xp2 - 2.0 * xp1 + 2.0 * xm1 - xm2) / (2.0 * h * h * h)};
}

FrameEstimateEntry entryFrom(const Differences& d) {
    FrameEstimateEntry e;
    const Vec3 c = d.d1.cross(d.d2);
    const double cn = c.norm();
    const double speed = d.d1.norm();
    e.kappa = cn / (speed * speed * speed);
    if (!(e.kappa >= kMinEstimatedCurvature)) {
        return e;
    }
    e.available = true;
    e.tau = c.dot(d.d3) / (cn * cn);
    e.frame.T = d.d1 / speed;
    e.frame.B = c / cn;
    e.frame.N = e.frame.B.cross(e.frame.T);
    return e;
}

void checkStencil(std::size_t n, std::size_t stride) {
    if (stride == 0) {
        throw CurveError(ErrorKind::InvalidArgument, "stride must be positive");
    }
    if (n < 7 || n < 4 * stride + 1) {
        throw CurveError(ErrorKind::TooFewSamples,
                         "too few samples for the finite-difference stencil");
    }
}

double unwrapTo(double angle, double reference) {
    constexpr double twoPi = 2.0 * std::numbers::pi;
    return angle + twoPi * std::round((reference - angle) / twoPi);
}

} // namespace

std::size_t FrenetEstimate::availableCount() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.available; }));
}

FrenetEstimate estimate_frames(const SampledCurve& curve, std::size_t stride) {
    const std::size_t n = curve.size();
    checkStencil(n, stride);
    FrenetEstimate out;
    out.step = curve.step;
    out.stride = stride;
    out.s = curve.arclengths();
    out.entries.resize(n);
    const double h = curve.step * static_cast<double>(stride);
    for (std::size_t i = 2 * stride; i + 2 * stride < n; ++i) {
        out.entries[i] = entryFrom(differences(curve.samples, i, stride, h));
    }
    if (out.availableCount() == 0) {
        throw CurveError(ErrorKind::CurvatureTooSmall,
                         "estimated curvature is below 1e-8 at every interior sample");
    }
    return out;
}

Series geodesic_curvature_sigma(std::span<const double> kappa, std::span<const double> tau,
                                std::span<const double> s) {
    const std::size_t n = s.size();
    if (kappa.size() != n || tau.size() != n) {
        throw CurveError(ErrorKind::InvalidArgument, "series lengths differ");
    }
    if (n < 3) {
        throw CurveError(ErrorKind::TooFewSamples, "sigma needs at least 3 nodes");
    }
    const double h = (s[n - 1] - s[0]) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(kappa[i] > 0.0)) {
            throw CurveError(ErrorKind::CurvatureVanishes, "sigma needs kappa > 0", s[i]);
        }
        if (i > 0 && std::abs((s[i] - s[i - 1]) - h) > 1e-6 * h) {
            throw CurveError(ErrorKind::InvalidArgument, "sigma needs a uniform grid", s[i]);
        }
    }
    Series out;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double dr = (tau[i + 1] / kappa[i + 1] - tau[i - 1] / kappa[i - 1]) / (s[i + 1] - s[i - 1]);
        const double k2 = kappa[i] * kappa[i];
        const double w2 = k2 + tau[i] * tau[i];
        out.s.push_back(s[i]);
        out.value.push_back(k2 / (w2 * std::sqrt(w2)) * dr);
    }
    return out;
}

VectorSeries darboux_series(const FrenetEstimate& estimate) {
    VectorSeries out;
    for (std::size_t i = 0; i < estimate.entries.size(); ++i) {
        const auto& e = estimate.entries[i];
        if (!e.available) {
            continue;
        }
        out.s.push_back(estimate.s[i]);
        out.value.push_back(e.tau * e.frame.T + e.kappa * e.frame.B);
    }
    return out;
}

std::string_view to_string(CurveClass label) {
    switch (label) {
    case CurveClass::StraightLine: return "StraightLine";
    case CurveClass::PlaneCurve: return "PlaneCurve";
    case CurveClass::CircularHelix: return "CircularHelix";
    case CurveClass::GeneralHelix: return "GeneralHelix";
    case CurveClass::SlantHelix: return "SlantHelix";
    case CurveClass::Salkowski: return "Salkowski";
    case CurveClass::AntiSalkowski: return "AntiSalkowski";
    case CurveClass::ConstantPrecession: return "ConstantPrecession";
    case CurveClass::Generic: return "Generic";
    }
    return "Generic";
}

SpreadStats spread_stats(std::span<const double> values, double floor) {
    SpreadStats st;
    if (values.empty()) {
        return st;
    }
    double sum = 0.0;
    double lo = values.front();
    double hi = values.front();
    for (double v : values) {
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    st.mean = sum / static_cast<double>(values.size());
    st.spread = (hi - lo) / std::max(std::abs(st.mean), floor);
    return st;
}

PrecessionFit fit_precession(std::span<const double> s, std::span<const double> kappa,
                             std::span<const double> tau) {
    const std::size_t n = s.size();
    if (n < 3 || kappa.size() != n || tau.size() != n) {
        throw CurveError(ErrorKind::TooFewSamples, "precession fit needs 3 matching samples");
    }
    std::vector<double> angle(n);
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::atan2(kappa[i], tau[i]);
        angle[i] = i == 0 ? a : unwrapTo(a, angle[i - 1]);
        radius += std::hypot(kappa[i], tau[i]);
    }
    radius /= static_cast<double>(n);

    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += s[i];
        sy += angle[i];
        sxx += s[i] * s[i];
        sxy += s[i] * angle[i];
    }
    const double dn = static_cast<double>(n);
    const double det = dn * sxx - sx * sx;
    Eigen::Vector3d p(det != 0.0 ? (dn * sxy - sx * sy) / det : 0.0, 0.0, radius);
    p[1] = (sy - p[0] * sx) / dn;

    auto misfit = [&](const Eigen::Vector3d& q) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double arg = q[0] * s[i] + q[1];
            const double dk = kappa[i] - q[2] * std::sin(arg);
            const double dt = tau[i] - q[2] * std::cos(arg);
            acc += dk * dk + dt * dt;
        }
        return acc;
    };

    double current = misfit(p);
    for (int iter = 0; iter < 30; ++iter) {
        Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
        Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
        for (std::size_t i = 0; i < n; ++i) {
            const double arg = p[0] * s[i] + p[1];
            const double sn = std::sin(arg);
            const double cs = std::cos(arg);
            const Eigen::Vector3d jk(p[2] * cs * s[i], p[2] * cs, sn);
            const Eigen::Vector3d jt(-p[2] * sn * s[i], -p[2] * sn, cs);
            const double rk = kappa[i] - p[2] * sn;
            const double rt = tau[i] - p[2] * cs;
            jtj += jk * jk.transpose() + jt * jt.transpose();
            jtr += jk * rk + jt * rt;
        }
        const Eigen::Vector3d delta = jtj.ldlt().solve(jtr);
        if (!delta.allFinite()) {
            break;
        }
        const Eigen::Vector3d next = p + delta;
        const double trial = misfit(next);
        if (!(trial < current)) {
            break;
        }
        p = next;
        current = trial;
        if (delta.norm() < 1e-14 * (1.0 + p.norm())) {
            break;
        }
    }

    PrecessionFit fit;
    fit.omega = p[0];
    fit.phase = p[1];
    fit.radius = std::abs(p[2]);
    if (p[2] < 0.0) {
        fit.phase += std::numbers::pi;
    }
    fit.mu = std::abs(fit.omega);
    fit.m = fit.radius > 0.0 ? fit.mu / fit.radius : 0.0;
    fit.residual = fit.radius > 0.0 ? std::sqrt(current / dn) / fit.radius
                                    : std::numeric_limits<double>::infinity();
    return fit;
}

bool ClassificationReport::has(CurveClass label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

ClassificationReport classify(const SampledCurve& curve, const ClassifyTolerances& tol) {
    const std::size_t n = curve.size();
    if (n < 9) {
        throw CurveError(ErrorKind::TooFewSamples, "classification needs at least 9 samples");
    }
    if (!(curve.step > 0.0)) {
        throw CurveError(ErrorKind::InvalidArgument, "curve step must be positive");
    }
    std::size_t k = static_cast<std::size_t>(std::max(1.0, std::round(tol.working_step / curve.step)));
    while (k > 1 && n < 4 * k + 9) {
        --k;
    }
    const double h = curve.step * static_cast<double>(k);

    std::vector<double> s;
    std::vector<FrameEstimateEntry> est;
    for (std::size_t i = 2 * k; i + 2 * k < n; i += k) {
        s.push_back(curve.samples[i].s);
        est.push_back(entryFrom(differences(curve.samples, i, k, h)));
    }

    ClassificationReport report;
    report.stride = k;
    double maxKappa = 0.0;
    for (const auto& e : est) {
        maxKappa = std::max(maxKappa, e.kappa);
    }
    if (maxKappa < tol.eps_abs) {
        report.labels = {CurveClass::StraightLine};
        return report;
    }

    std::vector<double> kappa;
    std::vector<double> tau;
    std::vector<double> ratio;
    bool allAvailable = true;
    double maxTau = 0.0;
    for (const auto& e : est) {
        if (!e.available) {
            allAvailable = false;
            continue;
        }
        kappa.push_back(e.kappa);
        tau.push_back(e.tau);
        ratio.push_back(e.tau / e.kappa);
        maxTau = std::max(maxTau, std::abs(e.tau));
    }
    report.kappa_stats = spread_stats(kappa, tol.eps_abs);
    report.tau_stats = spread_stats(tau, tol.eps_abs);
    report.ratio_stats = spread_stats(ratio, tol.eps_abs);

    if (maxTau < tol.eps_abs) {
        report.labels = {CurveClass::PlaneCurve};
        return report;
    }

    const bool kappaConstant = report.kappa_stats.spread < tol.eps_rel;
    const bool tauConstant = report.tau_stats.spread < tol.eps_rel;
    const bool tauNonVanishing = std::abs(report.tau_stats.mean) > tol.eps_abs;
    const bool ratioConstant = allAvailable && report.ratio_stats.spread < tol.eps_rel;

    if (ratioConstant) {
        if (kappaConstant && tauConstant && tauNonVanishing) {
            report.labels.push_back(CurveClass::CircularHelix);
        }
        report.labels.push_back(CurveClass::GeneralHelix);
        const double phi = std::atan2(1.0, report.ratio_stats.mean);
        Vec3 mean = Vec3::Zero();
        std::vector<Vec3> dirs;
        for (const auto& e : est) {
            dirs.push_back(std::cos(phi) * e.frame.T + std::sin(phi) * e.frame.B);
            mean += dirs.back();
        }
        const Vec3 axis = mean.normalized();
        double residual = 0.0;
        for (const auto& d : dirs) {
            residual = std::max(residual, (d - axis).cwiseAbs().maxCoeff());
        }
        report.axis = axis;
        report.axis_residual = residual;
        report.angle = phi;
    }

    if (allAvailable && est.size() >= 3) {
        const Series sigma = geodesic_curvature_sigma(kappa, tau, s);
        report.sigma_stats = spread_stats(sigma.value, tol.eps_abs);
        const bool slant = !ratioConstant && report.sigma_stats.spread < tol.eps_rel
                           && std::abs(report.sigma_stats.mean) > tol.eps_rel;
        if (slant) {
            report.labels.push_back(CurveClass::SlantHelix);
            if (kappaConstant) {
                report.labels.push_back(CurveClass::Salkowski);
            }
            else if (tauConstant) {
                report.labels.push_back(CurveClass::AntiSalkowski);
            }

            // The axis lies in span{N, W/|W|}: d = (sigma N +/- W/|W|) / sqrt(1 + sigma^2).
            const double sg = report.sigma_stats.mean;
            const double norm = std::sqrt(1.0 + sg * sg);
            double bestResidual = std::numeric_limits<double>::infinity();
            for (double sign : {1.0, -1.0}) {
                std::vector<Vec3> dirs;
                Vec3 mean = Vec3::Zero();
                for (std::size_t i = 1; i + 1 < est.size(); ++i) {
                    const auto& e = est[i];
                    const Vec3 w = (e.tau * e.frame.T + e.kappa * e.frame.B).normalized();
                    dirs.push_back((sg * e.frame.N + sign * w) / norm);
                    mean += dirs.back();
                }
                const Vec3 axis = mean.normalized();
                double residual = 0.0;
                for (const auto& d : dirs) {
                    residual = std::max(residual, (d - axis).cwiseAbs().maxCoeff());
                }
                if (residual < bestResidual) {
                    bestResidual = residual;
                    report.axis = axis;
                    report.axis_residual = residual;
                    report.angle = std::acos(std::clamp(sg / norm, -1.0, 1.0));
                }
            }

            const PrecessionFit fit = fit_precession(s, kappa, tau);
            const double sweep = fit.mu * (s.back() - s.front());
            if (fit.residual < tol.eps_fit && sweep >= tol.min_precession_sweep) {
                report.labels.push_back(CurveClass::ConstantPrecession);
                report.precession = fit;
            }
        }
    }

    if (report.labels.empty()) {
        report.labels.push_back(CurveClass::Generic);
    }
    return report;
}

QuadricFit fit_quadric(std::span<const Vec3> points) {
    if (points.size() < 10) {
        throw CurveError(ErrorKind::TooFewSamples, "quadric fit needs at least 10 points");
    }
    constexpr std::size_t kMaxRows = 4000;
    const std::size_t stride = std::max<std::size_t>(1, points.size() / kMaxRows);
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < points.size(); i += stride) {
        pts.push_back(points[i]);
    }

    Vec3 centroid = Vec3::Zero();
    for (const auto& p : pts) {
        centroid += p;
    }
    centroid /= static_cast<double>(pts.size());
    double scale = 0.0;
    for (const auto& p : pts) {
        scale += (p - centroid).squaredNorm();
    }
    scale = std::sqrt(scale / static_cast<double>(pts.size()));
    if (!(scale > 0.0)) {
        throw CurveError(ErrorKind::DegenerateCurve, "points are coincident");
    }

    Eigen::MatrixXd design(static_cast<Eigen::Index>(pts.size()), 10);
    for (std::size_t r = 0; r < pts.size(); ++r) {
        const Vec3 q = (pts[r] - centroid) / scale;
        design.row(static_cast<Eigen::Index>(r)) << q.x() * q.x(), q.y() * q.y(), q.z() * q.z(),
            q.x() * q.y(), q.x() * q.z(), q.y() * q.z(), q.x(), q.y(), q.z(), 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    const Eigen::VectorXd v = svd.matrixV().col(9);

    QuadricFit fit;
    fit.null_ratio = sv[8] > 0.0 ? sv[9] / sv[8] : 1.0;
    Mat3 a;
    a << v[0], v[3] / 2, v[4] / 2, v[3] / 2, v[1], v[5] / 2, v[4] / 2, v[5] / 2, v[2];
    const Vec3 b(v[6], v[7], v[8]);

    Eigen::FullPivLU<Mat3> lu(a);
    if (!lu.isInvertible()) {
        fit.central = false;
        fit.signature = "degenerate";
        return fit;
    }
    const Vec3 x0 = -0.5 * lu.solve(b);
    const double k = x0.dot(a * x0) - v[9];
    if (k == 0.0) {
        fit.signature = "cone";
        return fit;
    }
    fit.central = true;
    Eigen::SelfAdjointEigenSolver<Mat3> eig(a / (k * scale * scale));
    // Eigen sorts ascending; report descending.
    for (int i = 0; i < 3; ++i) {
        fit.eigenvalues[i] = eig.eigenvalues()[2 - i];
        fit.axes.col(i) = eig.eigenvectors().col(2 - i);
    }
    fit.center = centroid + scale * x0;
    for (int i = 0; i < 3; ++i) {
        fit.signature += fit.eigenvalues[i] > 0.0 ? '+' : '-';
    }
    return fit;
}

} // namespace curvekit
