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

#include <curvekit/verify.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include <curvekit/analysis.hpp>
#include <curvekit/error.hpp>
#include <curvekit/frenet.hpp>
#include <curvekit/generators.hpp>
#include <curvekit/profile.hpp>
#include <curvekit/similarity.hpp>

namespace curvekit {

namespace {

using std::numbers::pi;

std::string format(const char* fmt, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return buf;
}

const FrenetFrame kCanonical{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};

// Circular helix with kappa = a, tau = n, a^2 + n^2 = 1, parameterized so
// that s is arclength.
Vec3 helixPosition(double n, double s) {
    const double a = std::sqrt(1.0 - n * n);
    return {a * std::sin(s), -a * std::cos(s), n * s};
}

SampledCurve integrateHelix(double n, double length, double step) {
    const double a = std::sqrt(1.0 - n * n);
    IntrinsicProfile p(ScalarField::constant(a), ScalarField::constant(n), {0.0, length});
    FrenetFrame f0{Vec3(a, 0.0, n), Vec3::UnitY(), Vec3(-n, 0.0, a)};
    return integrate_frenet(p, f0, helixPosition(n, 0.0), step);
}

CheckResult circle() {
    const SampledCurve c = gen_plane_curve(ScalarField::constant(1.0), {0.0, 2.0 * pi}, 1e-3);
    double err = 0.0;
    for (const auto& p : c.samples) {
        err = std::max(err, (p.position - Vec3(std::sin(p.s), 1.0 - std::cos(p.s), 0.0)).norm());
    }
    return {"circle", err <= 1e-9, format("max position error %.3e (limit 1e-9)", err)};
}

CheckResult helixOrder() {
    auto endpointError = [](double h) {
        const SampledCurve c = integrateHelix(0.6, 20.0, h);
        return (c.back().position - helixPosition(0.6, c.back().s)).norm();
    };
    // The order is measured on coarse steps; at h=1e-3 the error is already at round-off.
    const double err = endpointError(1e-3);
    const double coarse = endpointError(0.04);
    const double fine = endpointError(0.02);
    return {"helix-order", err <= 1e-6 && coarse / fine >= 12.0,
            format("endpoint error %.3e at h=1e-3, refinement ratio %.2f (h=0.04 to 0.02)", err,
                   coarse / fine)};
}

CheckResult salkowski() {
    const double n = 0.8;
    const SampledCurve c = gen_salkowski(n, {0.0, 1.2}, 2001);
    const FrenetEstimate e = estimate_frames(c, 1);
    double kErr = 0.0;
    double nErr = 0.0;
    for (const auto& x : e.entries) {
        if (x.available) {
            kErr = std::max(kErr, std::abs(x.kappa - 1.0));
            nErr = std::max(nErr, std::abs(x.frame.N.z() - n));
        }
    }
    return {"salkowski", kErr <= 1e-3 && nErr <= 5e-3,
            format("max |kappa-1| %.3e, max |<N,e3>-n| %.3e", kErr, nErr)};
}

CheckResult sigmaPrecession() {
    const SampledCurve c = integrate_frenet(precession_profile({1.0, 1.0, false},
                                                               {0.1, pi - 0.1}),
                                            kCanonical, Vec3::Zero(), 1e-3);
    const auto k = c.curvatures();
    const auto t = c.torsions();
    const auto s = c.arclengths();
    const Series sigma = geodesic_curvature_sigma(k, t, s);
    double err = 0.0;
    for (double v : sigma.value) {
        err = std::max(err, std::abs(v + 1.0));
    }
    return {"sigma-precession", err <= 1e-3, format("max |sigma + m| %.3e", err)};
}

CheckResult darbouxHelix() {
    const SampledCurve c = integrateHelix(0.6, 10.0, 1e-3);
    const VectorSeries w = darboux_series(estimate_frames(c, 1));
    double err = 0.0;
    for (const auto& v : w.value) {
        err = std::max(err, (v - Vec3::UnitZ()).norm());
    }
    return {"darboux-helix", err <= 1e-4, format("max |W - e3| %.3e", err)};
}

CheckResult tangentOde() {
    const SampledCurve c = integrateHelix(0.6, 10.0, 1e-3);
    const double r = tangent_ode_residual(c, 1e-2).max();
    return {"tangent-ode", r <= 1e-3, format("max residual %.3e at theta-step 1e-2", r)};
}

CheckResult similaritySalkowski() {
    const double m = slant_parameter(0.8);
    const ArcInterval alphaDomain{0.0, 0.7};
    const ScalarField one = ScalarField::constant(1.0);
    IntrinsicProfile alpha(one, slant_torsion_from_curvature(one, m, 1, alphaDomain),
                           alphaDomain);
    const ScalarField lambda = ScalarField::polynomial({1.0, 0.0, 1.0});
    const ArcInterval betaDomain = max_beta_domain(lambda, 0.0, alphaDomain.length());
    IntrinsicProfile beta = similar_partner(alpha, lambda, betaDomain);
    const double h = 1e-3;
    const SampledCurve ca = integrate_frenet(alpha, kCanonical, Vec3::Zero(), h);
    const SampledCurve cb = integrate_frenet(beta, kCanonical, Vec3::Zero(), h);
    const SimilarityReport r =
        check_similar(ca, cb, transformation_from_lambda(lambda, betaDomain, 0.0, h));
    const double frame = std::max({r.tangent_dev, r.normal_dev, r.binormal_dev});
    return {"similarity-salkowski", r.verdicts.overall,
            format("max frame deviation %.3e, theta deviation %.3e", frame, r.theta_dev)};
}

struct Entry {
    const char* name;
    std::function<CheckResult()> run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"circle", circle},
        {"helix-order", helixOrder},
        {"salkowski", salkowski},
        {"sigma-precession", sigmaPrecession},
        {"darboux-helix", darbouxHelix},
        {"tangent-ode", tangentOde},
        {"similarity-salkowski", similaritySalkowski},
    };
    return entries;
}

} // namespace

const std::vector<std::string>& verification_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) {
            out.emplace_back(e.name);
        }
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_verification(std::string_view name) {
    std::vector<CheckResult> out;
    for (const auto& e : registry()) {
        if (name == "all" || name == e.name) {
            out.push_back(e.run());
        }
    }
    if (out.empty()) {
        throw CurveError(ErrorKind::InvalidArgument,
                         "unknown verification \"" + std::string(name) + "\"");
    }
    return out;
}

} // namespace curvekit
