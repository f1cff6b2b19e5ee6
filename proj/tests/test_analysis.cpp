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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include <Eigen/Geometry>

#include <curvekit/analysis.hpp>
#include <curvekit/frenet.hpp>
#include <curvekit/generators.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace curvekit;
using std::numbers::pi;
using testutil::kCanonical;

namespace {

SampledCurve sampledHelix(double n, double length, double h) {
    const oracle::Helix hx{n};
    SampledCurve c;
    c.step = h;
    const auto count = static_cast<std::size_t>(std::llround(length / h));
    for (std::size_t i = 0; i <= count; ++i) {
        const double s = h * static_cast<double>(i);
        c.samples.push_back({s, hx.position(s), {hx.T(s), hx.N(s), hx.B(s)}, hx.a(), n});
    }
    return c;
}

SampledCurve precessionCurve(double mu, double m) {
    return integrate_frenet(precession_profile({mu, m, false}, {0.1 / mu, (pi - 0.1) / mu}),
                            kCanonical, Vec3::Zero(), 1e-3 / mu);
}

SampledCurve salkowskiCurve() {
    return gen_salkowski(0.8, {salkowski_parameter(0.8, 0.05), salkowski_parameter(0.8, 0.65)},
                         601);
}

} // namespace

TEST_CASE("estimate_frames on the unit circle") {
    SampledCurve c;
    c.step = 1e-3;
    for (int i = 0; i <= 3000; ++i) {
        const double s = 1e-3 * i;
        c.samples.push_back({s, Vec3(std::sin(s), -std::cos(s), 0.0), kCanonical, 1.0, 0.0});
    }
    const FrenetEstimate e = estimate_frames(c);
    CHECK(e.availableCount() == c.size() - 4);
    CHECK_FALSE(e.entries.front().available);
    CHECK_FALSE(e.entries.back().available);
    for (const auto& x : e.entries) {
        if (x.available) {
            CHECK(std::abs(x.kappa - 1.0) <= 1e-6);
            CHECK(std::abs(x.tau) <= 1e-6);
        }
    }
}

TEST_CASE("estimate_frames on the circular helix") {
    const oracle::Helix hx{0.6};
    const SampledCurve c = sampledHelix(0.6, 5.0, 1e-3);
    const FrenetEstimate e = estimate_frames(c);
    for (std::size_t i = 0; i < e.entries.size(); ++i) {
        const auto& x = e.entries[i];
        if (!x.available) {
            continue;
        }
        CHECK(std::abs(x.kappa - 0.8) <= 1e-4);
        CHECK(std::abs(x.tau - 0.6) <= 1e-4);
        CHECK(frame_deviation(x.frame) <= 1e-8);
        CHECK((x.frame.N - hx.N(e.s[i])).norm() <= 1e-4);
        CHECK((x.frame.B - hx.B(e.s[i])).norm() <= 1e-4);
    }
}

TEST_CASE("estimate_frames on a straight line flags every sample") {
    const SampledCurve c = straight_line({0.0, 1.0}, Vec3(1.0, 1.0, 0.0), Vec3::Zero(), 1e-2);
    CHECK_KIND(estimate_frames(c), ErrorKind::CurvatureTooSmall);
}

TEST_CASE("estimate_frames needs enough samples") {
    const SampledCurve c = sampledHelix(0.6, 0.05, 1e-2);
    CHECK_KIND(estimate_frames(c), ErrorKind::TooFewSamples);
    CHECK_KIND(estimate_frames(sampledHelix(0.6, 1.0, 1e-2), 30), ErrorKind::TooFewSamples);
}

TEST_CASE("sigma vanishes on general helices") {
    const SampledCurve c =
        gen_general_helix(ScalarField::sinusoid(1.0, 0.5, 2.0), 0.6, {0.0, 4.0}, 1e-3);
    const Series s = geodesic_curvature_sigma(c.curvatures(), c.torsions(), c.arclengths());
    CHECK(s.value.size() == c.size() - 2);
    for (double v : s.value) {
        CHECK(std::abs(v) <= 1e-8);
    }
}

TEST_CASE("sigma of the precession profile is -m") {
    for (double m : {1.0, 0.5}) {
        const SampledCurve c = precessionCurve(1.0, m);
        const Series s = geodesic_curvature_sigma(c.curvatures(), c.torsions(), c.arclengths());
        for (double v : s.value) {
            CHECK(std::abs(v - oracle::precessionSigma(m)) <= 1e-3);
        }
    }
}

TEST_CASE("sigma of the Salkowski curve is constant and equals m") {
    const SampledCurve c = salkowskiCurve();
    const Series s = geodesic_curvature_sigma(c.curvatures(), c.torsions(), c.arclengths());
    const SpreadStats st = spread_stats(s.value, 1e-6);
    CHECK(st.spread <= 1e-3);
    // kappa = 1, tau/kappa = m u / sqrt(1 - m^2 u^2): (tau/kappa)' = m (1 - m^2 u^2)^(-3/2)
    // and 1 + tau^2 = (1 - m^2 u^2)^(-1), so sigma = m.
    CHECK(st.mean == doctest::Approx(slant_parameter(0.8)).epsilon(1e-5));
}

TEST_CASE("sigma errors") {
    const std::vector<double> s{0.0, 0.1, 0.2, 0.3};
    const std::vector<double> k{1.0, 0.0, 1.0, 1.0};
    const std::vector<double> t{0.0, 0.0, 0.0, 0.0};
    CHECK_KIND(geodesic_curvature_sigma(k, t, s), ErrorKind::CurvatureVanishes);
    const std::vector<double> bad{0.0, 0.1, 0.25, 0.3};
    const std::vector<double> ones{1.0, 1.0, 1.0, 1.0};
    CHECK_KIND(geodesic_curvature_sigma(ones, t, bad), ErrorKind::InvalidArgument);
}

TEST_CASE("Darboux vector of the circular helix is e3") {
    const FrenetEstimate e = estimate_frames(sampledHelix(0.6, 5.0, 1e-3));
    const VectorSeries w = darboux_series(e);
    CHECK(w.value.size() == e.availableCount());
    for (const auto& v : w.value) {
        CHECK((v - Vec3::UnitZ()).norm() <= 1e-4);
    }
}

TEST_CASE("Darboux vector of the unit circle is the binormal") {
    const SampledCurve c = gen_plane_curve(ScalarField::constant(1.0), {0.0, 3.0}, 1e-3);
    for (const auto& v : darboux_series(estimate_frames(c)).value) {
        CHECK(std::abs(std::abs(v.z()) - 1.0) <= 1e-6);
        CHECK(std::hypot(v.x(), v.y()) <= 1e-6);
    }
}

TEST_CASE("Darboux norm identity on a generic curve") {
    std::mt19937_64 rng(3);
    const auto sp = oracle::randomProfile(rng);
    IntrinsicProfile p(ScalarField::sinusoid(sp.k0, sp.k1, sp.kw, sp.kp),
                       ScalarField::sinusoid(sp.t0, sp.t1, sp.tw, sp.tp), {0.0, 2.0});
    const FrenetEstimate e = estimate_frames(integrate_frenet(p, kCanonical, Vec3::Zero(), 1e-3));
    const VectorSeries w = darboux_series(e);
    std::size_t j = 0;
    for (const auto& x : e.entries) {
        if (x.available) {
            CHECK(std::abs(w.value[j++].norm() - std::hypot(x.kappa, x.tau)) <= 1e-10);
        }
    }
}

TEST_CASE("classify a straight line") {
    const SampledCurve c = straight_line({0.0, 1.0}, Vec3(0.0, 1.0, 1.0), Vec3::Zero(), 1e-2);
    const ClassificationReport r = classify(c);
    REQUIRE(r.labels.size() == 1);
    CHECK(r.has(CurveClass::StraightLine));
}

TEST_CASE("classify the circular helix") {
    const ClassificationReport r = classify(sampledHelix(0.6, 10.0, 1e-3));
    CHECK(r.has(CurveClass::CircularHelix));
    CHECK(r.has(CurveClass::GeneralHelix));
    CHECK_FALSE(r.has(CurveClass::SlantHelix));
    CHECK_FALSE(r.has(CurveClass::PlaneCurve));
    REQUIRE(r.axis.has_value());
    CHECK((*r.axis - Vec3::UnitZ()).norm() <= 1e-4);
    REQUIRE(r.angle.has_value());
    CHECK(*r.angle == doctest::Approx(std::acos(0.6)).epsilon(1e-4));
    CHECK(std::abs(r.sigma_stats.mean) <= ClassifyTolerances{}.eps_rel);
}

TEST_CASE("classify a plane curve") {
    const ClassificationReport r =
        classify(gen_plane_curve(ScalarField::sinusoid(1.0, 0.5, 2.0), {0.0, 3.0}, 1e-3));
    CHECK(r.has(CurveClass::PlaneCurve));
    CHECK_FALSE(r.has(CurveClass::GeneralHelix));
    CHECK_FALSE(r.has(CurveClass::StraightLine));
}

TEST_CASE("classify a general helix with varying curvature") {
    const ClassificationReport r =
        classify(gen_general_helix(ScalarField::sinusoid(1.0, 0.5, 2.0), 0.6, {0.0, 4.0}, 1e-3));
    CHECK(r.has(CurveClass::GeneralHelix));
    CHECK_FALSE(r.has(CurveClass::CircularHelix));
    REQUIRE(r.axis.has_value());
    CHECK(std::abs(r.axis->z()) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("classify the Salkowski curve") {
    const ClassificationReport r = classify(salkowskiCurve());
    CHECK(r.has(CurveClass::SlantHelix));
    CHECK(r.has(CurveClass::Salkowski));
    CHECK_FALSE(r.has(CurveClass::GeneralHelix));
    CHECK_FALSE(r.has(CurveClass::AntiSalkowski));
}

TEST_CASE("classify a slant helix and its axis") {
    const SampledCurve c =
        gen_slant_helix(ScalarField::polynomial({1.0, 0.3}), 0.8, {0.0, 0.6}, 1e-3);
    const ClassificationReport r = classify(c);
    CHECK(r.has(CurveClass::SlantHelix));
    CHECK_FALSE(r.has(CurveClass::Salkowski));
    REQUIRE(r.axis.has_value());
    const FrenetEstimate e = estimate_frames(c, r.stride);
    double lo = 1e300;
    double hi = -1e300;
    for (const auto& x : e.entries) {
        if (x.available) {
            lo = std::min(lo, x.frame.N.dot(*r.axis));
            hi = std::max(hi, x.frame.N.dot(*r.axis));
        }
    }
    CHECK(hi - lo <= 5e-3);
}

TEST_CASE("classify a constant precession curve") {
    const ClassificationReport r = classify(precessionCurve(1.0, 1.0));
    CHECK(r.has(CurveClass::SlantHelix));
    CHECK(r.has(CurveClass::ConstantPrecession));
    CHECK(r.sigma_stats.mean == doctest::Approx(-1.0).epsilon(1e-3));
    REQUIRE(r.precession.has_value());
    CHECK(r.precession->mu == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.precession->m == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("classification labels are consistent") {
    std::vector<SampledCurve> curves;
    curves.push_back(sampledHelix(0.6, 10.0, 1e-3));
    curves.push_back(salkowskiCurve());
    curves.push_back(precessionCurve(1.0, 1.0));
    curves.push_back(gen_plane_curve(ScalarField::constant(1.0), {0.0, 3.0}, 1e-3));
    for (const auto& c : curves) {
        const ClassificationReport r = classify(c);
        if (r.has(CurveClass::StraightLine)) {
            CHECK(r.labels.size() == 1);
        }
        if (r.has(CurveClass::CircularHelix)) {
            CHECK(r.has(CurveClass::GeneralHelix));
        }
        if (r.has(CurveClass::Salkowski) || r.has(CurveClass::ConstantPrecession)) {
            CHECK(r.has(CurveClass::SlantHelix));
        }
        if (r.has(CurveClass::GeneralHelix)) {
            CHECK(std::abs(r.sigma_stats.mean) <= ClassifyTolerances{}.eps_rel);
        }
    }
}

TEST_CASE("classify is invariant under rigid motions") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g(0.0, 1.0);
    const SampledCurve base = sampledHelix(0.6, 10.0, 1e-3);
    const ClassificationReport r0 = classify(base);
    for (int trial = 0; trial < 3; ++trial) {
        const Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
        const Mat3 rot = q.normalized().toRotationMatrix();
        const Vec3 shift(g(rng), g(rng), g(rng));
        const ClassificationReport r = classify(base.transformed(rot, shift));
        CHECK(r.labels == r0.labels);
        REQUIRE(r.axis.has_value());
        CHECK((*r.axis - rot * *r0.axis).norm() <= 1e-6);
    }
    const SampledCurve salk = salkowskiCurve();
    const ClassificationReport s0 = classify(salk);
    const Mat3 rot = Eigen::AngleAxisd(0.7, Vec3(1.0, 2.0, 3.0).normalized()).toRotationMatrix();
    const ClassificationReport s1 = classify(salk.transformed(rot, Vec3(5.0, -1.0, 2.0)));
    CHECK(s1.labels == s0.labels);
    REQUIRE(s0.axis.has_value());
    REQUIRE(s1.axis.has_value());
    CHECK((*s1.axis - rot * *s0.axis).norm() <= 1e-6);
}

TEST_CASE("classify needs nine samples") {
    CHECK_KIND(classify(sampledHelix(0.6, 0.07, 1e-2)), ErrorKind::TooFewSamples);
}

TEST_CASE("fit_quadric recognizes a one-sheeted hyperboloid") {
    std::vector<Vec3> pts;
    for (int i = 0; i < 40; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double t = 0.157 * i;
            const double z = -1.0 + 0.2 * j;
            const double r = std::sqrt(4.0 + 2.0 * z * z);
            pts.emplace_back(r * std::cos(t) + 1.0, r * std::sin(t) - 2.0, z + 0.5);
        }
    }
    const QuadricFit q = fit_quadric(pts);
    CHECK(q.signature == "++-");
    CHECK(q.central);
    CHECK((q.center - Vec3(1.0, -2.0, 0.5)).norm() <= 1e-8);
    CHECK(q.eigenvalues[0] == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(q.eigenvalues[2] == doctest::Approx(-0.5).epsilon(1e-8));
}

TEST_CASE("best-fit quadric of a precession curve is a one-sheeted hyperboloid") {
    for (auto [mu, m] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}, std::pair{1.0, 2.0}}) {
        const SampledCurve c = precessionCurve(mu, m);
        const auto pts = c.positions();
        const QuadricFit q = fit_quadric(pts);
        CHECK(q.signature == "++-");
        // x^2 + y^2 - m^2 z^2 = 4 m^4 / mu^2 in the aligned frame.
        const double lp = 0.5 * (q.eigenvalues[0] + q.eigenvalues[1]);
        CHECK(-q.eigenvalues[2] / lp == doctest::Approx(m * m).epsilon(1e-4));
        CHECK(1.0 / lp == doctest::Approx(4.0 * m * m * m * m / (mu * mu)).epsilon(1e-4));
    }
}
