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
#include <random>

#include <doctest.h>

#include <curvekit/frenet.hpp>
#include <curvekit/generators.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace curvekit;
using testutil::kCanonical;

namespace {

IntrinsicProfile helixProfile(double n, double length) {
    const double a = std::sqrt(1.0 - n * n);
    return IntrinsicProfile(ScalarField::constant(a), ScalarField::constant(n), {0.0, length});
}

} // namespace

TEST_CASE("integrating unit curvature reproduces the unit circle") {
    IntrinsicProfile p(ScalarField::constant(1.0), ScalarField::constant(0.0), {0.0, 6.0});
    const SampledCurve c = integrate_frenet(p, kCanonical, Vec3(0.0, -1.0, 0.0), 1e-3);
    CHECK(c.provenance == Provenance::Integrated);
    double err = 0.0;
    for (const auto& q : c.samples) {
        err = std::max(err, (q.position - Vec3(std::sin(q.s), -std::cos(q.s), 0.0)).norm());
    }
    CHECK(err <= 1e-6);
}

TEST_CASE("integrating the circular helix profile matches the closed form") {
    const oracle::Helix hx{0.6};
    const FrenetFrame f0{Vec3(0.8, 0.0, 0.6), Vec3(0.0, 1.0, 0.0), Vec3(-0.6, 0.0, 0.8)};
    const SampledCurve c = integrate_frenet(helixProfile(0.6, 10.0), f0, Vec3(0.0, -0.8, 0.0),
                                            1e-3);
    double err = 0.0;
    double frameErr = 0.0;
    for (const auto& q : c.samples) {
        err = std::max(err, (q.position - hx.position(q.s)).norm());
        frameErr = std::max(frameErr, (q.frame.T - hx.T(q.s)).norm());
        frameErr = std::max(frameErr, (q.frame.N - hx.N(q.s)).norm());
        frameErr = std::max(frameErr, (q.frame.B - hx.B(q.s)).norm());
    }
    CHECK(err <= 1e-6);
    CHECK(frameErr <= 1e-6);
}

TEST_CASE("the initial state is reproduced exactly") {
    const FrenetFrame f0{Vec3(0.8, 0.0, 0.6), Vec3(0.0, 1.0, 0.0), Vec3(-0.6, 0.0, 0.8)};
    const Vec3 pos0(1.0, 2.0, 3.0);
    const SampledCurve c = integrate_frenet(helixProfile(0.6, 1.0), f0, pos0, 1e-2);
    CHECK(c.front().position == pos0);
    CHECK(c.front().frame.T == f0.T);
    CHECK(c.front().frame.N == f0.N);
    CHECK(c.front().frame.B == f0.B);
    CHECK(c.front().s == 0.0);
    CHECK(c.back().s == 1.0);
}

TEST_CASE("a zero-length range yields the single initial sample") {
    const Vec3 pos0(0.5, 0.0, 0.0);
    const SampledCurve c = integrate_frenet(helixProfile(0.6, 1.0), kCanonical, pos0, 1e-3,
                                            {0.0, 0.0});
    REQUIRE(c.size() == 1);
    CHECK(c.front().position == pos0);
    CHECK(c.front().frame.T == kCanonical.T);
}

TEST_CASE("integrate_frenet errors") {
    IntrinsicProfile straight(ScalarField::constant(0.0), ScalarField::constant(0.0), {0.0, 1.0});
    CHECK_KIND(integrate_frenet(straight, kCanonical, Vec3::Zero(), 1e-3),
               ErrorKind::DegenerateProfile);
    const FrenetFrame bad{Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ()};
    CHECK_KIND(integrate_frenet(helixProfile(0.6, 1.0), bad, Vec3::Zero(), 1e-3),
               ErrorKind::InvalidFrame);
    const FrenetFrame leftHanded{Vec3::UnitX(), Vec3::UnitY(), -Vec3::UnitZ()};
    CHECK_KIND(integrate_frenet(helixProfile(0.6, 1.0), leftHanded, Vec3::Zero(), 1e-3),
               ErrorKind::InvalidFrame);
    CHECK_KIND(integrate_frenet(helixProfile(0.6, 1.0), kCanonical, Vec3::Zero(), 0.3),
               ErrorKind::InvalidArgument);
    CHECK_KIND(integrate_frenet(helixProfile(0.6, 1.0), kCanonical, Vec3::Zero(), 1e-3,
                                {0.5, 1.5}),
               ErrorKind::OutOfDomain);
}

TEST_CASE("integration invariants on random smooth profiles") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const auto sp = oracle::randomProfile(rng);
        IntrinsicProfile p(ScalarField::sinusoid(sp.k0, sp.k1, sp.kw, sp.kp),
                           ScalarField::sinusoid(sp.t0, sp.t1, sp.tw, sp.tp), {0.0, 2.0});
        const double h = 1e-3;
        const SampledCurve c = integrate_frenet(p, kCanonical, Vec3::Zero(), h);
        double gram = 0.0;
        double det = 0.0;
        double spacing = 0.0;
        double speedLo = 1.0;
        double speedHi = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto& q = c.samples[i];
            gram = std::max(gram, gram_deviation(q.frame.T, q.frame.N, q.frame.B));
            det = std::max(det, std::abs(q.frame.matrix().determinant() - 1.0));
            const auto kt = eval_profile(p, q.s);
            CHECK(q.kappa == kt.kappa);
            CHECK(q.tau == kt.tau);
            if (i > 0) {
                spacing = std::max(spacing, std::abs(q.s - c.samples[i - 1].s - c.step));
                const double speed = (q.position - c.samples[i - 1].position).norm() / c.step;
                speedLo = std::min(speedLo, speed);
                speedHi = std::max(speedHi, speed);
            }
        }
        CHECK(gram <= 1e-12);
        CHECK(det <= 1e-10);
        CHECK(spacing <= 1e-12);
        CHECK(speedLo >= 1.0 - 5.0 * h * h);
        CHECK(speedHi <= 1.0 + 1e-12);
    }
}

TEST_CASE("halving the step reduces the helix error by at least 12") {
    const oracle::Helix hx{0.6};
    const FrenetFrame f0{hx.T(0), hx.N(0), hx.B(0)};
    auto err = [&](double h) {
        const SampledCurve c = integrate_frenet(helixProfile(0.6, 20.0), f0, hx.position(0), h);
        return (c.back().position - hx.position(c.back().s)).norm();
    };
    CHECK(err(0.04) / err(0.02) >= 12.0);
}

TEST_CASE("the step is shrunk to divide the domain evenly") {
    const SampledCurve c = integrate_frenet(helixProfile(0.6, 1.0), kCanonical, Vec3::Zero(),
                                            0.03);
    CHECK(c.step <= 0.03);
    CHECK(c.size() == 35);
    CHECK(c.back().s == 1.0);
}

TEST_CASE("reorthonormalize examples") {
    const FrenetFrame f = reorthonormalize(kCanonical);
    CHECK((f.T - kCanonical.T).norm() <= 1e-15);
    CHECK((f.N - kCanonical.N).norm() <= 1e-15);
    CHECK((f.B - kCanonical.B).norm() <= 1e-15);

    const oracle::Helix hx{0.6};
    const FrenetFrame g{hx.T(0.7), hx.N(0.7), hx.B(0.7)};
    const FrenetFrame gg = reorthonormalize(g);
    CHECK((gg.T - g.T).norm() <= 1e-15);
    CHECK((gg.N - g.N).norm() <= 1e-15);
    CHECK((gg.B - g.B).norm() <= 1e-15);

    const FrenetFrame h = reorthonormalize(Vec3(1.0, 1e-4, 0.0), Vec3::UnitY(), Vec3::UnitZ());
    CHECK(std::abs(h.T.norm() - 1.0) <= 1e-15);
    CHECK(std::abs(h.T.dot(h.N)) <= 1e-15);
    CHECK((h.B - h.T.cross(h.N)).norm() == 0.0);

    CHECK_KIND(reorthonormalize(Vec3::UnitX(), Vec3(1.0, 1e-9, 0.0), Vec3::UnitZ()),
               ErrorKind::TooDegenerate);
}

TEST_CASE("straight lines are built directly") {
    const SampledCurve c = straight_line({0.0, 2.0}, Vec3(0.0, 3.0, 4.0), Vec3(1.0, 0.0, 0.0),
                                         0.5);
    REQUIRE(c.size() == 5);
    CHECK((c.back().position - Vec3(1.0, 1.2, 1.6)).norm() <= 1e-15);
    for (const auto& q : c.samples) {
        CHECK(q.kappa == 0.0);
        CHECK(frame_deviation(q.frame) <= 1e-12);
    }
}

TEST_CASE("tangent residual vanishes on the circular helix") {
    const oracle::Helix hx{0.6};
    const SampledCurve c = integrate_frenet(helixProfile(0.6, 10.0),
                                            FrenetFrame{hx.T(0), hx.N(0), hx.B(0)},
                                            hx.position(0), 1e-3);
    const TangentResidual r = tangent_ode_residual(c, 1e-2);
    CHECK(r.max() <= 1e-3);
    CHECK(r.residual.size() == r.theta.size());
    CHECK(r.theta.size() > 700);
}

TEST_CASE("tangent residual on the Salkowski curve converges at second order") {
    const SampledCurve c = gen_salkowski(0.8, {salkowski_parameter(0.8, 0.1),
                                               salkowski_parameter(0.8, 0.6)},
                                         2001);
    const double r1 = tangent_ode_residual(c, 1e-2).max();
    const double r2 = tangent_ode_residual(c, 5e-3).max();
    const double r3 = tangent_ode_residual(c, 2.5e-3).max();
    CHECK(r1 <= 1e-2);
    CHECK(r1 / r2 >= 3.0);
    CHECK(r2 / r3 >= 3.0);
}

TEST_CASE("tangent residual errors") {
    IntrinsicProfile plane(ScalarField::constant(1.0), ScalarField::constant(0.0), {0.0, 2.0});
    const SampledCurve c = integrate_frenet(plane, kCanonical, Vec3::Zero(), 1e-3);
    CHECK_KIND(tangent_ode_residual(c, 1e-2), ErrorKind::TorsionVanishes);
    const SampledCurve shortCurve = integrate_frenet(helixProfile(0.6, 0.05), kCanonical,
                                                     Vec3::Zero(), 0.01);
    CHECK_KIND(tangent_ode_residual(shortCurve, 1e-2), ErrorKind::TooFewSamples);
}
