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

#include <curvekit/analysis.hpp>
#include <curvekit/frenet.hpp>
#include <curvekit/generators.hpp>
#include <curvekit/similarity.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace curvekit;
using std::numbers::pi;
using testutil::kCanonical;

namespace {

constexpr double kStep = 1e-3;

IntrinsicProfile salkowskiProfile(double length = 0.7) {
    const ScalarField one = ScalarField::constant(1.0);
    return IntrinsicProfile(one, slant_torsion_from_curvature(one, slant_parameter(0.8), 1,
                                                              {0.0, length}),
                            {0.0, length});
}

SampledCurve integrate(const IntrinsicProfile& p) {
    return integrate_frenet(p, kCanonical, Vec3::Zero(), kStep);
}

struct Pair {
    IntrinsicProfile beta;
    VariableTransformation tr;
};

Pair partnerOf(const IntrinsicProfile& alpha, const ScalarField& lambda) {
    const ArcInterval betaDomain = max_beta_domain(lambda, 0.0, alpha.domain().length(), kStep);
    return {similar_partner(alpha, lambda, betaDomain, kStep),
            transformation_from_lambda(lambda, betaDomain, alpha.domain().lo, kStep)};
}

bool predicatesAgree(const SimilarityVerdicts& v) {
    return v.tangent == v.normal && v.normal == v.binormal && v.binormal == v.ratio_theta;
}

} // namespace

TEST_CASE("make_transformation with constant curvatures") {
    const auto tr = make_transformation(ScalarField::constant(1.0), {0.0, 10.0},
                                        ScalarField::constant(2.0), {0.0, 1.0});
    for (double s : {0.0, 0.25, 0.5, 0.999, 1.0}) {
        CHECK(tr.lambda()(s) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(tr.to_alpha(s) == doctest::Approx(2.0 * s).epsilon(1e-12));
    }
}

TEST_CASE("make_transformation against unit curvature integrates kappa") {
    const ScalarField kappa = ScalarField::sinusoid(1.0, 0.5, 3.0, 0.2);
    const auto tr = make_transformation(ScalarField::constant(1.0), {0.0, 10.0}, kappa,
                                        {0.0, 2.0});
    for (int i = 0; i <= 20; ++i) {
        const double s = 0.1 * i;
        CHECK(std::abs(tr.to_alpha(s) - total_curvature(kappa, 0.0, s)) <= 1e-10);
    }
}

TEST_CASE("make_transformation reports where the alpha domain runs out") {
    try {
        make_transformation(ScalarField::constant(1.0), {0.0, 1.0}, ScalarField::constant(10.0),
                            {0.0, 1.0});
        FAIL("expected DomainExhausted");
    }
    catch (const CurveError& e) {
        CHECK(e.kind() == ErrorKind::DomainExhausted);
        REQUIRE(e.where().has_value());
        CHECK(*e.where() == doctest::Approx(0.1).epsilon(1e-9));
    }
    CHECK_KIND(make_transformation(ScalarField::polynomial({0.0, 1.0}), {0.0, 1.0},
                                   ScalarField::constant(1.0), {0.0, 0.1}),
               ErrorKind::NonPositiveCurvature);
    CHECK_KIND(make_transformation(ScalarField::constant(1.0), {0.0, 1.0},
                                   ScalarField::constant(-1.0), {0.0, 0.1}),
               ErrorKind::NonPositiveCurvature);
}

TEST_CASE("transformations compose with their inverse to the identity") {
    const ScalarField lambda = ScalarField::sinusoid(1.5, 0.7, 2.0, 0.1);
    const auto tr = transformation_from_lambda(lambda, {0.0, 2.0}, 0.0);
    const auto inv = tr.inverse();
    for (int i = 0; i <= 200; ++i) {
        const double s = 0.01 * i;
        CHECK(std::abs(inv.to_alpha(tr.to_alpha(s)) - s) <= 1e-10);
        CHECK(std::abs(tr.to_beta(tr.to_alpha(s)) - s) <= 1e-10);
        // lambda^a_b lambda^b_a = 1.
        CHECK(tr.lambda()(s) * inv.lambda()(tr.to_alpha(s)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // Strictly increasing.
    double prev = -1.0;
    for (int i = 0; i <= 2000; ++i) {
        const double v = tr.to_alpha(1e-3 * i);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("make_transformation round trip is the identity") {
    const ScalarField ka = ScalarField::sinusoid(1.0, 0.3, 2.0);
    const ScalarField kb = ScalarField::sinusoid(2.0, 0.5, 1.0, 0.4);
    const ArcInterval betaDomain{0.0, 1.0};
    const auto ab = make_transformation(ka, {0.0, 10.0}, kb, betaDomain);
    const ArcInterval alphaImage{0.0, ab.to_alpha(1.0)};
    const auto ba = make_transformation(kb, betaDomain, ka, alphaImage);
    for (int i = 0; i <= 100; ++i) {
        const double s = 0.01 * i;
        CHECK(std::abs(ba.to_alpha(ab.to_alpha(s)) - s) <= 1e-8);
    }
}

TEST_CASE("transformation_from_lambda rejects non-positive lambda") {
    CHECK_KIND(transformation_from_lambda(ScalarField::polynomial({1.0, -2.0}), {0.0, 1.0}, 0.0),
               ErrorKind::NonPositiveLambda);
}

TEST_CASE("correspond examples") {
    const auto identity = transformation_from_lambda(ScalarField::constant(1.0), {0.0, 1.0}, 0.0);
    CHECK(correspond(identity, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    const auto twice = transformation_from_lambda(ScalarField::constant(2.0), {0.0, 1.0}, 0.0);
    CHECK(correspond(twice, 0.3) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(correspond_inverse(twice, 0.6) == doctest::Approx(0.3).epsilon(1e-14));
    const ScalarField kappa = ScalarField::sinusoid(2.0, 1.0, 1.0);
    const auto byKappa = transformation_from_lambda(kappa, {0.0, pi}, 0.0);
    for (double s : {0.5, 1.0, 2.5}) {
        CHECK(std::abs(correspond(byKappa, s) - total_curvature(kappa, 0.0, s)) <= 1e-10);
    }
    CHECK_KIND(correspond(identity, 1.5), ErrorKind::OutOfDomain);
}

TEST_CASE("similar_partner scales a circular helix") {
    const double k = 1.0 / std::sqrt(2.0);
    IntrinsicProfile helix(ScalarField::constant(k), ScalarField::constant(k), {0.0, 4.0});
    const IntrinsicProfile beta = similar_partner(helix, ScalarField::constant(2.0), {0.0, 2.0});
    for (double s : {0.0, 0.7, 2.0}) {
        const auto kt = eval_profile(beta, s);
        CHECK(kt.kappa == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
        CHECK(kt.tau == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("similar_partner with unit lambda is the identity") {
    IntrinsicProfile alpha(ScalarField::sinusoid(1.0, 0.3, 2.0), ScalarField::polynomial({0.2, 0.5}),
                           {0.0, 2.0});
    const IntrinsicProfile beta = similar_partner(alpha, ScalarField::constant(1.0), {0.0, 2.0});
    for (int i = 0; i <= 20; ++i) {
        const double s = 0.1 * i;
        CHECK(std::abs(eval_profile(beta, s).kappa - eval_profile(alpha, s).kappa) <= 1e-12);
        CHECK(std::abs(eval_profile(beta, s).tau - eval_profile(alpha, s).tau) <= 1e-12);
    }
}

TEST_CASE("similar_partner of the Salkowski profile is a slant helix") {
    // Torsion blows up at theta = 0.75; stay clear of it for the sampled classifier.
    const IntrinsicProfile alpha = salkowskiProfile(0.6);
    const ScalarField lambda = ScalarField::polynomial({1.0, 0.0, 1.0});
    const Pair p = partnerOf(alpha, lambda);
    for (double s : {0.1, 0.3, 0.5}) {
        CHECK(eval_profile(p.beta, s).kappa == doctest::Approx(1.0 + s * s).epsilon(1e-12));
        const double ra = eval_profile(alpha, p.tr.to_alpha(s)).tau;
        const auto kt = eval_profile(p.beta, s);
        CHECK(kt.tau / kt.kappa == doctest::Approx(ra).epsilon(1e-12));
    }
    const SampledCurve cb = integrate(p.beta);
    const ClassificationReport r = classify(cb);
    CHECK(r.has(CurveClass::SlantHelix));
    CHECK_FALSE(r.has(CurveClass::Salkowski));
    const Series sigma = geodesic_curvature_sigma(cb.curvatures(), cb.torsions(), cb.arclengths());
    CHECK(spread_stats(sigma.value, 1e-6).spread <= 1e-2);
}

TEST_CASE("similar_partner errors") {
    const IntrinsicProfile alpha = salkowskiProfile();
    CHECK_KIND(similar_partner(alpha, ScalarField::constant(2.0), {0.0, 1.0}),
               ErrorKind::DomainExhausted);
    CHECK_KIND(similar_partner(alpha, ScalarField::polynomial({0.5, -1.0}), {0.0, 0.6}),
               ErrorKind::NonPositiveLambda);
}

TEST_CASE("check_similar on circles of different radii") {
    IntrinsicProfile a(ScalarField::constant(1.0), ScalarField::constant(0.0), {0.0, 6.0});
    IntrinsicProfile b(ScalarField::constant(0.5), ScalarField::constant(0.0), {0.0, 12.0});
    const auto tr = make_transformation(a.kappa(), a.domain(), b.kappa(), b.domain());
    const SimilarityReport r = check_similar(
        gen_plane_curve(a.kappa(), a.domain(), kStep), gen_plane_curve(b.kappa(), b.domain(), kStep),
        tr, {1e-5, 1e-5, 1e-5});
    CHECK(r.verdicts.overall);
    CHECK(r.tangent_dev <= 1e-5);
    CHECK(r.normal_dev <= 1e-5);
    CHECK(r.binormal_dev <= 1e-5);
}

TEST_CASE("check_similar separates a circle from a circular helix") {
    IntrinsicProfile circle(ScalarField::constant(1.0), ScalarField::constant(0.0), {0.0, 3.0});
    IntrinsicProfile helix(ScalarField::constant(0.8), ScalarField::constant(0.6), {0.0, 3.0});
    const auto tr = make_transformation(circle.kappa(), circle.domain(), helix.kappa(),
                                        helix.domain());
    const SimilarityReport r = check_similar(integrate(circle), integrate(helix), tr);
    CHECK_FALSE(r.verdicts.ratio_theta);
    CHECK(r.ratio_dev == doctest::Approx(0.75).epsilon(1e-9));
    CHECK_FALSE(r.verdicts.overall);
    CHECK(predicatesAgree(r.verdicts));
}

TEST_CASE("check_similar accepts the Salkowski curve and its partner") {
    const IntrinsicProfile alpha = salkowskiProfile();
    const Pair p = partnerOf(alpha, ScalarField::polynomial({1.0, 0.0, 1.0}));
    const SimilarityReport r = check_similar(integrate(alpha), integrate(p.beta), p.tr);
    CHECK(r.verdicts.overall);
    CHECK(r.tangent_dev <= 1e-4);
    CHECK(r.normal_dev <= 1e-4);
    CHECK(r.binormal_dev <= 1e-4);
    CHECK(r.compared == integrate(p.beta).size());
}

TEST_CASE("similar pairs pass regardless of initial placement") {
    // Rigidly moved alpha still passes thanks to the frame alignment.
    const IntrinsicProfile alpha = salkowskiProfile();
    const Pair p = partnerOf(alpha, ScalarField::sinusoid(1.2, 0.4, 3.0));
    const Mat3 rot = Eigen::AngleAxisd(1.1, Vec3(0.3, -1.0, 0.2).normalized()).toRotationMatrix();
    const SampledCurve ca = integrate(alpha).transformed(rot, Vec3(3.0, 0.0, -1.0));
    const SimilarityReport r = check_similar(ca, integrate(p.beta), p.tr);
    CHECK(r.verdicts.overall);
    CHECK((r.alignment * rot - Mat3::Identity()).norm() <= 1e-9);
}

TEST_CASE("constructive completeness and predicate equivalence on random pairs") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto sp = oracle::randomProfile(rng);
        IntrinsicProfile alpha(ScalarField::sinusoid(sp.k0, sp.k1, sp.kw, sp.kp),
                               ScalarField::sinusoid(sp.t0, sp.t1, sp.tw, sp.tp), {0.0, 1.5});
        const ScalarField lambda = ScalarField::sinusoid(0.5 + u(rng), 0.2 * u(rng), 2.0, u(rng));
        const Pair p = partnerOf(alpha, lambda);
        const SimilarityReport r = check_similar(integrate(alpha), integrate(p.beta), p.tr);
        CHECK(r.verdicts.overall);
        CHECK(predicatesAgree(r.verdicts));
        // Theta equality implies lambda = kappa_alpha / kappa_beta along the pair.
        for (double s : {0.1, 0.4, 0.8}) {
            const double sa = p.tr.to_alpha(s);
            CHECK(p.tr.lambda()(s)
                  == doctest::Approx(eval_profile(p.beta, s).kappa / eval_profile(alpha, sa).kappa)
                         .epsilon(1e-10));
        }

        // Break the ratio: every predicate must fail together.
        IntrinsicProfile broken(p.beta.kappa(),
                                ScalarField::product(p.beta.tau(), ScalarField::constant(1.5)),
                                p.beta.domain());
        const SimilarityReport rb = check_similar(integrate(alpha), integrate(broken), p.tr);
        CHECK_FALSE(rb.verdicts.overall);
        CHECK(predicatesAgree(rb.verdicts));
    }
}

TEST_CASE("similarity preserves the curve families") {
    const ScalarField lambda = ScalarField::sinusoid(1.0, 0.3, 2.0);

    IntrinsicProfile line(ScalarField::constant(0.0), ScalarField::constant(0.0), {0.0, 2.0});
    CHECK(similar_partner(line, lambda, max_beta_domain(lambda, 0.0, 2.0)).isStraight());

    IntrinsicProfile plane(ScalarField::sinusoid(1.0, 0.4, 1.0), ScalarField::constant(0.0),
                           {0.0, 2.0});
    const Pair pp = partnerOf(plane, lambda);
    for (int i = 0; i <= 10; ++i) {
        CHECK(eval_profile(pp.beta, pp.beta.domain().hi * 0.1 * i).tau == 0.0);
    }
    CHECK(classify(integrate(pp.beta)).has(CurveClass::PlaneCurve));

    const ScalarField kh = ScalarField::sinusoid(1.0, 0.4, 1.0);
    IntrinsicProfile general(kh, ScalarField::product(kh, ScalarField::constant(0.75)),
                             {0.0, 3.0});
    const Pair pg = partnerOf(general, lambda);
    const ClassificationReport rg = classify(integrate(pg.beta));
    CHECK(rg.has(CurveClass::GeneralHelix));
    REQUIRE(rg.angle.has_value());
    CHECK(*rg.angle == doctest::Approx(std::atan2(1.0, 0.75)).epsilon(1e-4));

    const ScalarField ks = ScalarField::polynomial({1.0, 0.3});
    const double m = slant_parameter(0.8);
    IntrinsicProfile slant(ks, slant_torsion_from_curvature(ks, m, 1, {0.0, 0.6}), {0.0, 0.6});
    const Pair ps = partnerOf(slant, lambda);
    CHECK(classify(integrate(ps.beta)).has(CurveClass::SlantHelix));
    // Same m: tau/kappa = m theta / sqrt(1 - m^2 theta^2) in the partner's own theta.
    for (double s : {0.1, 0.3, 0.5}) {
        if (s > ps.beta.domain().hi) {
            continue;
        }
        const double theta = total_curvature(ps.beta, 0.0, s);
        const auto kt = eval_profile(ps.beta, s);
        const double f = kt.tau / kt.kappa;
        CHECK(f / (theta * std::sqrt(1.0 + f * f)) == doctest::Approx(m).epsilon(1e-8));
    }
}

TEST_CASE("check_similar errors") {
    const SampledCurve line = straight_line({0.0, 1.0}, Vec3::UnitX(), Vec3::Zero(), 1e-2);
    IntrinsicProfile circle(ScalarField::constant(1.0), ScalarField::constant(0.0), {0.0, 1.0});
    const auto tr = transformation_from_lambda(ScalarField::constant(1.0), {0.0, 1.0}, 0.0);
    CHECK_KIND(check_similar(line, integrate(circle), tr), ErrorKind::DegenerateCurve);
    const auto shortTr = transformation_from_lambda(ScalarField::constant(1.0), {0.0, 0.5}, 0.0);
    CHECK_KIND(check_similar(integrate(circle), integrate(circle), shortTr),
               ErrorKind::DomainExhausted);
}

TEST_CASE("report verdict is the conjunction of the predicates") {
    IntrinsicProfile circle(ScalarField::constant(1.0), ScalarField::constant(0.0), {0.0, 2.0});
    const auto tr = transformation_from_lambda(ScalarField::constant(1.0), {0.0, 2.0}, 0.0);
    const SimilarityReport r = check_similar(integrate(circle), integrate(circle), tr);
    CHECK(r.verdicts.overall
          == (r.verdicts.tangent && r.verdicts.normal && r.verdicts.binormal
              && r.verdicts.ratio_theta));
    CHECK(r.verdicts.overall);
}
