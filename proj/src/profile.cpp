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

#include <curvekit/profile.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <curvekit/error.hpp>
#include <curvekit/quadrature.hpp>

namespace curvekit {

namespace {

constexpr int kValidationSamples = 4096;

void checkDomain(const ArcInterval& domain) {
    if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) || !(domain.lo < domain.hi)) {
        throw CurveError(ErrorKind::ProfileInvariantViolation,
                         "domain must be a finite interval with s_min < s_max");
    }
}

int quadratureIntervals(double length) {
    const int n = static_cast<int>(std::ceil(std::abs(length) / 2e-3));
    return std::max(16, n + n % 2);
}

// theta accumulated on a fine grid, evaluated anywhere in the domain by one
// extra Simpson panel from the nearest knot below.
class SlantTorsionNode final : public FieldNode {
public:
    SlantTorsionNode(ScalarField kappa, double m, int sign, ArcInterval domain)
        : kappa_(std::move(kappa))
        , m_(m)
        , sign_(sign)
        , domain_(domain) {
        const double length = domain_.length();
        const auto count = static_cast<std::size_t>(
            std::max(256.0, std::ceil(length / 5e-4)));
        step_ = length / static_cast<double>(count);
        theta_ = cumulativeSimpson(kappa_, domain_.lo, step_, count);
        for (std::size_t i = 0; i < theta_.size(); ++i) {
            if (std::abs(m_ * theta_[i]) >= 1.0) {
                throw CurveError(ErrorKind::DomainViolation,
                                 "|m theta| reaches 1 inside the domain",
                                 domain_.lo + static_cast<double>(i) * step_);
            }
        }
    }

    double theta(double s) const {
        if (!domain_.contains(s)) {
            throw CurveError(ErrorKind::OutOfDomain, "slant torsion evaluated outside its domain",
                             s);
        }
        s = domain_.clamp(s);
        const double t = (s - domain_.lo) / step_;
        auto i = static_cast<std::size_t>(std::max(0.0, std::floor(t)));
        i = std::min(i, theta_.size() - 1);
        const double x0 = domain_.lo + static_cast<double>(i) * step_;
        if (s == x0) {
            return theta_[i];
        }
        return theta_[i] + (s - x0) / 6.0 * (kappa_(x0) + 4.0 * kappa_(0.5 * (x0 + s)) + kappa_(s));
    }

    double eval(double s) const override {
        const double mt = m_ * theta(s);
        return sign_ * kappa_(s) * mt / std::sqrt(1.0 - mt * mt);
    }

    FieldKind kind() const override { return FieldKind::SlantTorsion; }

private:
    ScalarField kappa_;
    double m_;
    int sign_;
    ArcInterval domain_;
    double step_ = 0.0;
    std::vector<double> theta_;
};

} // namespace

IntrinsicProfile::IntrinsicProfile(ScalarField kappa, ScalarField tau, ArcInterval domain)
    : kappa_(std::move(kappa))
    , tau_(std::move(tau))
    , domain_(domain) {

    checkDomain(domain_);
    bool anyNonZero = false;
    bool interiorZero = false;
    double interiorZeroAt = 0.0;
    for (int i = 0; i <= kValidationSamples; ++i) {
        const double s = i == kValidationSamples
                             ? domain_.hi
                             : domain_.lo + domain_.length() * i / kValidationSamples;
        const double k = kappa_(s);
        if (!std::isfinite(k)) {
            throw CurveError(ErrorKind::ProfileInvariantViolation, "curvature is not finite", s);
        }
        if (k < -kCurvatureClampTolerance) {
            throw CurveError(ErrorKind::ProfileInvariantViolation, "curvature is negative", s);
        }
        if (k > kCurvatureClampTolerance) {
            anyNonZero = true;
        }
        else if (i > 0 && i < kValidationSamples && !interiorZero) {
            interiorZero = true;
            interiorZeroAt = s;
        }
    }
    straight_ = !anyNonZero;
    if (!straight_ && interiorZero) {
        throw CurveError(ErrorKind::ProfileInvariantViolation,
                         "curvature vanishes inside the domain of a frame-bearing profile",
                         interiorZeroAt);
    }
    if (!straight_) {
        for (int i = 0; i <= kValidationSamples; ++i) {
            const double s = i == kValidationSamples
                                 ? domain_.hi
                                 : domain_.lo + domain_.length() * i / kValidationSamples;
            if (!std::isfinite(tau_(s))) {
                throw CurveError(ErrorKind::ProfileInvariantViolation, "torsion is not finite", s);
            }
        }
    }
}

CurvatureTorsion eval_profile(const IntrinsicProfile& profile, double s) {
    const ArcInterval& d = profile.domain();
    if (!d.contains(s)) {
        throw CurveError(ErrorKind::OutOfDomain,
                         "s = " + std::to_string(s) + " outside profile domain", s);
    }
    if (profile.isStraight()) {
        return {0.0, 0.0};
    }
    s = d.clamp(s);
    double k = profile.kappa()(s);
    if (k < -kCurvatureClampTolerance) {
        throw CurveError(ErrorKind::NegativeCurvature, "curvature evaluated negative", s);
    }
    k = std::max(k, 0.0);
    return {k, profile.tau()(s)};
}

double total_curvature(const ScalarField& kappa, double s0, double s1) {
    if (s1 == s0) {
        return 0.0;
    }
    return simpsonRichardson(kappa, s0, s1, quadratureIntervals(s1 - s0));
}

double total_curvature(const IntrinsicProfile& profile, double s0, double s1) {
    const ArcInterval& d = profile.domain();
    if (!d.contains(s0) || !d.contains(s1)) {
        throw CurveError(ErrorKind::OutOfDomain, "total curvature interval leaves the domain",
                         d.contains(s0) ? s1 : s0);
    }
    if (profile.isStraight()) {
        return 0.0;
    }
    return total_curvature(profile.kappa(), d.clamp(s0), d.clamp(s1));
}

double slant_parameter(double n) {
    if (!(n > 0.0 && n < 1.0)) {
        throw CurveError(ErrorKind::BadAngle, "slant helix angle cosine must lie in (0, 1)", n);
    }
    return n / std::sqrt(1.0 - n * n);
}

ScalarField slant_torsion_from_curvature(const ScalarField& kappa, double m, int sign,
                                         ArcInterval domain) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw CurveError(ErrorKind::InvalidArgument, "slant parameter m must be positive");
    }
    if (sign != 1 && sign != -1) {
        throw CurveError(ErrorKind::InvalidArgument, "slant torsion sign must be +1 or -1");
    }
    checkDomain(domain);
    return ScalarField(std::make_shared<SlantTorsionNode>(kappa, m, sign, domain));
}

IntrinsicProfile precession_profile(const PrecessionParams& params, ArcInterval domain) {
    if (!(params.mu > 0.0) || !(params.m > 0.0)) {
        throw CurveError(ErrorKind::InvalidArgument, "precession needs mu > 0 and m > 0");
    }
    checkDomain(domain);
    constexpr double pi = std::numbers::pi;
    const double amplitude = params.mu / params.m;
    const double sinPhase = 0.0;
    const double cosPhase = pi / 2.0;
    const double kappaPhase = params.phase_swapped ? cosPhase : sinPhase;
    const double tauPhase = params.phase_swapped ? sinPhase : cosPhase;

    // kappa vanishes where mu s + phase is a multiple of pi; a zero strictly
    // inside the domain is a sign change.
    const double a = params.mu * domain.lo + kappaPhase;
    const double b = params.mu * domain.hi + kappaPhase;
    const double slack = 1e-12 * std::max(1.0, std::abs(b));
    const double firstZero = std::floor((a + slack) / pi) + 1.0;
    if (firstZero * pi < b - slack) {
        throw CurveError(ErrorKind::DomainViolation,
                         "precession curvature changes sign inside the domain",
                         (firstZero * pi - kappaPhase) / params.mu);
    }
    if (std::sin(0.5 * (a + b)) < 0.0) {
        throw CurveError(ErrorKind::DomainViolation, "precession curvature is negative on the domain",
                         0.5 * (domain.lo + domain.hi));
    }
    return IntrinsicProfile(ScalarField::sinusoid(0.0, amplitude, params.mu, kappaPhase),
                            ScalarField::sinusoid(0.0, amplitude, params.mu, tauPhase), domain);
}

} // namespace curvekit
