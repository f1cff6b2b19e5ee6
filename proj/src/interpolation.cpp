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

#include <curvekit/interpolation.hpp>

#include <algorithm>
#include <cmath>

#include <curvekit/error.hpp>

namespace curvekit {

namespace {

void checkKnots(const std::vector<double>& knots, std::size_t valueCount,
                std::size_t slopeCount) {
    if (knots.size() < 2) {
        throw CurveError(ErrorKind::InvalidArgument, "interpolant needs at least 2 knots");
    }
    if (valueCount != knots.size() || slopeCount != knots.size()) {
        throw CurveError(ErrorKind::InvalidArgument, "knot/value/slope sizes differ");
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (!(knots[i + 1] > knots[i])) {
            throw CurveError(ErrorKind::InvalidArgument,
                             "interpolation knots must be strictly increasing", knots[i + 1]);
        }
    }
}

std::vector<double> secants(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> d(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    }
    return d;
}

double sign(double v) {
    return (v > 0.0) - (v < 0.0);
}

// One-sided three-point end slope, shape-limited.
double endSlope(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(m) != sign(d0)) {
        m = 0.0;
    }
    else if (sign(d0) != sign(d1) && std::abs(m) > 3.0 * std::abs(d0)) {
        m = 3.0 * d0;
    }
    return m;
}

} // namespace

CubicHermite::CubicHermite(std::vector<double> knots, std::vector<double> values,
                           std::vector<double> slopes)
    : knots_(std::move(knots))
    , values_(std::move(values))
    , slopes_(std::move(slopes)) {

    checkKnots(knots_, values_.size(), slopes_.size());
    const std::size_t n = knots_.size();
    const double h = (knots_.back() - knots_.front()) / static_cast<double>(n - 1);
    uniform_ = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs((knots_[i + 1] - knots_[i]) - h) > 1e-9 * h) {
            uniform_ = false;
            break;
        }
    }
    uniformStep_ = h;
}

CubicHermite CubicHermite::monotone(std::vector<double> knots, std::vector<double> values) {
    checkKnots(knots, values.size(), knots.size());
    const std::size_t n = knots.size();
    const std::vector<double> d = secants(knots, values);
    std::vector<double> m(n, 0.0);
    if (n == 2) {
        m[0] = m[1] = d[0];
    }
    else {
        for (std::size_t k = 1; k + 1 < n; ++k) {
            if (d[k - 1] * d[k] <= 0.0) {
                m[k] = 0.0;
                continue;
            }
            const double h0 = knots[k] - knots[k - 1];
            const double h1 = knots[k + 1] - knots[k];
            const double w1 = 2.0 * h1 + h0;
            const double w2 = h1 + 2.0 * h0;
            m[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
        }
        m[0] = endSlope(knots[1] - knots[0], knots[2] - knots[1], d[0], d[1]);
        m[n - 1] = endSlope(knots[n - 1] - knots[n - 2], knots[n - 2] - knots[n - 3],
                            d[n - 2], d[n - 3]);
    }
    return CubicHermite(std::move(knots), std::move(values), std::move(m));
}

CubicHermite CubicHermite::monotoneWithSlopes(std::vector<double> knots,
                                              std::vector<double> values,
                                              std::vector<double> slopes) {
    checkKnots(knots, values.size(), slopes.size());
    const std::vector<double> d = secants(knots, values);
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] == 0.0) {
            slopes[k] = 0.0;
            slopes[k + 1] = 0.0;
            continue;
        }
        if (sign(slopes[k]) != sign(d[k])) {
            slopes[k] = 0.0;
        }
        if (sign(slopes[k + 1]) != sign(d[k])) {
            slopes[k + 1] = 0.0;
        }
        const double a = slopes[k] / d[k];
        const double b = slopes[k + 1] / d[k];
        const double r2 = a * a + b * b;
        if (r2 > 9.0) {
            const double t = 3.0 / std::sqrt(r2);
            slopes[k] = t * a * d[k];
            slopes[k + 1] = t * b * d[k];
        }
    }
    return CubicHermite(std::move(knots), std::move(values), std::move(slopes));
}

double CubicHermite::clampChecked(double x) const {
    const double lo = knots_.front();
    const double hi = knots_.back();
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (!(x >= lo - slack && x <= hi + slack)) {
        throw CurveError(ErrorKind::OutOfDomain, "interpolation argument outside knot range", x);
    }
    return std::clamp(x, lo, hi);
}

std::size_t CubicHermite::segment(double x) const {
    const std::size_t last = knots_.size() - 2;
    std::size_t i = 0;
    if (uniform_) {
        const double t = (x - knots_.front()) / uniformStep_;
        i = t <= 0.0 ? 0 : std::min(static_cast<std::size_t>(t), last);
        // Round-off in the division can land one segment off.
        if (i > 0 && x < knots_[i]) {
            --i;
        }
        else if (i < last && x > knots_[i + 1]) {
            ++i;
        }
    }
    else {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
        const auto pos = static_cast<std::size_t>(it - knots_.begin());
        i = pos == 0 ? 0 : std::min(pos - 1, last);
    }
    return i;
}

double CubicHermite::operator()(double x) const {
    x = clampChecked(x);
    const std::size_t i = segment(x);
    const double h = knots_[i + 1] - knots_[i];
    const double t = (x - knots_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1]
           + h11 * h * slopes_[i + 1];
}

double CubicHermite::derivative(double x) const {
    x = clampChecked(x);
    const std::size_t i = segment(x);
    const double h = knots_[i + 1] - knots_[i];
    const double t = (x - knots_[i]) / h;
    const double t2 = t * t;
    const double d00 = (6.0 * t2 - 6.0 * t) / h;
    const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double d01 = (-6.0 * t2 + 6.0 * t) / h;
    const double d11 = 3.0 * t2 - 2.0 * t;
    return d00 * values_[i] + d10 * slopes_[i] + d01 * values_[i + 1] + d11 * slopes_[i + 1];
}

} // namespace curvekit
