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

#include <curvekit/frame.hpp>

#include <cmath>

#include <curvekit/error.hpp>

namespace curvekit {

namespace {

constexpr double kDegeneracyLimit = 0.1;

} // namespace

Mat3 FrenetFrame::matrix() const {
    Mat3 m;
    m.col(0) = T;
    m.col(1) = N;
    m.col(2) = B;
    return m;
}

FrenetFrame FrenetFrame::rotated(const Mat3& rotation) const {
    return {rotation * T, rotation * N, rotation * B};
}

double gram_deviation(const Vec3& T, const Vec3& N, const Vec3& B) {
    Mat3 m;
    m.col(0) = T;
    m.col(1) = N;
    m.col(2) = B;
    return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

double frame_deviation(const FrenetFrame& frame) {
    const double det = frame.matrix().determinant();
    return std::max(gram_deviation(frame.T, frame.N, frame.B), std::abs(det - 1.0));
}

void validate_frame(const FrenetFrame& frame, double tolerance) {
    const double dev = frame_deviation(frame);
    if (!(dev <= tolerance)) {
        throw CurveError(ErrorKind::InvalidFrame,
                         "frame is not right-handed orthonormal (deviation "
                             + std::to_string(dev) + ")");
    }
}

FrenetFrame reorthonormalize(const Vec3& T, const Vec3& N, const Vec3& B) {
    const double dev = gram_deviation(T, N, B);
    if (!(dev <= kDegeneracyLimit)) {
        throw CurveError(ErrorKind::TooDegenerate,
                         "frame vectors too far from orthonormal to repair (Gram deviation "
                             + std::to_string(dev) + ")");
    }
    FrenetFrame out;
    out.T = T.normalized();
    out.N = (N - N.dot(out.T) * out.T).normalized();
    out.B = out.T.cross(out.N);
    return out;
}

FrenetFrame reorthonormalize(const FrenetFrame& frame) {
    return reorthonormalize(frame.T, frame.N, frame.B);
}

std::string_view to_string(Provenance provenance) {
    switch (provenance) {
    case Provenance::Integrated: return "integrated";
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::External: return "external";
    }
    return "external";
}

std::vector<double> SampledCurve::arclengths() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& sample : samples) {
        out.push_back(sample.s);
    }
    return out;
}

std::vector<Vec3> SampledCurve::positions() const {
    std::vector<Vec3> out;
    out.reserve(samples.size());
    for (const auto& sample : samples) {
        out.push_back(sample.position);
    }
    return out;
}

std::vector<double> SampledCurve::curvatures() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& sample : samples) {
        out.push_back(sample.kappa);
    }
    return out;
}

std::vector<double> SampledCurve::torsions() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& sample : samples) {
        out.push_back(sample.tau);
    }
    return out;
}

SampledCurve SampledCurve::transformed(const Mat3& rotation, const Vec3& translation) const {
    SampledCurve out = *this;
    for (auto& sample : out.samples) {
        sample.position = rotation * sample.position + translation;
        sample.frame = sample.frame.rotated(rotation);
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t intervals) {
    std::vector<double> grid(intervals + 1);
    const double step = intervals == 0 ? 0.0 : (hi - lo) / static_cast<double>(intervals);
    for (std::size_t i = 0; i < intervals; ++i) {
        grid[i] = lo + static_cast<double>(i) * step;
    }
    grid[intervals] = hi;
    return grid;
}

std::size_t interval_count(double length, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw CurveError(ErrorKind::InvalidArgument, "step must be positive and finite");
    }
    if (length <= 0.0) {
        return 0;
    }
    const double ratio = length / step;
    return static_cast<std::size_t>(std::max(1.0, std::ceil(ratio - 1e-9 * ratio)));
}

} // namespace curvekit
