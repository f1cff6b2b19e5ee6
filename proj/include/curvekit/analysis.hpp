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

#ifndef CURVEKIT_ANALYSIS_HPP
#define CURVEKIT_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <curvekit/frame.hpp>

namespace curvekit {

/// Curvature below which the discrete Frenet frame is considered undefined.
inline constexpr double kMinEstimatedCurvature = 1e-8;

struct FrameEstimateEntry {
    bool available = false;
    FrenetFrame frame;
    double kappa = 0.0;
    double tau = 0.0;
};

/// Discrete Frenet apparatus recovered from sampled positions. Samples
/// within two stencil widths of either end are never available.
struct FrenetEstimate {
    double step = 0.0;
    std::size_t stride = 1;
    std::vector<double> s;
    std::vector<FrameEstimateEntry> entries;

    std::size_t availableCount() const;
};

/// Central finite differences with spacing `stride * curve.step`:
///   kappa = |x' x x''| / |x'|^3,  tau = det(x', x'', x''') / |x' x x''|^2.
/// Samples where kappa < 1e-8 are flagged unavailable. Throws
/// CurvatureTooSmall when every interior sample is flagged, TooFewSamples
/// when the stencil does not fit.
FrenetEstimate estimate_frames(const SampledCurve& curve, std::size_t stride = 1);

struct Series {
    std::vector<double> s;
    std::vector<double> value;
};

struct VectorSeries {
    std::vector<double> s;
    std::vector<Vec3> value;
};

/// sigma = kappa^2 / (kappa^2 + tau^2)^(3/2) * (tau/kappa)' on the interior
/// nodes of a uniform grid. Throws CurvatureVanishes if kappa <= 0 anywhere.
Series geodesic_curvature_sigma(std::span<const double> kappa, std::span<const double> tau,
                                std::span<const double> s);

/// W = tau T + kappa B for every available sample.
VectorSeries darboux_series(const FrenetEstimate& estimate);

enum class CurveClass {
    StraightLine,
    PlaneCurve,
    CircularHelix,
    GeneralHelix,
    SlantHelix,
    Salkowski,
    AntiSalkowski,
    ConstantPrecession,
    Generic,
};

std::string_view to_string(CurveClass label);

/// Mean and relative spread (max - min) / max(|mean|, floor).
struct SpreadStats {
    double mean = 0.0;
    double spread = 0.0;
};

SpreadStats spread_stats(std::span<const double> values, double floor);

/// kappa = R sin(omega s + phase), tau = R cos(omega s + phase). For
/// omega > 0 this is the precession law with mu = omega, m = mu / R; omega < 0
/// is the sine/cosine-swapped branch.
struct PrecessionFit {
    double omega = 0.0;
    double phase = 0.0;
    double radius = 0.0;
    double mu = 0.0;
    double m = 0.0;
    /// RMS of the (kappa, tau) misfit relative to radius.
    double residual = 0.0;
};

/// Least squares: linear fit of the polar angle atan2(kappa, tau), then
/// Gauss-Newton on (omega, phase, radius).
PrecessionFit fit_precession(std::span<const double> s, std::span<const double> kappa,
                             std::span<const double> tau);

struct ClassifyTolerances {
    double eps_rel = 1e-2;
    double eps_abs = 1e-6;
    double eps_fit = 1e-3;
    /// Target finite-difference spacing; samples finer than this are strided.
    double working_step = 1e-2;
    /// Minimum swept angle |omega| L (radians) for a precession label.
    double min_precession_sweep = 0.1;
};

struct ClassificationReport {
    std::vector<CurveClass> labels;
    SpreadStats kappa_stats;
    SpreadStats tau_stats;
    SpreadStats ratio_stats;
    SpreadStats sigma_stats;
    /// General helix: cos(phi) T + sin(phi) B. Slant helix: the fixed
    /// direction making a constant angle with N.
    std::optional<Vec3> axis;
    double axis_residual = 0.0;
    std::optional<double> angle;
    std::optional<PrecessionFit> precession;
    std::size_t stride = 1;

    bool has(CurveClass label) const;
};

/// Labels a sampled curve from its estimated curvature and torsion.
ClassificationReport classify(const SampledCurve& curve, const ClassifyTolerances& tol = {});

/// General quadric x^T A x + b^T x + c = 0 fitted by total least squares.
struct QuadricFit {
    /// Eigenvalues of A scaled so that the centred form reads
    /// sum lambda_i y_i^2 = 1; sorted descending.
    Vec3 eigenvalues = Vec3::Zero();
    /// Columns are the principal axes, matching `eigenvalues`.
    Mat3 axes = Mat3::Identity();
    Vec3 center = Vec3::Zero();
    /// e.g. "++-" for a one-sheeted hyperboloid.
    std::string signature;
    /// Smallest over second-smallest singular value; small means the quadric
    /// is well determined.
    double null_ratio = 0.0;
    bool central = false;
};

QuadricFit fit_quadric(std::span<const Vec3> points);

} // namespace curvekit

#endif // CURVEKIT_ANALYSIS_HPP
