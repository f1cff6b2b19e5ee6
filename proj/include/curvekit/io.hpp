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

#ifndef CURVEKIT_IO_HPP
#define CURVEKIT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <curvekit/analysis.hpp>
#include <curvekit/error.hpp>
#include <curvekit/frame.hpp>
#include <curvekit/profile.hpp>
#include <curvekit/similarity.hpp>

namespace curvekit {

/// Profile JSON:
///
///   {"kappa": FIELD, "tau": FIELD, "domain": [s_min, s_max]}
///   {"precession": {"mu": .., "m": .., "phase_swapped": false}, "domain": [..]}
///
/// FIELD is an object with a "kind" key:
///   constant      {"value"}
///   polynomial    {"coefficients": [c0, c1, ...]}        ascending powers
///   sinusoid      {"offset", "amplitude", "frequency", "phase"}
///   table         {"knots": [...], "values": [...]}
///   slant-torsion {"m" | "n", "sign"}                     tau only
///   quotient      {"numerator": FIELD, "denominator": FIELD}
///   expression    {"expr": "1 + s^2"}
///
/// Throws ParseError (malformed JSON, with line and byte offset), SchemaError
/// (naming the offending field path) or ProfileInvariantViolation.
IntrinsicProfile parse_profile_json(std::string_view text);
IntrinsicProfile parse_profile_file(const std::string& path);

/// Same, but only the scalar field at the JSON top level.
ScalarField parse_field_json(std::string_view text);

inline constexpr std::string_view kCurveCsvHeader =
    "s,x,y,z,tx,ty,tz,nx,ny,nz,bx,by,bz,kappa,tau";

/// 15 columns, 17 significant digits.
void write_curve_csv(const SampledCurve& curve, std::ostream& out);
/// Provenance is External; the step is recovered from the arclength column
/// and must be uniform.
SampledCurve read_curve_csv(std::istream& in);

std::string report_json(const ClassificationReport& report);
std::string report_json(const SimilarityReport& report);
std::string error_json(const CurveError& error);

enum class ProjectionPlane { XY, XZ, YZ };
ProjectionPlane parse_plane(std::string_view name);

/// Polyline of the orthogonal projection, scaled to fit the canvas.
void write_svg(const SampledCurve& curve, ProjectionPlane plane, std::ostream& out,
               int width = 640, int height = 640);

std::string read_text_file(const std::string& path);

} // namespace curvekit

#endif // CURVEKIT_IO_HPP
