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

#include <curvekit/error.hpp>

namespace curvekit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NegativeCurvature: return "NegativeCurvature";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::DegenerateProfile: return "DegenerateProfile";
    case ErrorKind::TooDegenerate: return "TooDegenerate";
    case ErrorKind::TorsionVanishes: return "TorsionVanishes";
    case ErrorKind::BadAngle: return "BadAngle";
    case ErrorKind::BranchViolation: return "BranchViolation";
    case ErrorKind::CurvatureTooSmall: return "CurvatureTooSmall";
    case ErrorKind::CurvatureVanishes: return "CurvatureVanishes";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorKind::DomainExhausted: return "DomainExhausted";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ProfileInvariantViolation: return "ProfileInvariantViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

CurveError::CurveError(ErrorKind kind, const std::string& message,
                       std::optional<double> where)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , kind_(kind)
    , where_(where) {
}

} // namespace curvekit
