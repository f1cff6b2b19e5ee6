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

#ifndef CURVEKIT_ERROR_HPP
#define CURVEKIT_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvekit {

enum class ErrorKind {
    OutOfDomain,
    NegativeCurvature,
    DomainViolation,
    InvalidFrame,
    DegenerateProfile,
    TooDegenerate,
    TorsionVanishes,
    BadAngle,
    BranchViolation,
    CurvatureTooSmall,
    CurvatureVanishes,
    TooFewSamples,
    NonPositiveCurvature,
    NonPositiveLambda,
    DomainExhausted,
    DegenerateCurve,
    ParseError,
    SchemaError,
    ProfileInvariantViolation,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `where()` carries the arclength (or
/// other scalar location) at which the failure was detected, when known.
class CurveError : public std::runtime_error {
public:
    CurveError(ErrorKind kind, const std::string& message,
               std::optional<double> where = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<double> where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::optional<double> where_;
};

} // namespace curvekit

#endif // CURVEKIT_ERROR_HPP
