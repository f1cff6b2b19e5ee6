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

#ifndef CURVEKIT_CLI_HPP
#define CURVEKIT_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include <curvekit/types.hpp>

namespace curvekit {

/// One CLI invocation. Unused fields are ignored by commands that do not
/// need them.
struct RunConfig {
    /// generate, integrate, classify, similar or verify.
    std::string command;

    /// generate: plane, general-helix, slant-helix or salkowski.
    std::string kind;

    std::string profile;
    std::string alpha;
    /// similar: second profile; lambda is then derived from the curvatures.
    std::string beta;
    /// classify: curve CSV instead of a profile.
    std::string input;
    /// similar: lambda expression in s.
    std::string lambda;
    /// verify: check name or "all".
    std::string name = "all";

    std::optional<ArcInterval> domain;
    double step = 1e-3;
    /// generate: helix angle parameter.
    std::optional<double> n;
    /// generate salkowski: parameter range and sample count.
    ArcInterval t_range{0.0, 1.2};
    std::size_t samples = 1001;

    /// "-" writes to the output stream given to run_command.
    std::string output = "-";
    /// csv or svg for curves, json for reports. Empty picks the default.
    std::string format;
    /// svg: xy, xz or yz.
    std::string plane = "xy";

    /// Throws InvalidArgument.
    void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitPredicateFalse = 1;
inline constexpr int kExitError = 2;

/// Executes the command. Errors are reported as a JSON object on `err` and
/// map to kExitError; a false verdict (similar, verify) maps to
/// kExitPredicateFalse.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace curvekit

#endif // CURVEKIT_CLI_HPP
