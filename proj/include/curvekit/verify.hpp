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

#ifndef CURVEKIT_VERIFY_HPP
#define CURVEKIT_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace curvekit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Names accepted by run_verification, excluding "all".
const std::vector<std::string>& verification_names();

/// Runs one named self-check, or every check for "all". Throws
/// InvalidArgument for an unknown name.
std::vector<CheckResult> run_verification(std::string_view name);

} // namespace curvekit

#endif // CURVEKIT_VERIFY_HPP
