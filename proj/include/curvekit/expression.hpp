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

#ifndef CURVEKIT_EXPRESSION_HPP
#define CURVEKIT_EXPRESSION_HPP

#include <string>
#include <string_view>

#include <curvekit/scalar_field.hpp>

namespace curvekit {

/// Parses a scalar expression in the variable s:
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' ['-'] integer)?
///   primary := number | 's' | ('sin' | 'cos' | 'sqrt') '(' expr ')' | '(' expr ')'
///
/// Throws ParseError with the byte offset of the offending character.
ScalarField parse_expression(std::string_view text);

/// The source text of a field produced by parse_expression, or empty.
std::string expression_source(const ScalarField& field);

} // namespace curvekit

#endif // CURVEKIT_EXPRESSION_HPP
