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

#ifndef CURVEKIT_SCALAR_FIELD_HPP
#define CURVEKIT_SCALAR_FIELD_HPP

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include <curvekit/interpolation.hpp>

namespace curvekit {

enum class FieldKind {
    Constant,
    Polynomial,
    Sinusoid,
    Table,
    SlantTorsion,
    Quotient,
    Product,
    Composition,
    Expression,
};

std::string_view to_string(FieldKind kind);

/// Node interface behind ScalarField. Implementations must be immutable and
/// evaluate deterministically.
class FieldNode {
public:
    virtual ~FieldNode() = default;
    virtual double eval(double s) const = 0;
    virtual FieldKind kind() const = 0;
};

/// A real function of arclength with value semantics. Copies share the same
/// immutable node, so fields are cheap to pass around and safe to evaluate
/// from several threads.
class ScalarField {
public:
    /// The zero field.
    ScalarField();
    explicit ScalarField(std::shared_ptr<const FieldNode> node);

    static ScalarField constant(double value);

    /// c0 + c1 s + c2 s^2 + ...
    static ScalarField polynomial(std::vector<double> coefficients);

    /// offset + amplitude * sin(frequency * s + phase)
    static ScalarField sinusoid(double offset, double amplitude, double frequency,
                                double phase = 0.0);

    /// Shape-preserving monotone cubic through (knots, values).
    static ScalarField table(std::vector<double> knots, std::vector<double> values);

    /// Wraps an existing Hermite interpolant; reports kind Table.
    static ScalarField interpolant(CubicHermite curve);

    static ScalarField quotient(ScalarField numerator, ScalarField denominator);
    static ScalarField product(ScalarField a, ScalarField b);

    /// outer(inner(s)).
    static ScalarField composition(ScalarField outer, ScalarField inner);

    double operator()(double s) const { return node_->eval(s); }

    FieldKind kind() const { return node_->kind(); }

    /// Value of a Constant field, nullopt for every other kind.
    std::optional<double> constantValue() const;

    template <class Node>
    const Node* as() const {
        return dynamic_cast<const Node*>(node_.get());
    }

private:
    std::shared_ptr<const FieldNode> node_;
};

} // namespace curvekit

#endif // CURVEKIT_SCALAR_FIELD_HPP
