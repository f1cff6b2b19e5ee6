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

#include <curvekit/scalar_field.hpp>

#include <cmath>
#include <string>
#include <utility>

#include <curvekit/error.hpp>

namespace curvekit {

std::string_view to_string(FieldKind kind) {
    switch (kind) {
    case FieldKind::Constant: return "constant";
    case FieldKind::Polynomial: return "polynomial";
    case FieldKind::Sinusoid: return "sinusoid";
    case FieldKind::Table: return "table";
    case FieldKind::SlantTorsion: return "slant-torsion";
    case FieldKind::Quotient: return "quotient";
    case FieldKind::Product: return "product";
    case FieldKind::Composition: return "composition";
    case FieldKind::Expression: return "expression";
    }
    return "unknown";
}

namespace {

class ConstantNode final : public FieldNode {
public:
    explicit ConstantNode(double value)
        : value_(value) {
    }
    double eval(double) const override { return value_; }
    FieldKind kind() const override { return FieldKind::Constant; }
    double value() const { return value_; }

private:
    double value_;
};

class PolynomialNode final : public FieldNode {
public:
    explicit PolynomialNode(std::vector<double> coefficients)
        : c_(std::move(coefficients)) {
    }
    double eval(double s) const override {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * s + *it;
        }
        return acc;
    }
    FieldKind kind() const override { return FieldKind::Polynomial; }

private:
    std::vector<double> c_;
};

class SinusoidNode final : public FieldNode {
public:
    SinusoidNode(double offset, double amplitude, double frequency, double phase)
        : offset_(offset)
        , amplitude_(amplitude)
        , frequency_(frequency)
        , phase_(phase) {
    }
    double eval(double s) const override {
        return offset_ + amplitude_ * std::sin(frequency_ * s + phase_);
    }
    FieldKind kind() const override { return FieldKind::Sinusoid; }

private:
    double offset_;
    double amplitude_;
    double frequency_;
    double phase_;
};

class TableNode final : public FieldNode {
public:
    explicit TableNode(CubicHermite curve)
        : curve_(std::move(curve)) {
    }
    double eval(double s) const override { return curve_(s); }
    FieldKind kind() const override { return FieldKind::Table; }

private:
    CubicHermite curve_;
};

class QuotientNode final : public FieldNode {
public:
    QuotientNode(ScalarField num, ScalarField den)
        : num_(std::move(num))
        , den_(std::move(den)) {
    }
    double eval(double s) const override { return num_(s) / den_(s); }
    FieldKind kind() const override { return FieldKind::Quotient; }

private:
    ScalarField num_;
    ScalarField den_;
};

class ProductNode final : public FieldNode {
public:
    ProductNode(ScalarField a, ScalarField b)
        : a_(std::move(a))
        , b_(std::move(b)) {
    }
    double eval(double s) const override { return a_(s) * b_(s); }
    FieldKind kind() const override { return FieldKind::Product; }

private:
    ScalarField a_;
    ScalarField b_;
};

class CompositionNode final : public FieldNode {
public:
    CompositionNode(ScalarField outer, ScalarField inner)
        : outer_(std::move(outer))
        , inner_(std::move(inner)) {
    }
    double eval(double s) const override { return outer_(inner_(s)); }
    FieldKind kind() const override { return FieldKind::Composition; }

private:
    ScalarField outer_;
    ScalarField inner_;
};

void requireFinite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw CurveError(ErrorKind::InvalidArgument, std::string(what) + " must be finite");
    }
}

} // namespace

ScalarField::ScalarField()
    : node_(std::make_shared<ConstantNode>(0.0)) {
}

ScalarField::ScalarField(std::shared_ptr<const FieldNode> node)
    : node_(std::move(node)) {
    if (!node_) {
        throw CurveError(ErrorKind::InvalidArgument, "null field node");
    }
}

ScalarField ScalarField::constant(double value) {
    requireFinite(value, "constant value");
    return ScalarField(std::make_shared<ConstantNode>(value));
}

ScalarField ScalarField::polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) {
        throw CurveError(ErrorKind::InvalidArgument, "polynomial needs a coefficient");
    }
    for (double c : coefficients) {
        requireFinite(c, "polynomial coefficient");
    }
    return ScalarField(std::make_shared<PolynomialNode>(std::move(coefficients)));
}

ScalarField ScalarField::sinusoid(double offset, double amplitude, double frequency,
                                  double phase) {
    requireFinite(offset, "sinusoid offset");
    requireFinite(amplitude, "sinusoid amplitude");
    requireFinite(frequency, "sinusoid frequency");
    requireFinite(phase, "sinusoid phase");
    return ScalarField(std::make_shared<SinusoidNode>(offset, amplitude, frequency, phase));
}

ScalarField ScalarField::table(std::vector<double> knots, std::vector<double> values) {
    for (double v : values) {
        requireFinite(v, "table value");
    }
    return interpolant(CubicHermite::monotone(std::move(knots), std::move(values)));
}

ScalarField ScalarField::interpolant(CubicHermite curve) {
    return ScalarField(std::make_shared<TableNode>(std::move(curve)));
}

ScalarField ScalarField::quotient(ScalarField numerator, ScalarField denominator) {
    return ScalarField(
        std::make_shared<QuotientNode>(std::move(numerator), std::move(denominator)));
}

ScalarField ScalarField::product(ScalarField a, ScalarField b) {
    return ScalarField(std::make_shared<ProductNode>(std::move(a), std::move(b)));
}

ScalarField ScalarField::composition(ScalarField outer, ScalarField inner) {
    return ScalarField(std::make_shared<CompositionNode>(std::move(outer), std::move(inner)));
}

std::optional<double> ScalarField::constantValue() const {
    if (const auto* c = as<ConstantNode>()) {
        return c->value();
    }
    return std::nullopt;
}

} // namespace curvekit
