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

#include <curvekit/expression.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <vector>

#include <curvekit/error.hpp>

namespace curvekit {

namespace {

enum class Op { Number, Variable, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Sqrt };

struct Ast {
    Op op = Op::Number;
    double value = 0.0;
    int exponent = 0;
    std::unique_ptr<Ast> lhs;
    std::unique_ptr<Ast> rhs;
};

using AstPtr = std::unique_ptr<Ast>;

double evalAst(const Ast& a, double s) {
    switch (a.op) {
    case Op::Number: return a.value;
    case Op::Variable: return s;
    case Op::Add: return evalAst(*a.lhs, s) + evalAst(*a.rhs, s);
    case Op::Sub: return evalAst(*a.lhs, s) - evalAst(*a.rhs, s);
    case Op::Mul: return evalAst(*a.lhs, s) * evalAst(*a.rhs, s);
    case Op::Div: return evalAst(*a.lhs, s) / evalAst(*a.rhs, s);
    case Op::Neg: return -evalAst(*a.lhs, s);
    case Op::Pow: {
        const double base = evalAst(*a.lhs, s);
        double r = 1.0;
        for (int i = 0; i < std::abs(a.exponent); ++i) {
            r *= base;
        }
        return a.exponent < 0 ? 1.0 / r : r;
    }
    case Op::Sin: return std::sin(evalAst(*a.lhs, s));
    case Op::Cos: return std::cos(evalAst(*a.lhs, s));
    case Op::Sqrt: return std::sqrt(evalAst(*a.lhs, s));
    }
    return 0.0;
}

class Parser {
public:
    explicit Parser(std::string_view text)
        : text_(text) {
    }

    AstPtr parse() {
        AstPtr e = expr();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw CurveError(ErrorKind::ParseError,
                         "expression: " + what + " at offset " + std::to_string(pos_),
                         static_cast<double>(pos_));
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    static AstPtr node(Op op, AstPtr lhs, AstPtr rhs = nullptr) {
        auto a = std::make_unique<Ast>();
        a->op = op;
        a->lhs = std::move(lhs);
        a->rhs = std::move(rhs);
        return a;
    }

    AstPtr expr() {
        AstPtr e = term();
        for (;;) {
            if (accept('+')) {
                e = node(Op::Add, std::move(e), term());
            }
            else if (accept('-')) {
                e = node(Op::Sub, std::move(e), term());
            }
            else {
                return e;
            }
        }
    }

    AstPtr term() {
        AstPtr e = factor();
        for (;;) {
            if (accept('*')) {
                e = node(Op::Mul, std::move(e), factor());
            }
            else if (accept('/')) {
                e = node(Op::Div, std::move(e), factor());
            }
            else {
                return e;
            }
        }
    }

    AstPtr factor() {
        if (accept('-')) {
            return node(Op::Neg, factor());
        }
        AstPtr base = primary();
        if (accept('^')) {
            const bool negative = accept('-');
            skip();
            int exponent = 0;
            const char* first = text_.data() + pos_;
            const char* last = text_.data() + text_.size();
            auto [ptr, ec] = std::from_chars(first, last, exponent);
            if (ec != std::errc() || ptr == first) {
                fail("expected an integer exponent");
            }
            if (ptr < last && (*ptr == '.' || *ptr == 'e' || *ptr == 'E')) {
                fail("exponent must be an integer");
            }
            pos_ += static_cast<std::size_t>(ptr - first);
            auto p = node(Op::Pow, std::move(base));
            p->exponent = negative ? -exponent : exponent;
            return p;
        }
        return base;
    }

    AstPtr primary() {
        skip();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            AstPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double value = 0.0;
            const char* first = text_.data() + pos_;
            auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
            if (ec != std::errc()) {
                fail("malformed number");
            }
            pos_ += static_cast<std::size_t>(ptr - first);
            auto a = std::make_unique<Ast>();
            a->value = value;
            return a;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "s") {
                auto a = std::make_unique<Ast>();
                a->op = Op::Variable;
                return a;
            }
            Op op;
            if (name == "sin") {
                op = Op::Sin;
            }
            else if (name == "cos") {
                op = Op::Cos;
            }
            else if (name == "sqrt") {
                op = Op::Sqrt;
            }
            else {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            expect('(');
            AstPtr arg = expr();
            expect(')');
            return node(op, std::move(arg));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class ExpressionNode final : public FieldNode {
public:
    ExpressionNode(std::string source, AstPtr root)
        : source_(std::move(source))
        , root_(std::move(root)) {
    }

    double eval(double s) const override { return evalAst(*root_, s); }
    FieldKind kind() const override { return FieldKind::Expression; }
    const std::string& source() const { return source_; }

private:
    std::string source_;
    AstPtr root_;
};

} // namespace

ScalarField parse_expression(std::string_view text) {
    AstPtr root = Parser(text).parse();
    return ScalarField(std::make_shared<ExpressionNode>(std::string(text), std::move(root)));
}

std::string expression_source(const ScalarField& field) {
    if (const auto* e = field.as<ExpressionNode>()) {
        return e->source();
    }
    return {};
}

} // namespace curvekit
