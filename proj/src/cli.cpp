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

#include <curvekit/cli.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <curvekit/analysis.hpp>
#include <curvekit/error.hpp>
#include <curvekit/expression.hpp>
#include <curvekit/frenet.hpp>
#include <curvekit/generators.hpp>
#include <curvekit/io.hpp>
#include <curvekit/similarity.hpp>
#include <curvekit/verify.hpp>

namespace curvekit {

namespace {

const FrenetFrame kCanonical{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};

[[noreturn]] void invalid(const std::string& what) {
    throw CurveError(ErrorKind::InvalidArgument, what);
}

bool curveCommand(const std::string& command) {
    return command == "generate" || command == "integrate";
}

std::string effectiveFormat(const RunConfig& c) {
    if (!c.format.empty()) {
        return c.format;
    }
    return curveCommand(c.command) ? "csv" : "json";
}

void emit(const RunConfig& c, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (c.output == "-") {
        write(out);
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) {
        throw CurveError(ErrorKind::IoError, "cannot write " + c.output);
    }
    write(file);
    if (!file) {
        throw CurveError(ErrorKind::IoError, "write failed for " + c.output);
    }
}

void emitCurve(const RunConfig& c, const SampledCurve& curve, std::ostream& out) {
    if (effectiveFormat(c) == "svg") {
        const ProjectionPlane plane = parse_plane(c.plane);
        emit(c, out, [&](std::ostream& o) { write_svg(curve, plane, o); });
    }
    else {
        emit(c, out, [&](std::ostream& o) { write_curve_csv(curve, o); });
    }
}

IntrinsicProfile loadProfile(const std::string& path, const std::optional<ArcInterval>& domain) {
    IntrinsicProfile p = parse_profile_file(path);
    if (domain) {
        return IntrinsicProfile(p.kappa(), p.tau(), *domain);
    }
    return p;
}

SampledCurve integrateProfile(const IntrinsicProfile& p, double step) {
    if (p.isStraight()) {
        return straight_line(p.domain(), Vec3::UnitX(), Vec3::Zero(), step);
    }
    return integrate_frenet(p, kCanonical, Vec3::Zero(), step);
}

int generate(const RunConfig& c, std::ostream& out) {
    SampledCurve curve;
    if (c.kind == "salkowski") {
        if (!c.n) {
            invalid("generate salkowski needs --n");
        }
        curve = gen_salkowski(*c.n, c.t_range, c.samples);
    }
    else {
        const IntrinsicProfile p = loadProfile(c.profile, c.domain);
        if (c.kind == "plane") {
            curve = gen_plane_curve(p.kappa(), p.domain(), c.step);
        }
        else if (c.kind == "general-helix" || c.kind == "slant-helix") {
            if (!c.n) {
                invalid("generate " + c.kind + " needs --n");
            }
            curve = c.kind == "general-helix"
                        ? gen_general_helix(p.kappa(), *c.n, p.domain(), c.step)
                        : gen_slant_helix(p.kappa(), *c.n, p.domain(), c.step);
        }
        else {
            invalid("unknown generator kind \"" + c.kind + "\"");
        }
    }
    emitCurve(c, curve, out);
    return kExitOk;
}

int integrate(const RunConfig& c, std::ostream& out) {
    emitCurve(c, integrateProfile(loadProfile(c.profile, c.domain), c.step), out);
    return kExitOk;
}

int classifyCommand(const RunConfig& c, std::ostream& out) {
    SampledCurve curve;
    if (!c.input.empty()) {
        std::ifstream in(c.input, std::ios::binary);
        if (!in) {
            throw CurveError(ErrorKind::IoError, "cannot open " + c.input);
        }
        curve = read_curve_csv(in);
    }
    else {
        curve = integrateProfile(loadProfile(c.profile, c.domain), c.step);
    }
    const ClassificationReport report = classify(curve);
    emit(c, out, [&](std::ostream& o) { o << report_json(report) << '\n'; });
    return kExitOk;
}

int similar(const RunConfig& c, std::ostream& out) {
    const IntrinsicProfile alpha = parse_profile_file(c.alpha);
    IntrinsicProfile beta = alpha;
    std::optional<VariableTransformation> tr;
    if (!c.beta.empty()) {
        beta = loadProfile(c.beta, c.domain);
        tr = make_transformation(alpha.kappa(), alpha.domain(), beta.kappa(), beta.domain(),
                                 c.step);
    }
    else {
        const ScalarField lambda = parse_expression(c.lambda);
        const ArcInterval betaDomain =
            c.domain ? *c.domain
                     : max_beta_domain(lambda, 0.0, alpha.domain().length(), c.step);
        beta = similar_partner(alpha, lambda, betaDomain, c.step);
        tr = transformation_from_lambda(lambda, betaDomain, alpha.domain().lo, c.step);
    }
    const SampledCurve ca = integrateProfile(alpha, c.step);
    const SampledCurve cb = integrateProfile(beta, c.step);
    const SimilarityReport report = check_similar(ca, cb, *tr);
    emit(c, out, [&](std::ostream& o) { o << report_json(report) << '\n'; });
    return report.verdicts.overall ? kExitOk : kExitPredicateFalse;
}

int verify(const RunConfig& c, std::ostream& out) {
    const auto results = run_verification(c.name);
    bool all = true;
    emit(c, out, [&](std::ostream& o) {
        for (const auto& r : results) {
            o << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
            all = all && r.passed;
        }
    });
    return all ? kExitOk : kExitPredicateFalse;
}

} // namespace

void RunConfig::validate() const {
    if (command != "generate" && command != "integrate" && command != "classify"
        && command != "similar" && command != "verify") {
        invalid("unknown command \"" + command + "\"");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        invalid("step must be positive");
    }
    if (output.empty()) {
        invalid("output path must not be empty");
    }
    const std::string f = effectiveFormat(*this);
    if (curveCommand(command) ? (f != "csv" && f != "svg") : f != "json" && command != "verify") {
        invalid("format \"" + f + "\" is not valid for " + command);
    }
    if (domain && !(domain->lo <= domain->hi)) {
        invalid("domain must satisfy lo <= hi");
    }
    if (command == "generate") {
        if (kind.empty()) {
            invalid("generate needs --kind");
        }
        if (kind != "salkowski" && profile.empty()) {
            invalid("generate needs --profile");
        }
    }
    if (command == "integrate" && profile.empty()) {
        invalid("integrate needs --profile");
    }
    if (command == "classify" && profile.empty() && input.empty()) {
        invalid("classify needs --profile or --input");
    }
    if (command == "similar") {
        if (alpha.empty()) {
            invalid("similar needs --alpha");
        }
        if (beta.empty() == lambda.empty()) {
            invalid("similar needs exactly one of --beta or --lambda");
        }
    }
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        if (config.command == "generate") {
            return generate(config, out);
        }
        if (config.command == "integrate") {
            return integrate(config, out);
        }
        if (config.command == "classify") {
            return classifyCommand(config, out);
        }
        if (config.command == "similar") {
            return similar(config, out);
        }
        return verify(config, out);
    }
    catch (const CurveError& e) {
        err << error_json(e) << '\n';
    }
    catch (const std::exception& e) {
        err << error_json(CurveError(ErrorKind::InvalidArgument, e.what())) << '\n';
    }
    return kExitError;
}

} // namespace curvekit
