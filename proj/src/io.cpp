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

#include <curvekit/io.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include <curvekit/error.hpp>
#include <curvekit/expression.hpp>

namespace curvekit {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw CurveError(ErrorKind::SchemaError, path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) {
        schema(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema(path + "." + key, "missing");
    }
    return *it;
}

double number(const json& obj, const std::string& key, const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_number()) {
        schema(path + "." + key, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        schema(path + "." + key, "must be finite");
    }
    return d;
}

double numberOr(const json& obj, const std::string& key, const std::string& path,
                double fallback) {
    return obj.contains(key) ? number(obj, key, path) : fallback;
}

std::vector<double> numbers(const json& obj, const std::string& key, const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_array()) {
        schema(path + "." + key, "expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) {
            schema(path + "." + key + "[" + std::to_string(i) + "]", "expected a number");
        }
        out.push_back(v[i].get<double>());
    }
    return out;
}

json parseText(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        const std::size_t line =
            1 + static_cast<std::size_t>(std::count(text.begin(),
                                                    text.begin() + static_cast<std::ptrdiff_t>(
                                                                       std::min(byte, text.size())),
                                                    '\n'));
        throw CurveError(ErrorKind::ParseError,
                         "malformed JSON at line " + std::to_string(line) + ", byte "
                             + std::to_string(byte) + ": " + e.what(),
                         static_cast<double>(byte));
    }
}

ArcInterval parseDomain(const json& root) {
    const json& d = member(root, "domain", "$");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
        schema("$.domain", "expected [s_min, s_max]");
    }
    return {d[0].get<double>(), d[1].get<double>()};
}

struct FieldContext {
    // Curvature field and domain, available once kappa is parsed; needed by
    // the slant-torsion kind.
    const ScalarField* kappa = nullptr;
    std::optional<ArcInterval> domain;
};

ScalarField parseField(const json& node, const std::string& path, const FieldContext& ctx) {
    const json& kindNode = member(node, "kind", path);
    if (!kindNode.is_string()) {
        schema(path + ".kind", "expected a string");
    }
    const std::string kind = kindNode.get<std::string>();
    if (kind == "constant") {
        return ScalarField::constant(number(node, "value", path));
    }
    if (kind == "polynomial") {
        auto c = numbers(node, "coefficients", path);
        if (c.empty()) {
            schema(path + ".coefficients", "must not be empty");
        }
        return ScalarField::polynomial(std::move(c));
    }
    if (kind == "sinusoid") {
        return ScalarField::sinusoid(numberOr(node, "offset", path, 0.0),
                                     number(node, "amplitude", path),
                                     number(node, "frequency", path),
                                     numberOr(node, "phase", path, 0.0));
    }
    if (kind == "table") {
        auto knots = numbers(node, "knots", path);
        auto values = numbers(node, "values", path);
        if (knots.size() != values.size()) {
            schema(path, "knots and values differ in length");
        }
        try {
            return ScalarField::table(std::move(knots), std::move(values));
        }
        catch (const CurveError& e) {
            schema(path, e.what());
        }
    }
    if (kind == "slant-torsion") {
        if (ctx.kappa == nullptr || !ctx.domain) {
            schema(path, "slant-torsion is only valid for tau");
        }
        double m = 0.0;
        if (node.contains("m")) {
            m = number(node, "m", path);
        }
        else if (node.contains("n")) {
            try {
                m = slant_parameter(number(node, "n", path));
            }
            catch (const CurveError& e) {
                schema(path + ".n", e.what());
            }
        }
        else {
            schema(path, "needs \"m\" or \"n\"");
        }
        if (!(m > 0.0)) {
            schema(path + ".m", "must be positive");
        }
        const double sign = numberOr(node, "sign", path, 1.0);
        if (sign != 1.0 && sign != -1.0) {
            schema(path + ".sign", "must be 1 or -1");
        }
        return slant_torsion_from_curvature(*ctx.kappa, m, static_cast<int>(sign), *ctx.domain);
    }
    if (kind == "quotient") {
        return ScalarField::quotient(parseField(member(node, "numerator", path),
                                                path + ".numerator", {}),
                                     parseField(member(node, "denominator", path),
                                                path + ".denominator", {}));
    }
    if (kind == "expression") {
        const json& e = member(node, "expr", path);
        if (!e.is_string()) {
            schema(path + ".expr", "expected a string");
        }
        return parse_expression(e.get<std::string>());
    }
    schema(path + ".kind", "unknown kind \"" + kind + "\"");
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json statsJson(const SpreadStats& s) {
    return {{"mean", s.mean}, {"spread", s.spread}};
}

json vecJson(const Vec3& v) {
    return json::array({v.x(), v.y(), v.z()});
}

} // namespace

IntrinsicProfile parse_profile_json(std::string_view text) {
    const json root = parseText(text);
    if (!root.is_object()) {
        schema("$", "expected an object");
    }
    const ArcInterval domain = parseDomain(root);
    if (!(domain.lo < domain.hi)) {
        schema("$.domain", "requires s_min < s_max");
    }
    if (root.contains("precession")) {
        const json& p = root["precession"];
        PrecessionParams params;
        params.mu = number(p, "mu", "$.precession");
        params.m = number(p, "m", "$.precession");
        if (p.contains("phase_swapped")) {
            if (!p["phase_swapped"].is_boolean()) {
                schema("$.precession.phase_swapped", "expected a boolean");
            }
            params.phase_swapped = p["phase_swapped"].get<bool>();
        }
        if (!(params.mu > 0.0) || !(params.m > 0.0)) {
            schema("$.precession", "mu and m must be positive");
        }
        return precession_profile(params, domain);
    }
    ScalarField kappa = parseField(member(root, "kappa", "$"), "$.kappa", {});
    FieldContext ctx{&kappa, domain};
    ScalarField tau = parseField(member(root, "tau", "$"), "$.tau", ctx);
    return IntrinsicProfile(std::move(kappa), std::move(tau), domain);
}

IntrinsicProfile parse_profile_file(const std::string& path) {
    return parse_profile_json(read_text_file(path));
}

ScalarField parse_field_json(std::string_view text) {
    return parseField(parseText(text), "$", {});
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CurveError(ErrorKind::IoError, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_curve_csv(const SampledCurve& curve, std::ostream& out) {
    out << kCurveCsvHeader << '\n';
    for (const auto& p : curve.samples) {
        const double row[15] = {p.s,
                                p.position.x(), p.position.y(), p.position.z(),
                                p.frame.T.x(), p.frame.T.y(), p.frame.T.z(),
                                p.frame.N.x(), p.frame.N.y(), p.frame.N.z(),
                                p.frame.B.x(), p.frame.B.y(), p.frame.B.z(),
                                p.kappa, p.tau};
        for (int c = 0; c < 15; ++c) {
            out << (c ? "," : "") << fmt17(row[c]);
        }
        out << '\n';
    }
}

SampledCurve read_curve_csv(std::istream& in) {
    std::string line;
    std::size_t lineNo = 1;
    if (!std::getline(in, line)) {
        throw CurveError(ErrorKind::ParseError, "empty curve CSV");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCurveCsvHeader) {
        throw CurveError(ErrorKind::SchemaError, "curve CSV header mismatch", 1.0);
    }
    SampledCurve curve;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        double row[15];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int c = 0; c < 15; ++c) {
            auto [ptr, ec] = std::from_chars(p, end, row[c]);
            if (ec != std::errc()) {
                throw CurveError(ErrorKind::ParseError,
                                 "bad number in column " + std::to_string(c + 1) + " on line "
                                     + std::to_string(lineNo),
                                 static_cast<double>(lineNo));
            }
            p = ptr;
            if (c < 14) {
                if (p == end || *p != ',') {
                    throw CurveError(ErrorKind::SchemaError,
                                     "expected 15 columns on line " + std::to_string(lineNo),
                                     static_cast<double>(lineNo));
                }
                ++p;
            }
        }
        if (p != end) {
            throw CurveError(ErrorKind::SchemaError,
                             "trailing data on line " + std::to_string(lineNo),
                             static_cast<double>(lineNo));
        }
        CurveSample s;
        s.s = row[0];
        s.position = Vec3(row[1], row[2], row[3]);
        s.frame.T = Vec3(row[4], row[5], row[6]);
        s.frame.N = Vec3(row[7], row[8], row[9]);
        s.frame.B = Vec3(row[10], row[11], row[12]);
        s.kappa = row[13];
        s.tau = row[14];
        curve.samples.push_back(s);
    }
    if (curve.samples.empty()) {
        throw CurveError(ErrorKind::SchemaError, "curve CSV has no samples");
    }
    const std::size_t n = curve.size();
    if (n > 1) {
        curve.step = (curve.back().s - curve.front().s) / static_cast<double>(n - 1);
        if (!(curve.step > 0.0)) {
            throw CurveError(ErrorKind::SchemaError, "arclength column must increase");
        }
        for (std::size_t i = 1; i < n; ++i) {
            const double d = curve.samples[i].s - curve.samples[i - 1].s;
            if (std::abs(d - curve.step) > 1e-9 * curve.step
                                               + 1e-12 * std::abs(curve.samples[i].s)) {
                throw CurveError(ErrorKind::SchemaError, "arclength column is not uniform",
                                 static_cast<double>(i + 2));
            }
        }
    }
    curve.provenance = Provenance::External;
    return curve;
}

std::string report_json(const ClassificationReport& report) {
    json labels = json::array();
    for (CurveClass c : report.labels) {
        labels.push_back(std::string(to_string(c)));
    }
    json stats = {{"kappa", statsJson(report.kappa_stats)},
                  {"tau", statsJson(report.tau_stats)},
                  {"ratio", statsJson(report.ratio_stats)},
                  {"sigma", statsJson(report.sigma_stats)},
                  {"stride", report.stride}};
    if (report.axis) {
        stats["axis"] = vecJson(*report.axis);
        stats["axis_residual"] = report.axis_residual;
    }
    if (report.angle) {
        stats["angle"] = *report.angle;
    }
    if (report.precession) {
        const auto& p = *report.precession;
        stats["precession"] = {{"mu", p.mu}, {"m", p.m}, {"omega", p.omega},
                               {"phase", p.phase}, {"residual", p.residual}};
    }
    json verdicts = json::object();
    for (CurveClass c : {CurveClass::StraightLine, CurveClass::PlaneCurve,
                         CurveClass::CircularHelix, CurveClass::GeneralHelix,
                         CurveClass::SlantHelix, CurveClass::Salkowski,
                         CurveClass::AntiSalkowski, CurveClass::ConstantPrecession,
                         CurveClass::Generic}) {
        verdicts[std::string(to_string(c))] = report.has(c);
    }
    return json{{"labels", labels}, {"stats", stats}, {"verdicts", verdicts}}.dump(2);
}

std::string report_json(const SimilarityReport& report) {
    json rotation = json::array();
    for (int r = 0; r < 3; ++r) {
        rotation.push_back(json::array(
            {report.alignment(r, 0), report.alignment(r, 1), report.alignment(r, 2)}));
    }
    json stats = {{"tangent_dev", report.tangent_dev},
                  {"normal_dev", report.normal_dev},
                  {"binormal_dev", report.binormal_dev},
                  {"ratio_dev", report.ratio_dev},
                  {"theta_dev", report.theta_dev},
                  {"compared", report.compared},
                  {"alignment", rotation}};
    json verdicts = {{"tangent", report.verdicts.tangent},
                     {"normal", report.verdicts.normal},
                     {"binormal", report.verdicts.binormal},
                     {"ratio_theta", report.verdicts.ratio_theta},
                     {"overall", report.verdicts.overall}};
    json labels = json::array();
    if (report.verdicts.overall) {
        labels.push_back("Similar");
    }
    return json{{"labels", labels}, {"stats", stats}, {"verdicts", verdicts}}.dump(2);
}

std::string error_json(const CurveError& error) {
    json e = {{"error", std::string(to_string(error.kind()))}, {"message", error.what()}};
    if (error.where()) {
        e["where"] = *error.where();
    }
    return e.dump();
}

ProjectionPlane parse_plane(std::string_view name) {
    if (name == "xy") {
        return ProjectionPlane::XY;
    }
    if (name == "xz") {
        return ProjectionPlane::XZ;
    }
    if (name == "yz") {
        return ProjectionPlane::YZ;
    }
    throw CurveError(ErrorKind::InvalidArgument,
                     "projection plane must be xy, xz or yz, got " + std::string(name));
}

void write_svg(const SampledCurve& curve, ProjectionPlane plane, std::ostream& out, int width,
               int height) {
    int a = 0;
    int b = 1;
    if (plane == ProjectionPlane::XZ) {
        b = 2;
    }
    else if (plane == ProjectionPlane::YZ) {
        a = 1;
        b = 2;
    }
    double minA = 0.0, maxA = 0.0, minB = 0.0, maxB = 0.0;
    if (!curve.samples.empty()) {
        minA = maxA = curve.front().position[a];
        minB = maxB = curve.front().position[b];
    }
    for (const auto& p : curve.samples) {
        minA = std::min(minA, p.position[a]);
        maxA = std::max(maxA, p.position[a]);
        minB = std::min(minB, p.position[b]);
        maxB = std::max(maxB, p.position[b]);
    }
    const double margin = 16.0;
    const double span = std::max({maxA - minA, maxB - minB, 1e-12});
    const double scale = std::min(width, height) - 2.0 * margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    char buf[64];
    for (const auto& p : curve.samples) {
        const double x = margin + (p.position[a] - minA) / span * scale;
        const double y = height - margin - (p.position[b] - minB) / span * scale;
        std::snprintf(buf, sizeof buf, "%.3f,%.3f ", x, y);
        out << buf;
    }
    out << "\"/>\n</svg>\n";
}

} // namespace curvekit
