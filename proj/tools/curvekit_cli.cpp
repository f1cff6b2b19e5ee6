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

#include <charconv>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <curvekit/cli.hpp>
#include <curvekit/error.hpp>
#include <curvekit/io.hpp>

namespace {

int badArgument(const std::string& what) {
    std::cerr << curvekit::error_json(curvekit::CurveError(curvekit::ErrorKind::InvalidArgument, what))
              << "\n";
    return curvekit::kExitError;
}

// "a,b" -> interval. Returns an error message, empty on success.
std::string parseInterval(const std::string& text, curvekit::ArcInterval& out) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return "expected lo,hi";
    }
    double v[2];
    const std::string parts[2] = {text.substr(0, comma), text.substr(comma + 1)};
    for (int i = 0; i < 2; ++i) {
        const char* first = parts[i].data();
        const char* last = first + parts[i].size();
        auto [ptr, ec] = std::from_chars(first, last, v[i]);
        if (ec != std::errc() || ptr != last) {
            return "expected lo,hi";
        }
    }
    out = {v[0], v[1]};
    return {};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvekit: space curves from curvature and torsion"};
    app.require_subcommand(1);

    curvekit::RunConfig config;
    std::string domainText;
    std::string tRangeText;
    double n = 0.0;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--domain", domainText, "Arclength domain override lo,hi");
        sub->add_option("--step", config.step, "Arclength step")->capture_default_str();
        sub->add_option("-o,--output", config.output, "Output path, - for stdout")
            ->capture_default_str();
        sub->add_option("--format", config.format, "csv, svg or json");
        sub->add_option("--plane", config.plane, "SVG projection plane: xy, xz, yz")
            ->capture_default_str();
    };

    auto* gen = app.add_subcommand("generate", "Closed-form generator");
    gen->add_option("--kind", config.kind, "plane, general-helix, slant-helix, salkowski")
        ->required();
    gen->add_option("--profile", config.profile, "Profile JSON (curvature and domain)");
    gen->add_option("--n", n, "Angle parameter n in (0, 1)");
    gen->add_option("--t-range", tRangeText, "Salkowski parameter range lo,hi");
    gen->add_option("--samples", config.samples, "Salkowski sample count")
        ->capture_default_str();
    addCommon(gen);

    auto* integ = app.add_subcommand("integrate", "Integrate the Frenet-Serret system");
    integ->add_option("--profile", config.profile, "Profile JSON")->required();
    addCommon(integ);

    auto* cls = app.add_subcommand("classify", "Classify a curve");
    cls->add_option("--profile", config.profile, "Profile JSON, integrated first");
    cls->add_option("--input", config.input, "Curve CSV");
    addCommon(cls);

    auto* sim = app.add_subcommand("similar", "Check similarity with variable transformation");
    sim->add_option("--alpha", config.alpha, "Profile JSON of alpha")->required();
    sim->add_option("--lambda", config.lambda, "lambda(s) expression");
    sim->add_option("--beta", config.beta, "Profile JSON of beta");
    addCommon(sim);

    auto* ver = app.add_subcommand("verify", "Run built-in self-checks");
    ver->add_option("--name", config.name, "Check name or all")->capture_default_str();
    addCommon(ver);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : curvekit::kExitError;
    }

    config.command = app.get_subcommands().front()->get_name();
    if (!domainText.empty()) {
        curvekit::ArcInterval d;
        if (auto msg = parseInterval(domainText, d); !msg.empty()) {
            return badArgument("--domain: " + msg);
        }
        config.domain = d;
    }
    if (!tRangeText.empty()) {
        if (auto msg = parseInterval(tRangeText, config.t_range); !msg.empty()) {
            return badArgument("--t-range: " + msg);
        }
    }
    if (gen->count("--n") > 0) {
        config.n = n;
    }
    return curvekit::run_command(config, std::cout, std::cerr);
}
