// Copyright 2026 The chordset Authors
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

// Command dispatch for the chordset tool. Exit codes: 0 found / valid,
// 3 negative mathematical result, 1 error.

#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chordset/chordset.hpp"
#include "chordset/io.hpp"

namespace chordset::cli {

enum ExitCode : int { kOk = 0, kError = 1, kNegative = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

inline std::string seconds(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "t* = %.6f s", t);
  return buf;
}

inline std::string bracket_path(const std::string& csv_path) {
  const auto dot = csv_path.rfind('.');
  const auto slash = csv_path.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? csv_path.substr(0, dot) : csv_path) + ".brackets.csv";
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horizontal chord sets and average-pace race splits", "chordset"};
  app.require_subcommand(1);
  double tol = kTolerance;
  app.add_option("--tolerance", tol, "Comparison tolerance")->check(CLI::PositiveNumber);

  std::string input;
  std::string output;
  double window = 0.0;
  double resolution = 0.0;
  std::string shape = "hopf";
  double lambda = 0.0;
  double chord = 1.0;
  std::optional<double> overlay;
  double distance = 0.0;
  std::string time_text;

  auto* validate = app.add_subcommand("validate", "Check that an interval-set file is a horizontal chord set");
  validate->add_option("input", input, "Interval-set JSON file")->required();

  auto* construct = app.add_subcommand("construct", "Build a function with a prescribed chord set");
  construct->add_option("input", input, "Interval-set JSON file (hopf, smooth)");
  construct->add_option("--shape", shape, "hopf | smooth | triangle | sin2")
      ->check(CLI::IsMember({"hopf", "smooth", "triangle", "sin2"}));
  construct->add_option("--resolution", resolution, "Sample spacing for smooth output")->check(CLI::PositiveNumber);
  construct->add_option("--lambda", lambda, "Domain length for triangle/sin2")->check(CLI::PositiveNumber);
  construct->add_option("--chord", chord, "Avoided chord length for triangle/sin2")->check(CLI::PositiveNumber);
  construct->add_option("--output", output, "Output path (stdout if omitted)");

  auto* chords = app.add_subcommand("chords", "Scan the chord set of a function file");
  chords->add_option("input", input, "Function JSON file")->required();
  chords->add_option("--resolution", resolution, "Grid spacing of chord lengths")
      ->required()
      ->check(CLI::PositiveNumber);
  chords->add_option("--output", output, "CSV path; brackets go to <stem>.brackets.csv");

  auto* plan = app.add_subcommand("race-plan", "Pace profile with no window at the average pace");
  plan->add_option("--distance", distance, "Race distance L")->required()->check(CLI::PositiveNumber);
  plan->add_option("--time", time_text, "Race time T (seconds, mm:ss or h:mm:ss)")->required();
  plan->add_option("--window", window, "Window distance d")->required()->check(CLI::PositiveNumber);
  plan->add_option("--shape", shape, "triangle")->check(CLI::IsMember({"triangle"}));
  plan->add_option("--output", output, "Output path (stdout if omitted)");

  auto* find = app.add_subcommand("race-find-split", "Locate an average-pace window (whole-number L/d)");
  find->add_option("input", input, "Race profile JSON file")->required();
  find->add_option("--window", window, "Window distance d")->required()->check(CLI::PositiveNumber);

  auto* exists = app.add_subcommand("race-exists-split", "Decide whether an average-pace window exists");
  exists->add_option("input", input, "Race profile JSON file")->required();
  exists->add_option("--window", window, "Window distance d")->required()->check(CLI::PositiveNumber);

  auto* plot = app.add_subcommand("plot", "SVG plot of a function, profile or interval-set file");
  plot->add_option("input", input, "Function, profile or interval-set JSON file")->required();
  plot->add_option("--overlay-shift", overlay, "Also draw x -> f(x - s)");
  plot->add_option("--output", output, "SVG path (stdout if omitted)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kError;
  }

  try {
    if (validate->parsed()) {
      const auto report = validate_chord_spec(parse_interval_list(detail::read_file(input), input), tol);
      out << report.to_text();
      return report.ok() ? kOk : kNegative;
    }

    if (construct->parsed()) {
      if (shape == "triangle" || shape == "sin2") {
        if (!(lambda > 0.0)) throw DomainError("--lambda is required for shape " + shape);
        const auto phi = shape == "triangle" ? SmoothShapeSpec::triangle_wave(chord) : SmoothShapeSpec::sin_squared(chord);
        const LevyFunction levy = build_levy(lambda, chord, phi);
        if (levy.is_piecewise_linear()) {
          detail::emit(write_function(levy.to_piecewise_linear()), output, out);
        } else {
          const double step = resolution > 0.0 ? resolution : lambda / 1000.0;
          detail::emit(write_function(levy.sample(static_cast<std::size_t>(std::ceil(lambda / step)) + 1), true),
                       output, out);
        }
        return kOk;
      }
      if (input.empty()) throw DomainError("an interval-set file is required for shape " + shape);
      const ClosedIntervalSet set = parse_interval_set(detail::read_file(input), input, tol);
      if (shape == "hopf") {
        detail::emit(write_function(build_hopf(set)), output, out);
      } else {
        const SmoothChordFunction smooth(set);
        const double L = set.sup();
        if (!(L > 0.0)) throw DomainError("cannot sample a function on a one-point domain");
        const double step = resolution > 0.0 ? resolution : L / 1000.0;
        detail::emit(write_function(smooth.sample(static_cast<std::size_t>(std::ceil(L / step)) + 1), true), output,
                     out);
      }
      return kOk;
    }

    if (chords->parsed()) {
      const FunctionFile file = parse_function(detail::read_file(input), input);
      const ChordScan scan = chord_set_scan(file.function, resolution, tol);
      if (output.empty() || output == "-") {
        out << write_chord_scan_csv(scan) << "\n" << write_bracket_csv(scan);
      } else {
        detail::emit(write_chord_scan_csv(scan), output, out);
        detail::emit(write_bracket_csv(scan), detail::bracket_path(output), out);
      }
      return kOk;
    }

    if (plan->parsed()) {
      const RaceProfile profile = build_adversarial_profile(distance, parse_duration(time_text), window);
      detail::emit(write_profile(profile), output, out);
      return kOk;
    }

    if (find->parsed()) {
      const RaceProfile profile = parse_profile(detail::read_file(input), input);
      out << detail::seconds(find_average_split(profile, window)) << "\n";
      return kOk;
    }

    if (exists->parsed()) {
      const RaceProfile profile = parse_profile(detail::read_file(input), input);
      const ChordQueryResult r = exists_average_split(profile, window, tol);
      if (!r.exists) {
        out << "none\n";
        return kNegative;
      }
      out << detail::seconds(*r.witness_x) << "\n";
      return kOk;
    }

    if (plot->parsed()) {
      const std::string text = detail::read_file(input);
      const auto doc = chordset::detail::parse_json(text, input);
      PlotOptions opt;
      opt.overlay_shift = overlay;
      opt.title = input;
      std::optional<PiecewiseLinearFunction> f;
      if (doc.is_object() && doc.contains("total_distance")) f = parse_profile(text, input).position();
      else if (doc.is_object() && doc.contains("intervals")) f = build_hopf(parse_interval_set(text, input, tol));
      else f = parse_function(text, input).function;
      detail::emit(render_svg(*f, opt), output, out);
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace chordset::cli
