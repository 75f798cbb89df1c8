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

// File formats:
//
//   interval set   {"intervals": [[lo, hi], ...]}
//   PL function    {"breakpoints": [[x, y], ...]}
//   smooth samples {"kind": "smooth", "samples": [[x, y], ...]}
//   race profile   {"total_distance": L, "total_time": T,
//                   "splits": [[cumulative_distance, cumulative_time], ...]}
//   chord scan     CSV "s,in_chord_set" plus a bracket listing "s_lo,s_hi"
//
// Writers emit numbers with 12 significant digits in plain decimal notation.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chordset/chord_oracle.hpp"
#include "chordset/common.hpp"
#include "chordset/interval_set.hpp"
#include "chordset/piecewise_linear.hpp"
#include "chordset/race.hpp"

namespace chordset {

/// Malformed file contents. The message carries the source name and the
/// line/column or field path of the problem.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 12 significant digits, never in exponent notation.
inline std::string format_number(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? "0" : (std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"));
  const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::max(0, 11 - magnitude);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

/// Shortest fixed-notation decimal that parses back to exactly v. Used for
/// JSON output so files round-trip bit for bit.
inline std::string format_exact(double v) {
  if (!std::isfinite(v)) return format_number(v);
  if (v == 0.0) return "0";
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

namespace detail {

using nlohmann::json;

inline json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

inline const json& field(const json& obj, const char* name, std::string_view source) {
  if (!obj.is_object()) throw ParseError(std::string(source) + ": top level must be a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string(source) + ": missing field '" + name + "'");
  return *it;
}

inline double number(const json& v, std::string_view source, const std::string& path) {
  if (!v.is_number()) throw ParseError(std::string(source) + ": " + path + ": expected a number");
  return v.get<double>();
}

inline std::vector<Point> pairs(const json& arr, std::string_view source, const std::string& name) {
  if (!arr.is_array()) throw ParseError(std::string(source) + ": " + name + ": expected an array of pairs");
  std::vector<Point> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = name + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2)
      throw ParseError(std::string(source) + ": " + path + ": expected a [number, number] pair");
    out.push_back({number(arr[i][0], source, path + "[0]"), number(arr[i][1], source, path + "[1]")});
  }
  return out;
}

template <class Range, class Proj>
std::string pair_list(const Range& items, Proj proj) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    const auto [a, b] = proj(item);
    out += first ? "\n    [" : ",\n    [";
    out += format_exact(a) + ", " + format_exact(b) + "]";
    first = false;
  }
  out += first ? "]" : "\n  ]";
  return out;
}

}  // namespace detail

// Interval sets -------------------------------------------------------------

/// Raw interval list; structural validation is left to validate_chord_spec.
inline std::vector<Interval> parse_interval_list(std::string_view text, std::string_view source = "<input>") {
  const auto doc = detail::parse_json(text, source);
  std::vector<Interval> out;
  for (const Point& p : detail::pairs(detail::field(doc, "intervals", source), source, "intervals"))
    out.push_back({p.x, p.y});
  return out;
}

inline ClosedIntervalSet parse_interval_set(std::string_view text, std::string_view source = "<input>",
                                            double tol = kTolerance) {
  try {
    return ClosedIntervalSet(parse_interval_list(text, source), tol);
  } catch (const ValidationError& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

inline std::string write_interval_set(const ClosedIntervalSet& set) {
  return "{\n  \"intervals\": " +
         detail::pair_list(set.intervals(), [](const Interval& iv) { return std::pair{iv.lo, iv.hi}; }) + "\n}\n";
}

// Functions -----------------------------------------------------------------

/// A function file: exact breakpoints, or dense samples of a smooth function.
struct FunctionFile {
  PiecewiseLinearFunction function;
  bool smooth = false;
};

inline FunctionFile parse_function(std::string_view text, std::string_view source = "<input>") {
  const auto doc = detail::parse_json(text, source);
  if (!doc.is_object()) throw ParseError(std::string(source) + ": top level must be a JSON object");
  const bool has_samples = doc.contains("samples");
  if (has_samples && doc.contains("kind") && doc["kind"] != "smooth")
    throw ParseError(std::string(source) + ": kind: expected \"smooth\"");
  const char* key = has_samples ? "samples" : "breakpoints";
  auto pts = detail::pairs(detail::field(doc, key, source), source, key);
  try {
    return {PiecewiseLinearFunction(std::move(pts)), has_samples};
  } catch (const ValidationError& e) {
    throw ParseError(std::string(source) + ": " + key + ": " + e.what());
  }
}

inline std::string write_function(const PiecewiseLinearFunction& f, bool smooth = false) {
  const auto list = detail::pair_list(f.breakpoints(), [](const Point& p) { return std::pair{p.x, p.y}; });
  if (smooth) return "{\n  \"kind\": \"smooth\",\n  \"samples\": " + list + "\n}\n";
  return "{\n  \"breakpoints\": " + list + "\n}\n";
}

// Race profiles ---------------------------------------------------------------

inline RaceProfile parse_profile(std::string_view text, std::string_view source = "<input>") {
  const auto doc = detail::parse_json(text, source);
  const double L = detail::number(detail::field(doc, "total_distance", source), source, "total_distance");
  const double T = detail::number(detail::field(doc, "total_time", source), source, "total_time");
  std::vector<Split> splits;
  for (const Point& p : detail::pairs(detail::field(doc, "splits", source), source, "splits"))
    splits.push_back({p.x, p.y});
  if (splits.empty()) throw ParseError(std::string(source) + ": splits: at least one split is required");
  const Split& last = splits.back();
  if (std::abs(last.distance - L) > kTolerance * std::max(1.0, L) ||
      std::abs(last.time - T) > kTolerance * std::max(1.0, T))
    throw ParseError(std::string(source) + ": splits: last split (" + format_number(last.distance) + ", " +
                     format_number(last.time) + ") must equal (total_distance, total_time)");
  splits.back() = {L, T};
  try {
    return RaceProfile::from_splits(splits);
  } catch (const ValidationError& e) {
    throw ParseError(std::string(source) + ": splits: " + e.what());
  }
}

inline std::string write_profile(const RaceProfile& profile) {
  return "{\n  \"total_distance\": " + format_exact(profile.total_distance()) +
         ",\n  \"total_time\": " + format_exact(profile.total_time()) + ",\n  \"splits\": " +
         detail::pair_list(profile.splits(), [](const Split& s) { return std::pair{s.distance, s.time}; }) + "\n}\n";
}

// Chord scans -----------------------------------------------------------------

inline std::string write_chord_scan_csv(const ChordScan& scan) {
  std::string out = "s,in_chord_set\n";
  for (std::size_t i = 0; i < scan.lengths.size(); ++i)
    out += format_number(scan.lengths[i]) + (scan.membership[i] ? ",1\n" : ",0\n");
  return out;
}

inline std::string write_bracket_csv(const ChordScan& scan) {
  std::string out = "s_lo,s_hi\n";
  for (const Bracket& b : scan.refined_boundaries) out += format_number(b.lo) + "," + format_number(b.hi) + "\n";
  return out;
}

// SVG -----------------------------------------------------------------------

struct PlotOptions {
  std::optional<double> overlay_shift;
  std::string title;
  int width = 800;
  int height = 400;
};

/// Polyline plot of f. With an overlay shift s, also draws x -> f(x - s) as
/// a thin line, so a chord of length s shows up as an intersection.
inline std::string render_svg(const PiecewiseLinearFunction& f, const PlotOptions& opt = {}) {
  const auto& pts = f.breakpoints();
  const double shift = opt.overlay_shift.value_or(0.0);
  double x_lo = f.x_min();
  double x_hi = f.x_max() + std::max(0.0, shift);
  x_lo = std::min(x_lo, f.x_min() + shift);
  double y_lo = 0.0;
  double y_hi = 0.0;
  for (const Point& p : pts) {
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  if (x_hi - x_lo <= 0.0) x_hi = x_lo + 1.0;
  if (y_hi - y_lo <= 0.0) y_hi = y_lo + 1.0;
  const double margin = 20.0;
  const double w = opt.width - 2 * margin;
  const double h = opt.height - 2 * margin;
  auto sx = [&](double x) { return margin + (x - x_lo) / (x_hi - x_lo) * w; };
  auto sy = [&](double y) { return margin + (y_hi - y) / (y_hi - y_lo) * h; };
  auto coord = [](double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto polyline = [&](double dx, const char* stroke, const char* width) {
    std::string out = "  <polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + width +
                      "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += coord(sx(pts[i].x + dx)) + "," + coord(sy(pts[i].y));
    }
    return out + "\"/>\n";
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width) +
                    "\" height=\"" + std::to_string(opt.height) + "\" viewBox=\"0 0 " + std::to_string(opt.width) +
                    " " + std::to_string(opt.height) + "\">\n";
  if (!opt.title.empty()) svg += "  <title>" + opt.title + "</title>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <line x1=\"" + coord(sx(x_lo)) + "\" y1=\"" + coord(sy(0.0)) + "\" x2=\"" + coord(sx(x_hi)) +
         "\" y2=\"" + coord(sy(0.0)) + "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  if (opt.overlay_shift) svg += polyline(shift, "#888888", "1");
  svg += polyline(0.0, "black", "2.5");
  svg += "</svg>\n";
  return svg;
}

}  // namespace chordset
