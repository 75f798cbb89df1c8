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

// Race pacing through the lens of horizontal chords.
//
// A race of distance L run in time T is a strictly increasing position
// function p: [0, T] -> [0, L]. A window of distance d is run at exactly the
// average pace iff p(t + T d / L) - p(t) = d for some t. Subtracting the
// average-speed line and rescaling time so that T d / L becomes one unit turns
// this into a unit horizontal chord of g(u) = p(u T d / L) - d u on [0, L / d],
// with g(0) = g(L / d) = 0. When L / d is a whole number such a window always
// exists; otherwise a sawtooth g with no unit chord gives a profile with none.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chordset/bisection.hpp"
#include "chordset/chord_builder.hpp"
#include "chordset/chord_oracle.hpp"
#include "chordset/common.hpp"
#include "chordset/piecewise_linear.hpp"

namespace chordset {

/// A cumulative split: distance covered and elapsed time at a checkpoint.
struct Split {
  double distance = 0.0;
  double time = 0.0;
  friend bool operator==(const Split&, const Split&) = default;
};

/// Position as a function of time, strictly increasing from (0, 0) to (T, L).
/// Times are in seconds; distances in any fixed unit.
class RaceProfile {
 public:
  explicit RaceProfile(PiecewiseLinearFunction position) : position_(std::move(position)) {
    const auto& pts = position_.breakpoints();
    if (pts.size() < 2) throw ValidationError("a race profile needs at least one split");
    if (pts.front().x != 0.0 || pts.front().y != 0.0)
      throw ValidationError("a race profile must start at time 0, distance 0");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (!(pts[i + 1].y > pts[i].y))
        throw ValidationError("position must be strictly increasing (split " + std::to_string(i + 1) + ")");
  }

  /// Builds a constant-speed-per-split profile from cumulative splits. The
  /// origin (0, 0) is implicit.
  static RaceProfile from_splits(std::span<const Split> splits) {
    if (splits.empty()) throw ValidationError("a race profile needs at least one split");
    std::vector<Point> pts{{0.0, 0.0}};
    for (std::size_t i = 0; i < splits.size(); ++i) {
      const Split& s = splits[i];
      const Point& last = pts.back();
      if (!(s.time > last.x) || !(s.distance > last.y))
        throw ValidationError("splits must strictly increase in distance and time (split " + std::to_string(i) +
                              ": " + detail::num(s.distance) + ", " + detail::num(s.time) + ")");
      pts.push_back({s.time, s.distance});
    }
    return RaceProfile(PiecewiseLinearFunction(std::move(pts)));
  }

  double total_distance() const { return position_.breakpoints().back().y; }
  double total_time() const { return position_.x_max(); }
  const PiecewiseLinearFunction& position() const { return position_; }

  std::vector<Split> splits() const {
    std::vector<Split> out;
    const auto& pts = position_.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i) out.push_back({pts[i].y, pts[i].x});
    return out;
  }

  double distance_at(double t) const { return position_(t); }

  /// Slowest and fastest speeds over the race.
  double min_speed() const { return position_.min_slope(); }
  double max_speed() const { return position_.max_abs_slope(); }

  friend bool operator==(const RaceProfile&, const RaceProfile&) = default;

 private:
  PiecewiseLinearFunction position_;
};

/// Seconds per distance unit.
inline double average_pace(const RaceProfile& profile) {
  return profile.total_time() / profile.total_distance();
}

namespace detail {

inline void require_window(const RaceProfile& profile, double d) {
  const double L = profile.total_distance();
  if (!(d > 0.0) || d > L * (1.0 + kTolerance))
    throw DomainError("window distance " + num(d) + " must lie in (0, " + num(L) + "]");
}

inline bool is_whole_ratio(double ratio) {
  return std::abs(ratio - std::round(ratio)) <= kTolerance * ratio;
}

}  // namespace detail

struct WindowTimes {
  double min_time = 0.0;
  double max_time = 0.0;
};

/// Fastest and slowest times over all windows of distance d. The window time
/// is piecewise linear in the start distance, so its extrema occur at starts
/// where either end of the window meets a split.
inline WindowTimes window_time_extrema(const RaceProfile& profile, double d) {
  detail::require_window(profile, d);
  const double L = profile.total_distance();
  const double last_start = std::max(0.0, L - d);
  const PiecewiseLinearFunction time_at = profile.position().inverse();
  std::vector<double> starts{0.0, last_start};
  for (const Point& p : time_at.breakpoints()) {
    if (p.x > 0.0 && p.x < last_start) starts.push_back(p.x);
    if (p.x - d > 0.0 && p.x - d < last_start) starts.push_back(p.x - d);
  }
  WindowTimes out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (double u : starts) {
    const double elapsed = time_at(std::min(u + d, L)) - time_at(u);
    out.min_time = std::min(out.min_time, elapsed);
    out.max_time = std::max(out.max_time, elapsed);
  }
  return out;
}

/// The sheared, rescaled function g(u) = p(u T d / L) - d u on [0, L / d]:
/// its unit horizontal chords are exactly the average-pace windows of
/// distance d.
inline PiecewiseLinearFunction to_chord_problem(const RaceProfile& profile, double d) {
  detail::require_window(profile, d);
  const double L = profile.total_distance();
  const double T = profile.total_time();
  const double time_scale = L / (T * d);
  const auto& pts = profile.position().breakpoints();
  std::vector<Point> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i + 1 == pts.size()) {
      out.push_back({L / d, 0.0});
    } else {
      const double u = pts[i].x * time_scale;
      out.push_back({u, pts[i].y - d * u});
    }
  }
  return PiecewiseLinearFunction(std::move(out));
}

/// Whether some window of distance d takes exactly T d / L. The witness is
/// the earliest start time of such a window.
inline ChordQueryResult exists_average_split(const RaceProfile& profile, double d, double tol = kTolerance) {
  const PiecewiseLinearFunction g = to_chord_problem(profile, d);
  ChordQueryResult r = has_horizontal_chord(g, std::min(1.0, g.width()), tol);
  if (r.witness_x) {
    const double T = profile.total_time();
    const double window = T * d / profile.total_distance();
    *r.witness_x = std::clamp(*r.witness_x * window, 0.0, std::max(0.0, T - window));
  }
  return r;
}

/// When L / d is a whole number n, finds a start time t* whose window of
/// duration T / n covers exactly d. Scans the n aligned windows, then bisects
/// between the first neighbouring pair whose coverage straddles d.
inline double find_average_split(const RaceProfile& profile, double d) {
  detail::require_window(profile, d);
  const double L = profile.total_distance();
  const double T = profile.total_time();
  const double ratio = L / d;
  if (!detail::is_whole_ratio(ratio))
    throw PreconditionError("race distance " + detail::num(L) + " is not a whole number of " + detail::num(d) +
                            "-unit windows; use exists_average_split");
  const auto n = static_cast<long>(std::round(ratio));
  const double window = T / static_cast<double>(n);
  const double value_tol = 1e-9 * d;
  const PiecewiseLinearFunction& p = profile.position();
  auto excess = [&](double t) { return p(std::min(t + window, T)) - p(t) - d; };

  // Leftmost first: an exact aligned window, or a bracket ending at the next one.
  double prev = excess(0.0);
  for (long k = 0; k < n; ++k) {
    if (std::abs(prev) <= value_tol) return k * window;
    if (k + 1 == n) break;
    const double next = excess((k + 1) * window);
    if ((prev > 0.0) != (next > 0.0) && std::abs(next) > value_tol) {
      auto root = bisect_root(excess, k * window, (k + 1) * window, value_tol);
      if (root && std::abs(excess(*root)) <= value_tol) return *root;
      break;
    }
    prev = next;
  }
  throw std::logic_error("aligned windows failed to bracket an average-pace window");
}

/// Result of turning a chord-avoiding function into a race profile.
struct ChordRaceConversion {
  RaceProfile profile;
  /// Factor applied to g to keep the position strictly increasing (1 if none).
  double amplitude_scale = 1.0;
  bool rescaled() const { return amplitude_scale != 1.0; }
};

/// Inverse of to_chord_problem: p(t) = g(t L / (T d)) + (L / T) t. If the
/// steepest segment of g reaches slope d, g is first rescaled so that its
/// steepest slope is d / 2.
inline ChordRaceConversion from_chord_function(const PiecewiseLinearFunction& g, double L, double T, double d) {
  using detail::num;
  if (!(L > 0.0) || !(T > 0.0) || !(d > 0.0)) throw DomainError("L, T and d must be positive");
  const double lambda = L / d;
  if (std::abs(g.x_min()) > kTolerance || std::abs(g.x_max() - lambda) > kTolerance * std::max(1.0, lambda))
    throw DomainError("chord function domain [" + num(g.x_min()) + ", " + num(g.x_max()) + "] does not match [0, L/d = " +
                      num(lambda) + "]");
  const auto& gp = g.breakpoints();
  if (std::abs(gp.front().y) > kTolerance || std::abs(gp.back().y) > kTolerance)
    throw DomainError("chord function must vanish at both endpoints");

  double scale = 1.0;
  const double steepest = g.max_abs_slope();
  if (steepest >= d) scale = 0.5 * d / steepest;

  const double time_scale = T * d / L;
  std::vector<Point> pts;
  pts.reserve(gp.size());
  for (std::size_t i = 0; i < gp.size(); ++i) {
    if (i == 0) pts.push_back({0.0, 0.0});
    else if (i + 1 == gp.size()) pts.push_back({T, L});
    else pts.push_back({gp[i].x * time_scale, scale * gp[i].y + d * gp[i].x});
  }
  return {RaceProfile(PiecewiseLinearFunction(std::move(pts))), scale};
}

/// A profile for an L-unit race in time T with no d-unit window run at the
/// average pace. Requires L / d > 1 and not a whole number.
inline RaceProfile build_adversarial_profile(double L, double T, double d) {
  using detail::num;
  if (!(L > 0.0) || !(T > 0.0) || !(d > 0.0)) throw DomainError("L, T and d must be positive");
  const double ratio = L / d;
  if (ratio <= 1.0 + kTolerance) throw DomainError("need L/d > 1, got " + num(ratio));
  if (detail::is_whole_ratio(ratio))
    throw DomainError("L/d = " + num(std::round(ratio)) +
                      " is a whole number: some window must be covered at exactly the average pace");

  const PiecewiseLinearFunction saw = build_levy(ratio, 1.0).to_piecewise_linear();
  const PiecewiseLinearFunction g = saw.scaled(0.5 * d / saw.max_abs_slope());
  RaceProfile profile = from_chord_function(g, L, T, d).profile;
  if (!profile.position().strictly_increasing() || exists_average_split(profile, d).exists)
    throw std::logic_error("adversarial profile failed verification for L/d = " + num(ratio) +
                           " (ratio too close to a whole number?)");
  return profile;
}

/// Parses "ss", "mm:ss" or "h:mm:ss" (fractional seconds allowed) into seconds.
inline double parse_duration(std::string_view text) {
  auto fail = [&]() -> double { throw ValidationError("bad duration '" + std::string(text) + "'"); };
  double total = 0.0;
  int fields = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    const std::string field(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (field.empty()) return fail();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != field.size() || v < 0.0 || !std::isfinite(v)) return fail();
    if (fields > 0 && v >= 60.0) return fail();
    total = total * 60.0 + v;
    ++fields;
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (fields > 3) return fail();
  return total;
}

/// Formats seconds as m:ss or h:mm:ss, rounded to the nearest second.
inline std::string format_duration(double seconds) {
  const long total = std::lround(seconds);
  const long h = total / 3600;
  const long m = (total / 60) % 60;
  const long s = total % 60;
  char buf[32];
  if (h > 0) std::snprintf(buf, sizeof buf, "%ld:%02ld:%02ld", h, m, s);
  else std::snprintf(buf, sizeof buf, "%ld:%02ld", m, s);
  return buf;
}

}  // namespace chordset
