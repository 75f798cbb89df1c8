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

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordset/common.hpp"

namespace chordset {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A continuous function given by breakpoints with strictly increasing x and
/// linear interpolation in between. A single breakpoint describes a function
/// on a one-point domain.
class PiecewiseLinearFunction {
 public:
  explicit PiecewiseLinearFunction(std::vector<Point> breakpoints) : pts_(std::move(breakpoints)) {
    if (pts_.empty()) throw ValidationError("piecewise-linear function needs at least one breakpoint");
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (!std::isfinite(pts_[i].x) || !std::isfinite(pts_[i].y))
        throw ValidationError("breakpoint " + std::to_string(i) + " is not finite");
      if (i > 0 && !(pts_[i].x > pts_[i - 1].x))
        throw ValidationError("breakpoint x-coordinates must strictly increase (index " + std::to_string(i) +
                              ": " + detail::num(pts_[i - 1].x) + " then " + detail::num(pts_[i].x) + ")");
    }
  }

  const std::vector<Point>& breakpoints() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  double x_min() const { return pts_.front().x; }
  double x_max() const { return pts_.back().x; }
  double width() const { return x_max() - x_min(); }

  /// Evaluates f(x). Arguments within kTolerance outside the domain are clamped.
  double operator()(double x) const {
    if (x < x_min()) {
      if (x_min() - x > kTolerance) throw out_of_domain(x);
      return pts_.front().y;
    }
    if (x > x_max()) {
      if (x - x_max() > kTolerance) throw out_of_domain(x);
      return pts_.back().y;
    }
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x, [](double v, const Point& p) { return v < p.x; });
    if (it == pts_.end()) return pts_.back().y;
    const Point& hi = *it;
    const Point& lo = *std::prev(it);
    const double t = (x - lo.x) / (hi.x - lo.x);
    return lo.y + t * (hi.y - lo.y);
  }

  double slope(std::size_t segment) const {
    return (pts_[segment + 1].y - pts_[segment].y) / (pts_[segment + 1].x - pts_[segment].x);
  }

  double max_abs_slope() const {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) best = std::max(best, std::abs(slope(i)));
    return best;
  }

  double min_slope() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) best = std::min(best, slope(i));
    return best;
  }

  bool strictly_increasing() const { return pts_.size() < 2 || min_slope() > 0.0; }

  /// Inverse function of a strictly increasing PL function.
  PiecewiseLinearFunction inverse() const {
    if (!strictly_increasing()) throw PreconditionError("inverse requires a strictly increasing function");
    std::vector<Point> inv;
    inv.reserve(pts_.size());
    for (const Point& p : pts_) inv.push_back({p.y, p.x});
    return PiecewiseLinearFunction(std::move(inv));
  }

  /// Returns c * f.
  PiecewiseLinearFunction scaled(double c) const {
    std::vector<Point> out = pts_;
    for (Point& p : out) p.y *= c;
    return PiecewiseLinearFunction(std::move(out));
  }

  friend bool operator==(const PiecewiseLinearFunction&, const PiecewiseLinearFunction&) = default;

 private:
  DomainError out_of_domain(double x) const {
    return DomainError("x = " + detail::num(x) + " lies outside [" + detail::num(x_min()) + ", " +
                       detail::num(x_max()) + "]");
  }

  std::vector<Point> pts_;
};

/// Samples an arbitrary function at `count` equally spaced points of [lo, hi].
template <class F>
PiecewiseLinearFunction sample_function(F&& f, double lo, double hi, std::size_t count) {
  if (count < 2 || !(hi > lo)) throw DomainError("sampling needs at least two points on a nonempty interval");
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    pts.push_back({x, f(x)});
  }
  return PiecewiseLinearFunction(std::move(pts));
}

}  // namespace chordset
