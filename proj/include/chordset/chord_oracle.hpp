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

// Exact horizontal-chord queries for piecewise-linear functions.
//
// For a chord length s, the difference g(x) = f(x + s) - f(x) on
// [x_min, x_max - s] is itself piecewise linear, with vertices among the
// breakpoints of f and the breakpoints of f shifted left by s. A chord of
// length s exists iff g has a zero, which is decided from the vertex values
// alone.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "chordset/common.hpp"
#include "chordset/piecewise_linear.hpp"

namespace chordset {

struct ChordQueryResult {
  bool exists = false;
  /// Leftmost x with f(x + s) = f(x), when a chord exists.
  std::optional<double> witness_x;
};

inline ChordQueryResult has_horizontal_chord(const PiecewiseLinearFunction& f, double s,
                                             double tol = kTolerance) {
  const double width = f.width();
  if (!(s >= -tol) || !(s <= width + tol))
    throw DomainError("chord length " + detail::num(s) + " lies outside [0, " + detail::num(width) + "]");
  s = std::clamp(s, 0.0, width);
  if (s == 0.0) return {true, f.x_min()};

  const double start = f.x_min();
  const double stop = std::max(start, f.x_max() - s);
  std::vector<double> xs;
  xs.reserve(2 * f.size() + 2);
  xs.push_back(start);
  xs.push_back(stop);
  for (const Point& p : f.breakpoints()) {
    if (p.x > start && p.x < stop) xs.push_back(p.x);
    const double shifted = p.x - s;
    if (shifted > start && shifted < stop) xs.push_back(shifted);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const double end = f.x_max();
  auto g = [&](double x) { return f(std::min(x + s, end)) - f(x); };
  double prev_x = 0.0;
  double prev_g = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double gx = g(xs[i]);
    if (std::abs(gx) <= tol) return {true, xs[i]};
    if (i > 0 && (gx > 0.0) != (prev_g > 0.0)) {
      const double w = prev_g / (prev_g - gx);
      return {true, prev_x + w * (xs[i] - prev_x)};
    }
    prev_x = xs[i];
    prev_g = gx;
  }
  return {false, std::nullopt};
}

/// Closed bracket [lo, hi] around a point where chord-set membership flips.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Grid approximation of the chord set S(f).
struct ChordScan {
  double resolution = 0.0;
  std::vector<double> lengths;
  std::vector<bool> membership;
  std::vector<Bracket> refined_boundaries;

  /// Index of the grid length nearest to s.
  std::size_t nearest(double s) const {
    auto it = std::lower_bound(lengths.begin(), lengths.end(), s);
    if (it == lengths.end()) return lengths.size() - 1;
    if (it == lengths.begin()) return 0;
    const auto i = static_cast<std::size_t>(it - lengths.begin());
    return (s - lengths[i - 1] <= lengths[i] - s) ? i - 1 : i;
  }
};

/// Number of bisection steps used to refine each membership flip.
inline constexpr int kRefinementSteps = 10;

inline ChordScan chord_set_scan(const PiecewiseLinearFunction& f, double resolution, double tol = kTolerance) {
  if (!(resolution > 0.0)) throw DomainError("resolution must be positive");
  const double width = f.width();
  ChordScan scan;
  scan.resolution = resolution;
  const auto steps = static_cast<std::size_t>(std::floor(width / resolution + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) scan.lengths.push_back(std::min(width, k * resolution));
  if (width - scan.lengths.back() > tol) scan.lengths.push_back(width);
  else scan.lengths.back() = width;

  auto member = [&](double s) { return has_horizontal_chord(f, s, tol).exists; };
  scan.membership.reserve(scan.lengths.size());
  for (double s : scan.lengths) scan.membership.push_back(member(s));

  for (std::size_t k = 0; k + 1 < scan.lengths.size(); ++k) {
    if (scan.membership[k] == scan.membership[k + 1]) continue;
    double lo = scan.lengths[k];
    double hi = scan.lengths[k + 1];
    for (int step = 0; step < kRefinementSteps; ++step) {
      const double mid = 0.5 * (lo + hi);
      if (member(mid) == scan.membership[k]) lo = mid;
      else hi = mid;
    }
    scan.refined_boundaries.push_back({lo, hi});
  }
  return scan;
}

struct AdditivityViolation {
  double a = 0.0;
  double b = 0.0;
};

struct ComplementAdditivity {
  bool holds = true;
  std::vector<AdditivityViolation> violations;
};

/// Empirical check that the complement of S(f) is additive: for grid lengths
/// a, b outside the chord set, the grid length nearest a + b must also be
/// outside it. Sums landing within one resolution step of a membership flip
/// are skipped.
inline ComplementAdditivity verify_complement_additivity(const PiecewiseLinearFunction& f, double resolution,
                                                         double tol = kTolerance) {
  const ChordScan scan = chord_set_scan(f, resolution, tol);
  const double width = f.width();
  auto near_flip = [&](double s) {
    for (const Bracket& b : scan.refined_boundaries)
      if (s >= b.lo - resolution && s <= b.hi + resolution) return true;
    return false;
  };
  ComplementAdditivity out;
  const std::size_t n = scan.lengths.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (scan.membership[i]) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (scan.membership[j]) continue;
      const double sum = scan.lengths[i] + scan.lengths[j];
      if (sum > width + tol) break;
      if (near_flip(sum)) continue;
      if (scan.membership[scan.nearest(sum)]) {
        out.holds = false;
        out.violations.push_back({scan.lengths[i], scan.lengths[j]});
      }
    }
  }
  return out;
}

namespace detail {

inline void require_zero_endpoints(const PiecewiseLinearFunction& f, double tol) {
  const auto& pts = f.breakpoints();
  if (std::abs(pts.front().y) > tol || std::abs(pts.back().y) > tol)
    throw PreconditionError("sign counting needs f = 0 at both endpoints, got " + num(pts.front().y) + " and " +
                            num(pts.back().y));
}

}  // namespace detail

/// Number of sign changes of f across its vertices; zeros are skipped.
inline int sign_changes(const PiecewiseLinearFunction& f, double tol = kTolerance) {
  detail::require_zero_endpoints(f, tol);
  int changes = 0;
  int last = 0;
  for (const Point& p : f.breakpoints()) {
    const int s = detail::sign_of(p.y, tol);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Every length in [0, levit_bound(f)] is a chord length of f.
inline double levit_bound(const PiecewiseLinearFunction& f, double tol = kTolerance) {
  const int n = sign_changes(f, tol);
  return f.width() / static_cast<double>((n + 3) / 2);
}

}  // namespace chordset
