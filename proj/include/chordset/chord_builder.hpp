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

// Functions with a prescribed horizontal chord set.
//
// Given an admissible chord set S (closed, with S* = (0, inf) \ S open and
// additive), the signed distance to the boundary
//
//   h_S(x) = +d(x, dS) on Int S,  -d(x, dS) on S*,  0 on dS
//
// has chord set exactly S. Replacing d(x, dS) = min(alpha, beta) by any
// F(alpha, beta) that vanishes when either argument does and is strictly
// increasing in both arguments jointly keeps that property; F = phi(alpha *
// beta) with a flat phi gives a C-infinity function.
//
// The periodic construction f(x) = phi(x) - (x / Lambda) phi(Lambda), with phi
// of period h and phi(0) = 0, has no chord of length h whenever phi(Lambda) is
// nonzero.

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <type_traits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "chordset/common.hpp"
#include "chordset/interval_set.hpp"
#include "chordset/piecewise_linear.hpp"

namespace chordset {

namespace detail {

inline void require_chord_spec(const ClosedIntervalSet& set) {
  ValidationReport report = validate_chord_spec(set);
  if (report.ok()) return;
  for (const CheckResult& c : report.checks)
    if (c.status == CheckStatus::failed)
      throw ValidationError("not an admissible chord set: " + c.name + " failed" +
                            (c.detail.empty() ? std::string() : " (" + c.detail + ")"));
}

}  // namespace detail

/// Hopf's signed-distance function h_S as an exact piecewise-linear function
/// on [0, L]. Breakpoints are the boundary points of S and the midpoints of
/// the components of S and S* in [0, L].
inline PiecewiseLinearFunction build_hopf(const ClosedIntervalSet& set) {
  detail::require_chord_spec(set);
  const auto& ivs = set.intervals();
  std::vector<Point> pts;
  pts.reserve(4 * ivs.size());
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const Interval& iv = ivs[i];
    pts.push_back({iv.lo, 0.0});
    if (!iv.degenerate()) {
      pts.push_back({0.5 * (iv.lo + iv.hi), 0.5 * iv.length()});
      pts.push_back({iv.hi, 0.0});
    }
    if (i + 1 < ivs.size()) {
      const double gap = ivs[i + 1].lo - iv.hi;
      pts.push_back({0.5 * (iv.hi + ivs[i + 1].lo), -0.5 * gap});
    }
  }
  return PiecewiseLinearFunction(std::move(pts));
}

enum class PhiKind { exp_flat, sin_squared, triangle_wave };

/// The profile function phi used by the smooth and periodic constructions.
struct SmoothShapeSpec {
  PhiKind kind = PhiKind::exp_flat;
  double period = 1.0;
  double amplitude = 1.0;

  static SmoothShapeSpec exp_flat(double amplitude = 1.0) { return {PhiKind::exp_flat, 1.0, amplitude}; }
  static SmoothShapeSpec sin_squared(double period, double amplitude = 1.0) {
    return {PhiKind::sin_squared, period, amplitude};
  }
  static SmoothShapeSpec triangle_wave(double period, double amplitude = 1.0) {
    return {PhiKind::triangle_wave, period, amplitude};
  }

  bool periodic() const { return kind != PhiKind::exp_flat; }

  void validate() const {
    if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DomainError("shape amplitude must be positive");
    if (periodic() && (!(period > 0.0) || !std::isfinite(period))) throw DomainError("shape period must be positive");
  }

  double operator()(double u) const {
    switch (kind) {
      case PhiKind::exp_flat:
        return u > 0.0 ? amplitude * std::exp(-1.0 / u) : 0.0;
      case PhiKind::sin_squared: {
        const double s = std::sin(std::numbers::pi * u / period);
        return amplitude * s * s;
      }
      case PhiKind::triangle_wave: {
        const double t = u / period;
        const double frac = t - std::floor(t);
        return amplitude * 2.0 * std::min(frac, 1.0 - frac);
      }
    }
    return 0.0;
  }
};

inline const char* to_string(PhiKind kind) {
  switch (kind) {
    case PhiKind::exp_flat: return "exp_flat";
    case PhiKind::sin_squared: return "sin_squared";
    case PhiKind::triangle_wave: return "triangle_wave";
  }
  return "?";
}

template <class F>
concept ShapeFunction = std::regular_invocable<const F&, double, double> &&
                        std::convertible_to<std::invoke_result_t<const F&, double, double>, double>;

/// Spot-checks that F vanishes on the axes and is strictly increasing when
/// both arguments grow, on a 5x5 grid spanning [0, scale]^2. Throws
/// DomainError with the offending grid values.
template <ShapeFunction F>
void check_shape_function(const F& shape, double scale) {
  using detail::num;
  double grid[5];
  for (int i = 0; i < 5; ++i) grid[i] = scale * i / 4.0;
  for (double v : grid) {
    const double fa = shape(0.0, v);
    const double fb = shape(v, 0.0);
    if (std::abs(fa) > kTolerance || std::abs(fb) > kTolerance)
      throw DomainError("shape function must vanish when alpha or beta is 0 (at " + num(v) + ")");
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int i2 = i + 1; i2 < 5; ++i2)
        for (int j2 = j + 1; j2 < 5; ++j2)
          if (!(shape(grid[i2], grid[j2]) > shape(grid[i], grid[j])))
            throw DomainError("shape function is not strictly increasing: F(" + num(grid[i2]) + ", " +
                              num(grid[j2]) + ") <= F(" + num(grid[i]) + ", " + num(grid[j]) + ")");
}

/// x -> +F(alpha, beta) on Int S, -F(alpha, beta) on S*, 0 on the boundary.
template <ShapeFunction F>
class GeneralizedChordFunction {
 public:
  GeneralizedChordFunction(ClosedIntervalSet set, F shape, bool spot_check = true)
      : set_(std::move(set)), shape_(std::move(shape)) {
    if (spot_check) {
      double scale = set_.max_interval_length();
      for (const OpenInterval& g : complement_components(set_).gaps) scale = std::max(scale, g.length());
      check_shape_function(shape_, scale > 0.0 ? scale : 1.0);
    }
  }

  const ClosedIntervalSet& set() const { return set_; }

  double operator()(double x) const {
    const BoundaryProjection p = boundary_projections(set_, x);
    switch (set_.classify(x)) {
      case Region::boundary: return 0.0;
      case Region::interior: return shape_(p.alpha, p.beta);
      case Region::complement: return -shape_(p.alpha, p.beta);
    }
    return 0.0;
  }

 private:
  ClosedIntervalSet set_;
  F shape_;
};

template <ShapeFunction F>
double eval_generalized(const ClosedIntervalSet& set, const F& shape, double x) {
  return GeneralizedChordFunction<F>(set, shape)(x);
}

/// F(alpha, beta) = phi(alpha * beta) for a flat phi.
struct ProductShape {
  SmoothShapeSpec phi = SmoothShapeSpec::exp_flat();
  double operator()(double alpha, double beta) const { return phi(alpha * beta); }
};

/// The C-infinity variant of h_S. Validates the chord set once on construction.
class SmoothChordFunction {
 public:
  explicit SmoothChordFunction(const ClosedIntervalSet& set, SmoothShapeSpec phi = SmoothShapeSpec::exp_flat())
      : impl_((detail::require_chord_spec(set), set), ProductShape{phi}, false) {
    if (phi.kind != PhiKind::exp_flat) throw DomainError("smooth construction needs a flat, increasing phi");
    phi.validate();
  }

  double operator()(double x) const { return impl_(x); }
  const ClosedIntervalSet& set() const { return impl_.set(); }

  /// Dense samples for export; the result is only an approximation of the
  /// smooth function.
  PiecewiseLinearFunction sample(std::size_t count) const {
    return sample_function(*this, 0.0, set().sup(), count);
  }

 private:
  GeneralizedChordFunction<ProductShape> impl_;
};

inline double eval_smooth(const ClosedIntervalSet& set, double x) { return SmoothChordFunction(set)(x); }

/// f(x) = phi(x) - (x / Lambda) phi(Lambda) on [0, Lambda].
class LevyFunction {
 public:
  LevyFunction(double lambda, double h, SmoothShapeSpec shape)
      : lambda_(lambda), h_(h), shape_(shape) {
    using detail::num;
    if (!(h > 0.0) || !(lambda > h) || !std::isfinite(lambda))
      throw DomainError("need Lambda > h > 0, got Lambda = " + num(lambda) + ", h = " + num(h));
    shape_.validate();
    if (!shape_.periodic()) throw DomainError("the periodic construction needs a periodic phi");
    if (std::abs(shape_.period - h) > kTolerance * std::max(1.0, h))
      throw DomainError("phi must have period h = " + num(h) + ", got " + num(shape_.period));
    const double ratio = lambda / h;
    const double m = std::round(ratio);
    phi_lambda_ = shape_(lambda);
    if (std::abs(ratio - m) <= kTolerance * ratio || std::abs(phi_lambda_) <= kTolerance)
      throw DomainError("chord of length h unavoidable (h = Λ/" + num(m) + ")");
  }

  double lambda() const { return lambda_; }
  double h() const { return h_; }
  const SmoothShapeSpec& shape() const { return shape_; }
  double phi_at_lambda() const { return phi_lambda_; }

  /// The constant value of f(x + h) - f(x).
  double increment() const { return -(h_ / lambda_) * phi_lambda_; }

  double operator()(double x) const {
    if (x < -kTolerance || x > lambda_ + kTolerance)
      throw DomainError("x = " + detail::num(x) + " lies outside [0, " + detail::num(lambda_) + "]");
    return shape_(x) - (x / lambda_) * phi_lambda_;
  }

  bool is_piecewise_linear() const { return shape_.kind == PhiKind::triangle_wave; }

  /// Exact breakpoint form; only available for the triangle wave.
  PiecewiseLinearFunction to_piecewise_linear() const {
    if (!is_piecewise_linear()) throw PreconditionError("only the triangle-wave construction is piecewise linear");
    std::vector<Point> pts;
    const double half = 0.5 * h_;
    for (long k = 0;; ++k) {
      const double x = k * half;
      if (x >= lambda_ - kTolerance) break;
      const double phi = (k % 2 == 1) ? shape_.amplitude : 0.0;
      pts.push_back({x, phi - (x / lambda_) * phi_lambda_});
    }
    pts.push_back({lambda_, 0.0});
    return PiecewiseLinearFunction(std::move(pts));
  }

  PiecewiseLinearFunction sample(std::size_t count) const { return sample_function(*this, 0.0, lambda_, count); }

 private:
  double lambda_;
  double h_;
  SmoothShapeSpec shape_;
  double phi_lambda_ = 0.0;
};

inline LevyFunction build_levy(double lambda, double h, SmoothShapeSpec shape) { return {lambda, h, shape}; }

/// Triangle-wave default: the output stays piecewise linear.
inline LevyFunction build_levy(double lambda, double h) {
  return {lambda, h, SmoothShapeSpec::triangle_wave(h)};
}

}  // namespace chordset
