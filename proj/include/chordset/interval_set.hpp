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

// Finite unions of disjoint closed intervals in [0, L], used as candidate
// horizontal chord sets S, together with their complements S* in (0, inf).

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordset/common.hpp"

namespace chordset {

/// Closed interval [lo, hi]. lo == hi encodes an isolated point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool degenerate() const { return hi == lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval (lo, hi).
struct OpenInterval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo < x && x < hi; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// The bounded components of [0, inf) \ S, plus the start of the unbounded
/// component (tail_start, inf).
struct GapList {
  std::vector<OpenInterval> gaps;
  double tail_start = 0.0;
};

/// Where a point falls relative to a chord set.
enum class Region { boundary, interior, complement };

/// Returns a description of the first structural defect of `intervals`, or
/// nullopt when they form a valid chord-set representation.
inline std::optional<std::string> structural_problem(std::span<const Interval> intervals,
                                                     double tol = kTolerance) {
  using detail::num;
  if (intervals.empty()) return "interval list is empty; a chord set always contains 0";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      return "interval " + std::to_string(i) + " has a non-finite endpoint";
    if (iv.lo > iv.hi)
      return "interval " + std::to_string(i) + " is reversed: [" + num(iv.lo) + ", " + num(iv.hi) + "]";
  }
  if (std::abs(intervals.front().lo) > tol)
    return "first interval must start at 0, got [" + num(intervals.front().lo) + ", " +
           num(intervals.front().hi) + "]";
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    const Interval& a = intervals[i];
    const Interval& b = intervals[i + 1];
    if (b.lo - a.hi <= tol) {
      const char* what = b.lo < a.lo ? "are unsorted" : (b.lo < a.hi - tol ? "overlap" : "touch and must be merged");
      return "intervals " + std::to_string(i) + " and " + std::to_string(i + 1) + " " + what + ": [" +
             num(a.lo) + ", " + num(a.hi) + "] and [" + num(b.lo) + ", " + num(b.hi) + "]";
    }
  }
  return std::nullopt;
}

/// A chord set S: a finite ordered union of disjoint closed intervals whose
/// first member starts at 0 and whose supremum L is attained.
class ClosedIntervalSet {
 public:
  /// Throws ValidationError naming the offending pair if the list is malformed.
  explicit ClosedIntervalSet(std::vector<Interval> intervals, double tol = kTolerance)
      : intervals_(std::move(intervals)), tol_(tol) {
    if (auto problem = structural_problem(intervals_, tol_)) throw ValidationError(*problem);
    intervals_.front().lo = 0.0;
    for (const Interval& iv : intervals_) {
      boundary_.push_back(iv.lo);
      if (!iv.degenerate()) boundary_.push_back(iv.hi);
    }
  }

  const std::vector<Interval>& intervals() const { return intervals_; }

  /// Sorted boundary points of S (as a subset of the real line).
  const std::vector<double>& boundary() const { return boundary_; }

  double tolerance() const { return tol_; }

  /// L = sup S = max S.
  double sup() const { return intervals_.back().hi; }

  /// True when S = {0}, i.e. S* = (0, inf).
  bool is_origin_only() const { return intervals_.size() == 1 && intervals_.front().hi == 0.0; }

  /// l = inf S*. Zero exactly when S = {0}.
  double complement_infimum() const { return intervals_.front().hi; }

  double max_interval_length() const {
    double best = 0.0;
    for (const Interval& iv : intervals_) best = std::max(best, iv.length());
    return best;
  }

  /// Classifies x >= 0. Points within the tolerance of a boundary point are
  /// reported as boundary.
  Region classify(double x) const {
    auto it = std::lower_bound(boundary_.begin(), boundary_.end(), x);
    if (it != boundary_.end() && *it - x <= tol_) return Region::boundary;
    if (it != boundary_.begin() && x - *std::prev(it) <= tol_) return Region::boundary;
    if (x < 0.0 || x > sup()) return Region::complement;
    // The last interval with lo <= x is the only one that can hold x.
    auto iv = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](double v, const Interval& i) { return v < i.lo; });
    if (iv == intervals_.begin()) return Region::complement;
    return x <= std::prev(iv)->hi ? Region::interior : Region::complement;
  }

  bool contains(double x) const { return classify(x) != Region::complement; }

  friend bool operator==(const ClosedIntervalSet& a, const ClosedIntervalSet& b) {
    return a.intervals_ == b.intervals_;
  }

 private:
  std::vector<Interval> intervals_;
  std::vector<double> boundary_;
  double tol_;
};

/// The components of [0, L] \ S together with the tail (L, inf).
inline GapList complement_components(const ClosedIntervalSet& set) {
  GapList out;
  const auto& ivs = set.intervals();
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) out.gaps.push_back({ivs[i].hi, ivs[i + 1].lo});
  out.tail_start = set.sup();
  return out;
}

/// Inverse of complement_components.
inline ClosedIntervalSet from_complement(const GapList& gaps, double tol = kTolerance) {
  std::vector<Interval> ivs;
  double lo = 0.0;
  for (const OpenInterval& g : gaps.gaps) {
    if (!(g.lo < g.hi)) throw ValidationError("empty gap (" + detail::num(g.lo) + ", " + detail::num(g.hi) + ")");
    ivs.push_back({lo, g.lo});
    lo = g.hi;
  }
  ivs.push_back({lo, gaps.tail_start});
  return ClosedIntervalSet(std::move(ivs), tol);
}

/// A pair a, b in S* with a + b in S.
struct AdditivityCounterexample {
  double a = 0.0;
  double b = 0.0;
  double sum() const { return a + b; }
};

struct AdditivityResult {
  bool additive = true;
  std::optional<AdditivityCounterexample> counterexample;
};

/// Decides whether S* is additive by checking that every pairwise Minkowski
/// sum of bounded gaps misses S. Pairs involving the tail always land in the
/// tail. The counterexample is taken at the midpoint of the first violating
/// overlap, split between the two gaps in proportion to their lengths.
inline AdditivityResult is_additive(const ClosedIntervalSet& set) {
  const double tol = set.tolerance();
  const GapList comp = complement_components(set);
  const auto& gaps = comp.gaps;
  const auto& ivs = set.intervals();
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    for (std::size_t k = j; k < gaps.size(); ++k) {
      const double lo = gaps[j].lo + gaps[k].lo;
      const double hi = gaps[j].hi + gaps[k].hi;
      if (lo >= set.sup() - tol) continue;
      for (const Interval& iv : ivs) {
        if (iv.lo >= hi - tol) break;
        if (iv.hi <= lo + tol) continue;
        const double mid = 0.5 * (std::max(iv.lo, lo) + std::min(iv.hi, hi));
        const double wj = gaps[j].length();
        const double wk = gaps[k].length();
        const double a = gaps[j].lo + (mid - lo) * wj / (wj + wk);
        return {false, AdditivityCounterexample{a, mid - a}};
      }
    }
  }
  return {};
}

/// Nearest boundary points around x and the distances to them.
struct BoundaryProjection {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

inline BoundaryProjection boundary_projections(const ClosedIntervalSet& set, double x) {
  const double tol = set.tolerance();
  if (!(x >= -tol && x <= set.sup() + tol))
    throw DomainError("x = " + detail::num(x) + " lies outside [0, " + detail::num(set.sup()) + "]");
  if (set.classify(x) == Region::boundary) return {x, x, 0.0, 0.0};
  const auto& bd = set.boundary();
  auto it = std::lower_bound(bd.begin(), bd.end(), x);
  // x is strictly inside (0, L) and off the boundary, so both neighbours exist.
  const double b = *it;
  const double a = *std::prev(it);
  return {a, b, x - a, b - x};
}

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::optional<double> witness;
  std::string detail;
};

/// Outcome of validating an untrusted chord-set description.
struct ValidationReport {
  std::vector<CheckResult> checks;
  std::optional<ClosedIntervalSet> set;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::passed; });
  }

  const CheckResult* find(std::string_view name) const {
    for (const CheckResult& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::string out;
    if (set) {
      const bool additive = find("additivity")->status == CheckStatus::passed;
      out += std::string("additive: ") + (additive ? "yes" : "no");
      if (set->is_origin_only())
        out += ", l = undefined (S* = (0, inf))";
      else
        out += ", l = " + detail::num(set->complement_infimum());
      out += "\n";
    }
    for (const CheckResult& c : checks) {
      out += "check " + c.name + ": ";
      out += c.status == CheckStatus::passed ? "pass" : c.status == CheckStatus::failed ? "FAIL" : "skipped";
      if (c.witness) out += " [witness " + detail::num(*c.witness) + "]";
      if (!c.detail.empty()) out += " (" + c.detail + ")";
      out += "\n";
    }
    out += std::string("result: ") + (ok() ? "valid chord set" : "not a chord set") + "\n";
    return out;
  }
};

namespace detail {

// Interior samples of every gap, plus a few tail points.
inline std::vector<double> complement_samples(const ClosedIntervalSet& set, int per_gap) {
  std::vector<double> out;
  for (const OpenInterval& g : complement_components(set).gaps)
    for (int k = 0; k < per_gap; ++k) out.push_back(g.lo + (k + 0.5) / per_gap * g.length());
  const double L = set.sup();
  const double base = L > 0.0 ? L : 1.0;
  for (double f : {0.25, 0.5, 1.0, 2.0}) out.push_back(L + f * base);
  return out;
}

}  // namespace detail

/// Runs every admissibility check on a chord set.
inline ValidationReport validate_chord_spec(const ClosedIntervalSet& set) {
  using detail::num;
  const double tol = set.tolerance();
  ValidationReport report;
  report.set = set;
  report.checks.push_back({"structure", CheckStatus::passed, std::nullopt, ""});

  const AdditivityResult add = is_additive(set);
  CheckResult additivity{"additivity", add.additive ? CheckStatus::passed : CheckStatus::failed, std::nullopt, ""};
  if (add.counterexample) {
    additivity.witness = add.counterexample->sum();
    additivity.detail = num(add.counterexample->a) + " + " + num(add.counterexample->b) + " lies in S";
  }
  report.checks.push_back(additivity);

  const double l = set.complement_infimum();
  CheckResult positive{"infimum_positive", CheckStatus::passed, l, ""};
  if (set.is_origin_only()) {
    positive.witness.reset();
    positive.detail = "S = {0}, S* = (0, inf)";
  } else if (!(l > tol)) {
    positive.status = CheckStatus::failed;
  } else {
    positive.detail = "l = " + num(l);
  }
  report.checks.push_back(positive);

  const double longest = set.max_interval_length();
  CheckResult bound{"interval_length_bound", CheckStatus::passed, std::nullopt,
                    "max interval length " + num(longest) + ", l = " + num(l)};
  if (!set.is_origin_only() && longest > l + tol) {
    bound.status = CheckStatus::failed;
    bound.witness = longest;
  }
  report.checks.push_back(bound);

  CheckResult shift{"boundary_shift", CheckStatus::passed, std::nullopt, ""};
  for (double s_star : detail::complement_samples(set, 8)) {
    for (double s : set.boundary()) {
      if (set.classify(s + s_star) != Region::complement) {
        shift.status = CheckStatus::failed;
        shift.witness = s + s_star;
        shift.detail = num(s) + " + " + num(s_star) + " is not in S*";
        break;
      }
    }
    if (shift.status == CheckStatus::failed) break;
  }
  report.checks.push_back(shift);
  return report;
}

/// Entry point for untrusted interval lists: structural failures are reported
/// rather than thrown.
inline ValidationReport validate_chord_spec(std::vector<Interval> intervals, double tol = kTolerance) {
  if (auto problem = structural_problem(intervals, tol)) {
    ValidationReport report;
    report.checks.push_back({"structure", CheckStatus::failed, std::nullopt, *problem});
    for (const char* name : {"additivity", "infimum_positive", "interval_length_bound", "boundary_shift"})
      report.checks.push_back({name, CheckStatus::skipped, std::nullopt, ""});
    return report;
  }
  return validate_chord_spec(ClosedIntervalSet(std::move(intervals), tol));
}

}  // namespace chordset
