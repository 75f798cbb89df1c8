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
#include <optional>

namespace chordset {

/// Bisection on a bracket [lo, hi] where f changes sign, run until the
/// bracket cannot be halved further; returns the point with the smallest |f|.
/// An endpoint within value_tol of zero is returned as is. Returns nullopt
/// when the endpoints do not bracket a root.
template <class F>
std::optional<double> bisect_root(F&& f, double lo, double hi, double value_tol, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (std::abs(flo) <= value_tol) return lo;
  if (std::abs(fhi) <= value_tol) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  double best = std::abs(flo) < std::abs(fhi) ? lo : hi;
  double best_val = std::min(std::abs(flo), std::abs(fhi));
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (std::abs(fm) < best_val) {
      best = mid;
      best_val = std::abs(fm);
    }
    if (fm == 0.0) break;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return best;
}

}  // namespace chordset
