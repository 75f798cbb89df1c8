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

#include <gtest/gtest.h>

#include "chordset/race.hpp"
#include "support/corpus.hpp"

namespace chordset {
namespace {

using testing::half_marathon;
using testing::Rng;
using testing::splits_330_390_360;

TEST(AveragePace, RecordArithmetic) {
  EXPECT_NEAR(average_pace(testing::constant_speed(21.1, parse_duration("65:50"))), 187.2037914691943, 1e-9);
  EXPECT_EQ(format_duration(average_pace(testing::constant_speed(21.1, 3950.0))), "3:07");
  EXPECT_NEAR(average_pace(testing::constant_speed(12.0, parse_duration("37:49"))), 189.08333333333334, 1e-9);
  EXPECT_EQ(format_duration(189.08333333333334), "3:09");
  EXPECT_EQ(average_pace(testing::constant_speed(3.0, 1080.0)), 360.0);
  EXPECT_EQ(format_duration(360.0), "6:00");
}

TEST(Durations, ParseAndFormat) {
  EXPECT_EQ(parse_duration("65:50"), 3950.0);
  EXPECT_EQ(parse_duration("37:49"), 2269.0);
  EXPECT_EQ(parse_duration("1:05:50"), 3950.0);
  EXPECT_EQ(parse_duration("540"), 540.0);
  EXPECT_EQ(parse_duration("9:00.5"), 540.5);
  EXPECT_THROW(parse_duration("9:60"), ValidationError);
  EXPECT_THROW(parse_duration("abc"), ValidationError);
  EXPECT_THROW(parse_duration("1::2"), ValidationError);
  EXPECT_THROW(parse_duration("1:2:3:4"), ValidationError);
  EXPECT_EQ(format_duration(3950.0), "1:05:50");
  EXPECT_EQ(format_duration(2330.0), "38:50");
}

TEST(RaceProfile, Validation) {
  EXPECT_THROW(RaceProfile::from_splits(std::vector<Split>{}), ValidationError);
  EXPECT_THROW(RaceProfile::from_splits(std::vector<Split>{{1.0, 10.0}, {1.0, 20.0}}), ValidationError);
  EXPECT_THROW(RaceProfile::from_splits(std::vector<Split>{{1.0, 10.0}, {2.0, 10.0}}), ValidationError);
  EXPECT_THROW(RaceProfile(PiecewiseLinearFunction({{0.0, 0.0}, {1.0, 1.0}, {2.0, 1.0}})), ValidationError);
  EXPECT_THROW(RaceProfile(PiecewiseLinearFunction({{0.0, 0.5}, {1.0, 1.0}})), ValidationError);
}

TEST(WindowTimeExtrema, HalfMarathon) {
  const WindowTimes w = window_time_extrema(half_marathon(), 12.0);
  EXPECT_NEAR(w.min_time, 2330.0, 1e-9);
  EXPECT_NEAR(w.max_time, 2330.0, 1e-9);
}

TEST(WindowTimeExtrema, ConstantSpeed) {
  const RaceProfile p = testing::constant_speed(10.0, 2400.0);
  for (double d : {0.5, 1.0, 3.3, 10.0}) {
    const WindowTimes w = window_time_extrema(p, d);
    EXPECT_NEAR(w.min_time, 240.0 * d, 1e-9);
    EXPECT_NEAR(w.max_time, 240.0 * d, 1e-9);
  }
}

TEST(WindowTimeExtrema, UnevenMiles) {
  const WindowTimes w = window_time_extrema(splits_330_390_360(), 1.0);
  EXPECT_NEAR(w.min_time, 330.0, 1e-9);
  EXPECT_NEAR(w.max_time, 390.0, 1e-9);
}

TEST(WindowTimeExtrema, MatchesDenseScan) {
  Rng rng(71);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double L = 2.0 + 10.0 * unit(rng);
    const double T = 300.0 * L * (0.8 + 0.4 * unit(rng));
    const RaceProfile p = testing::random_profile(rng, L, T, 2 + trial % 6);
    const double d = L * (0.1 + 0.85 * unit(rng));
    const WindowTimes w = window_time_extrema(p, d);
    const PiecewiseLinearFunction time_at = p.position().inverse();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i <= 20000; ++i) {
      const double u = (L - d) * i / 20000.0;
      const double e = time_at(std::min(u + d, L)) - time_at(u);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    EXPECT_LE(w.min_time, lo + 1e-9);
    EXPECT_GE(w.max_time, hi - 1e-9);
    EXPECT_NEAR(w.min_time, lo, 1e-3 * T);
    EXPECT_NEAR(w.max_time, hi, 1e-3 * T);
  }
}

TEST(WindowTimeExtrema, WholeWindowsBracketAverage) {
  Rng rng(72);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> n_dist(1, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const double L = 2.0 + 10.0 * unit(rng);
    const double T = 300.0 * L * (0.8 + 0.4 * unit(rng));
    const RaceProfile p = testing::random_profile(rng, L, T, 2 + trial % 6);
    const double d = L / n_dist(rng);
    const WindowTimes w = window_time_extrema(p, d);
    EXPECT_LE(w.min_time, T * d / L + 1e-9 * T);
    EXPECT_GE(w.max_time, T * d / L - 1e-9 * T);
  }
}

TEST(WindowTimeExtrema, FractionalWindowsNeedNotBracketAverage) {
  // Every 12 km window of this profile is slower than the average pace.
  const WindowTimes w = window_time_extrema(half_marathon(), 12.0);
  EXPECT_GT(w.min_time, 47400.0 / 21.1);
}

TEST(WindowTimeExtrema, DomainError) {
  EXPECT_THROW(window_time_extrema(half_marathon(), 22.0), DomainError);
  EXPECT_THROW(window_time_extrema(half_marathon(), 0.0), DomainError);
}

TEST(ExistsAverageSplit, HalfMarathonHasNone) {
  EXPECT_NEAR(47400.0 / 21.1, 2246.445497630332, 1e-9);
  EXPECT_FALSE(exists_average_split(half_marathon(), 12.0).exists);
}

TEST(ExistsAverageSplit, ConstantSpeed) {
  const ChordQueryResult r = exists_average_split(testing::constant_speed(5.0, 1500.0), 1.7);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(*r.witness_x, 0.0);
}

TEST(ExistsAverageSplit, UnevenMiles) {
  const ChordQueryResult r = exists_average_split(splits_330_390_360(), 1.0);
  ASSERT_TRUE(r.exists);
  EXPECT_NEAR(*r.witness_x, 165.0, 1e-9);
}

TEST(ExistsAverageSplit, WholeRace) {
  EXPECT_TRUE(exists_average_split(half_marathon(), 21.1).exists);
}

TEST(FindAverageSplit, UnevenMiles) { EXPECT_NEAR(find_average_split(splits_330_390_360(), 1.0), 165.0, 1e-6); }

TEST(FindAverageSplit, ConstantSpeed) {
  EXPECT_EQ(find_average_split(testing::constant_speed(3.0, 1080.0), 1.0), 0.0);
}

TEST(FindAverageSplit, TwoMiles) {
  const std::vector<Split> splits{{1.0, 300.0}, {2.0, 720.0}};
  EXPECT_NEAR(find_average_split(RaceProfile::from_splits(splits), 1.0), 150.0, 1e-6);
}

TEST(FindAverageSplit, NonIntegerRatio) {
  EXPECT_THROW(find_average_split(half_marathon(), 12.0), PreconditionError);
}

TEST(FindAverageSplit, RandomProfilesProperty) {
  Rng rng(73);
  std::uniform_int_distribution<int> n_dist(1, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng);
    const double d = 0.5 + 2.0 * unit(rng);
    const double L = n * d;
    const double T = 300.0 * L * (0.5 + unit(rng));
    const RaceProfile p = testing::random_profile(rng, L, T, 2 + trial % 9);
    const double t = find_average_split(p, d);
    ASSERT_GE(t, 0.0);
    ASSERT_LE(t, T - T / n + 1e-9);
    EXPECT_NEAR(testing::covered(p.splits(), t, T / n), d, 1e-9 * d);
  }
}

TEST(ToChordProblem, ConstantSpeedIsFlat) {
  const PiecewiseLinearFunction g = to_chord_problem(testing::constant_speed(4.0, 1000.0), 1.0);
  EXPECT_EQ(g.x_max(), 4.0);
  for (const Point& p : g.breakpoints()) EXPECT_NEAR(p.y, 0.0, 1e-12);
}

TEST(ToChordProblem, HalfMarathonHasNoUnitChord) {
  const PiecewiseLinearFunction g = to_chord_problem(half_marathon(), 12.0);
  EXPECT_NEAR(g.x_max(), 21.1 / 12.0, 1e-15);
  EXPECT_EQ(g.breakpoints().back().y, 0.0);
  EXPECT_FALSE(has_horizontal_chord(g, 1.0).exists);
}

TEST(ToChordProblem, UnitChordMatchesWindow) {
  const PiecewiseLinearFunction g = to_chord_problem(splits_330_390_360(), 1.0);
  const ChordQueryResult r = has_horizontal_chord(g, 1.0);
  ASSERT_TRUE(r.exists);
  EXPECT_NEAR(*r.witness_x, 165.0 / 360.0, 1e-12);
}

TEST(FromChordFunction, FlatIsConstantSpeed) {
  const PiecewiseLinearFunction g({{0.0, 0.0}, {1.0, 0.0}, {2.5, 0.0}});
  const ChordRaceConversion c = from_chord_function(g, 2.5, 900.0, 1.0);
  EXPECT_FALSE(c.rescaled());
  EXPECT_NEAR(c.profile.position()(450.0), 1.25, 1e-12);
  EXPECT_NEAR(c.profile.position().min_slope(), 2.5 / 900.0, 1e-15);
}

TEST(FromChordFunction, HopfSawtoothRace) {
  const ClosedIntervalSet set = testing::tapering();
  const ChordRaceConversion c = from_chord_function(build_hopf(set), 4.4, 26.4 * 60.0, 1.0);
  EXPECT_TRUE(c.rescaled());
  EXPECT_NEAR(c.amplitude_scale, 0.5, 1e-12);
  EXPECT_TRUE(c.profile.position().strictly_increasing());
  EXPECT_DOUBLE_EQ(average_pace(c.profile), 360.0);
  EXPECT_FALSE(exists_average_split(c.profile, 1.0).exists);
}

TEST(FromChordFunction, LevyMileAndAHalf) {
  const PiecewiseLinearFunction g = build_levy(1.5, 1.0).to_piecewise_linear();
  const ChordRaceConversion c = from_chord_function(g, 1.5, 540.0, 1.0);
  EXPECT_TRUE(c.profile.position().strictly_increasing());
  EXPECT_DOUBLE_EQ(average_pace(c.profile), 360.0);
  EXPECT_FALSE(exists_average_split(c.profile, 1.0).exists);
}

TEST(FromChordFunction, DomainMismatch) {
  const PiecewiseLinearFunction g({{0.0, 0.0}, {2.0, 0.0}});
  EXPECT_THROW(from_chord_function(g, 3.0, 100.0, 1.0), DomainError);
  EXPECT_THROW(from_chord_function(PiecewiseLinearFunction({{0.0, 0.0}, {3.0, 0.1}}), 3.0, 100.0, 1.0),
               DomainError);
}

TEST(FromChordFunction, RoundTripProperty) {
  // Speeds within a factor 1.9 of each other keep |g'| < d, so no rescale.
  Rng rng(79);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double L = 1.5 + 8.0 * unit(rng);
    const double T = 300.0 * L;
    const RaceProfile p = testing::random_profile(rng, L, T, 2 + trial % 7, 1.9);
    const double d = L * (0.1 + 0.9 * unit(rng));
    const PiecewiseLinearFunction g = to_chord_problem(p, d);
    const ChordRaceConversion c = from_chord_function(g, L, T, d);
    if (c.rescaled()) continue;
    const auto& a = p.position().breakpoints();
    const auto& b = c.profile.position().breakpoints();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(a[i].x, b[i].x, 1e-9 * T);
      EXPECT_NEAR(a[i].y, b[i].y, 1e-9);
    }
  }
}

TEST(BuildAdversarialProfile, FiveK) {
  const RaceProfile p = build_adversarial_profile(3.1, 1116.0, 1.0);
  EXPECT_DOUBLE_EQ(p.total_distance(), 3.1);
  EXPECT_DOUBLE_EQ(p.total_time(), 1116.0);
  EXPECT_NEAR(average_pace(p), 360.0, 1e-9);
  EXPECT_GT(p.min_speed(), 0.0);
  EXPECT_FALSE(exists_average_split(p, 1.0).exists);
  // Slowest speed is half the average: the sawtooth is scaled to slope d/2.
  EXPECT_NEAR(p.min_speed(), 0.5 * 3.1 / 1116.0, 1e-12);
}

TEST(BuildAdversarialProfile, HalfMarathon) {
  const RaceProfile p = build_adversarial_profile(21.1, 3950.0, 12.0);
  EXPECT_FALSE(exists_average_split(p, 12.0).exists);
  const WindowTimes w = window_time_extrema(p, 12.0);
  EXPECT_TRUE(w.min_time > 47400.0 / 21.1 || w.max_time < 47400.0 / 21.1);
}

TEST(BuildAdversarialProfile, Errors) {
  EXPECT_THROW(build_adversarial_profile(3.0, 1080.0, 1.0), DomainError);
  EXPECT_THROW(build_adversarial_profile(0.8, 300.0, 1.0), DomainError);
  EXPECT_THROW(build_adversarial_profile(1.0, 300.0, 1.0), DomainError);
}

TEST(BuildAdversarialProfile, RandomProperty) {
  Rng rng(83);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> whole(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const double d = 0.2 + 5.0 * unit(rng);
    const double ratio = whole(rng) + 0.01 + 0.98 * unit(rng);
    const double L = ratio * d;
    const double T = L * (150.0 + 300.0 * unit(rng));
    const RaceProfile p = build_adversarial_profile(L, T, d);
    EXPECT_GT(p.min_speed(), 0.0);
    EXPECT_FALSE(exists_average_split(p, d).exists) << L << " " << d;
  }
}

}  // namespace
}  // namespace chordset
