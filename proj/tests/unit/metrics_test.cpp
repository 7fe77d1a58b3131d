#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "attract/metrics.hpp"
#include "quicksort_table.hpp"

namespace {

using namespace attract;
using attract::published::kQuicksortRows;
using attract::published::tally_of;

TEST(PublishedQuicksortTable, EveryPercentageIsReproduced) {
  ASSERT_EQ(std::size(kQuicksortRows), 41u);
  for (const auto& row : kQuicksortRows) {
    const PointStats s = point_stats(tally_of(row));
    ASSERT_TRUE(s.phi) << "point " << row.id;
    EXPECT_EQ(s.phi->truncated_percent(), row.percent) << "point " << row.id;
  }
}

TEST(PublishedQuicksortTable, Classes) {
  EXPECT_EQ(classify(tally_of(kQuicksortRows[2])), Classification::Antifragile);
  EXPECT_EQ(classify(tally_of(kQuicksortRows[35])), Classification::Fragile);
  EXPECT_EQ(classify(tally_of(kQuicksortRows[21])), Classification::Robust);
  EXPECT_EQ(classify(tally_of(kQuicksortRows[0])), Classification::Intermediate);
  // Point 22 prints as 2% and point 23 as 0%, but only the latter never succeeds.
  EXPECT_EQ(classify(tally_of(kQuicksortRows[22])), Classification::Intermediate);
  EXPECT_EQ(classify(tally_of(kQuicksortRows[23])), Classification::Fragile);
}

TEST(PublishedQuicksortTable, Aggregate) {
  std::vector<PointTally> tallies;
  for (const auto& row : kQuicksortRows) tallies.push_back(tally_of(row));
  const CampaignSummary s = aggregate(tallies);
  EXPECT_EQ(s.space_size, 151444u);
  EXPECT_EQ(s.omega, 117525u);
  EXPECT_EQ(s.correctness_ratio.fixed(4), "0.7760");
  EXPECT_EQ(s.correctness_ratio.truncated_percent(), 77u);
  EXPECT_EQ(s.count(Classification::Antifragile), 19u);
  EXPECT_EQ(s.count(Classification::Fragile), 3u);
  EXPECT_EQ(s.count(Classification::Robust), 8u);
  EXPECT_EQ(s.count(Classification::Intermediate), 11u);
  std::uint64_t binned = 0;
  for (auto n : s.profile) binned += n;
  EXPECT_EQ(binned, 41u);
  EXPECT_EQ(s.profile[kHistogramBins - 1], 19u + 3u);  // 100% and 99% rows
}

TEST(Ratio, FixedRendering) {
  EXPECT_EQ((Ratio{1, 1}).fixed(4), "1.0000");
  EXPECT_EQ((Ratio{0, 7}).fixed(4), "0.0000");
  EXPECT_EQ((Ratio{4945, 4950}).fixed(4), "0.9990");
  EXPECT_EQ((Ratio{1, 3}).fixed(4), "0.3333");
  EXPECT_EQ((Ratio{2, 3}).fixed(4), "0.6667");
  EXPECT_EQ((Ratio{1, 20000}).fixed(4), "0.0001");  // half rounds up
  EXPECT_EQ((Ratio{1, 8}).fixed(2), "0.13");
  EXPECT_EQ((Ratio{1, 2}).fixed(0), "1");
}

TEST(Ratio, EqualityIsByValue) {
  EXPECT_EQ((Ratio{1, 2}), (Ratio{2, 4}));
  EXPECT_NE((Ratio{1, 2}), (Ratio{2, 3}));
}

TEST(Classify, BandBoundaries) {
  auto make = [](std::uint64_t s, std::uint64_t n) {
    PointTally t;
    t.execs = n;
    t.success = s;
    t.exception = n - s;
    return t;
  };
  EXPECT_EQ(classify(make(3, 4)), Classification::Robust);
  EXPECT_EQ(classify(make(74, 100)), Classification::Intermediate);
  EXPECT_EQ(classify(make(1, 1000)), Classification::Intermediate);
  EXPECT_EQ(classify(make(0, 1)), Classification::Fragile);
  EXPECT_EQ(classify(make(5, 5)), Classification::Antifragile);
  EXPECT_EQ(classify(PointTally{}), Classification::Unexecuted);
  EXPECT_EQ(classify(0.75, 4), Classification::Robust);
  EXPECT_EQ(classify(0.0, 0), Classification::Unexecuted);
}

TEST(PointStats, UnexecutedHasNoRatios) {
  const PointStats s = point_stats(PointTally{});
  EXPECT_FALSE(s.phi);
  EXPECT_FALSE(s.chi);
  EXPECT_FALSE(s.xi);
  EXPECT_EQ(s.classification, Classification::Unexecuted);
}

TEST(PointStats, RejectsInconsistentTallies) {
  PointTally t;
  t.execs = 3;
  t.success = 1;
  EXPECT_THROW(point_stats(t), std::invalid_argument);
}

TEST(Aggregate, RejectsEmptyCampaigns) {
  EXPECT_THROW(aggregate({}), std::invalid_argument);
  std::vector<PointTally> none(3);
  EXPECT_THROW(aggregate(none), std::invalid_argument);
}

TEST(Histogram, Bins) {
  EXPECT_EQ(histogram_bin({0, 1}), 0u);
  EXPECT_EQ(histogram_bin({1, 20}), 1u);
  EXPECT_EQ(histogram_bin({99, 100}), 19u);
  EXPECT_EQ(histogram_bin({1, 1}), 19u);
  EXPECT_EQ(histogram_bin({1, 2}), 10u);
}

std::vector<PointTally> random_tallies(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> points(1, 60);
  std::uniform_int_distribution<std::uint64_t> count(0, 5000);
  std::uniform_int_distribution<int> shape(0, 5);
  std::vector<PointTally> out(static_cast<std::size_t>(points(rng)));
  for (std::size_t i = 0; i < out.size(); ++i) {
    PointTally& t = out[i];
    t.point = static_cast<PointId>(i);
    switch (shape(rng)) {
      case 0:
        break;  // unexecuted
      case 1:
        t.success = count(rng);
        break;
      case 2:
        t.exception = count(rng);
        t.budget_exceeded = t.exception / 3;
        break;
      default:
        t.success = count(rng);
        t.oracle_broken = count(rng);
        t.exception = count(rng);
        t.budget_exceeded = t.exception / 2;
    }
    t.execs = t.success + t.oracle_broken + t.exception;
  }
  if (std::all_of(out.begin(), out.end(), [](const PointTally& t) { return t.execs == 0; })) {
    out.front().success = out.front().execs = 1;
  }
  return out;
}

TEST(MetricsProperties, RatiosPartitionOne) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    for (const auto& t : random_tallies(rng)) {
      const PointStats s = point_stats(t);
      if (t.execs == 0) {
        EXPECT_FALSE(s.phi);
        continue;
      }
      EXPECT_EQ(s.phi->num + s.chi->num + s.xi->num, t.execs);
      EXPECT_EQ(s.phi->den, t.execs);
      EXPECT_NEAR(s.phi->value() + s.chi->value() + s.xi->value(), 1.0, 1e-12);
    }
  }
}

TEST(MetricsProperties, WeightedMeanEqualsDirectPhi) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto tallies = random_tallies(rng);
    const CampaignSummary s = aggregate(tallies);
    EXPECT_NEAR(weighted_mean_phi(tallies), s.correctness_ratio.value(), 1e-12);
  }
}

TEST(MetricsProperties, SummaryIsConsistent) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto tallies = random_tallies(rng);
    const CampaignSummary s = aggregate(tallies);
    std::uint64_t space = 0, omega = 0, executed = 0, classes = 0, binned = 0;
    for (const auto& t : tallies) {
      space += t.execs;
      omega += t.success;
      executed += t.execs > 0;
    }
    for (auto c : kAllClassifications) classes += s.count(c);
    for (auto n : s.profile) binned += n;
    EXPECT_EQ(s.space_size, space);
    EXPECT_EQ(s.omega, omega);
    EXPECT_EQ(s.correctness_ratio, (Ratio{omega, space}));
    EXPECT_EQ(classes, tallies.size());
    EXPECT_EQ(binned, executed);
    EXPECT_EQ(s.count(Classification::Unexecuted), tallies.size() - executed);
  }
}

TEST(MetricsProperties, ClassNamesRoundTrip) {
  for (auto c : kAllClassifications) EXPECT_EQ(parse_classification(to_string(c)), c);
  EXPECT_FALSE(parse_classification("sturdy"));
}

}  // namespace
