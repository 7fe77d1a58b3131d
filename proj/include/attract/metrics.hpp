#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "attract/explorer.hpp"

namespace attract {

/// Exact non-negative ratio num/den with den > 0.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  /// Decimal rendering rounded half-up to `places` digits, e.g. "0.6865".
  std::string fixed(int places = 4) const;
  /// floor(100 * num / den), the way per-point percentages are tabulated.
  std::uint64_t truncated_percent() const noexcept { return (100 * num) / den; }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

enum class Classification : std::uint8_t { Antifragile, Robust, Intermediate, Fragile, Unexecuted };

inline constexpr std::array<Classification, 5> kAllClassifications = {
    Classification::Antifragile, Classification::Robust, Classification::Intermediate,
    Classification::Fragile, Classification::Unexecuted};

std::string_view to_string(Classification c) noexcept;
std::optional<Classification> parse_classification(std::string_view text) noexcept;

/// 1 -> antifragile, [0.75, 1) -> robust, (0, 0.75) -> intermediate,
/// 0 -> fragile; no executions -> unexecuted.
Classification classify(double phi, std::uint64_t execs) noexcept;
Classification classify(const PointTally& tally) noexcept;

struct PointStats {
  PointId point = 0;
  std::uint64_t execs = 0;
  /// Absent when execs == 0.
  std::optional<Ratio> phi, chi, xi;
  Classification classification = Classification::Unexecuted;
};

/// Throws std::invalid_argument for an inconsistent tally.
PointStats point_stats(const PointTally& tally);

inline constexpr std::size_t kHistogramBins = 20;

struct CampaignSummary {
  std::uint64_t omega = 0;
  std::uint64_t space_size = 0;
  Ratio correctness_ratio;
  std::array<std::uint64_t, kAllClassifications.size()> class_counts{};
  /// Per-point phi in 20 equal-width bins; phi == 1 lands in the last bin.
  std::array<std::uint64_t, kHistogramBins> profile{};

  std::uint64_t count(Classification c) const noexcept {
    return class_counts[static_cast<std::size_t>(c)];
  }
  friend bool operator==(const CampaignSummary&, const CampaignSummary&) = default;
};

std::size_t histogram_bin(const Ratio& phi) noexcept;

/// Throws std::invalid_argument when nothing was executed.
CampaignSummary aggregate(std::span<const PointTally> tallies);

/// Execution-weighted mean of per-point phi; equals Phi by construction.
double weighted_mean_phi(std::span<const PointTally> tallies);

}  // namespace attract
