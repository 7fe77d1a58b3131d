#include "attract/metrics.hpp"

#include <algorithm>

namespace attract {

std::string Ratio::fixed(int places) const {
  std::uint64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const auto scaled = static_cast<unsigned __int128>(num) * scale;
  auto units = static_cast<std::uint64_t>((scaled + den / 2) / den);
  const std::uint64_t whole = units / scale;
  if (places <= 0) return std::to_string(whole);
  std::string frac = std::to_string(units % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return std::to_string(whole) + "." + frac;
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Antifragile:
      return "antifragile";
    case Classification::Robust:
      return "robust";
    case Classification::Intermediate:
      return "intermediate";
    case Classification::Fragile:
      return "fragile";
    case Classification::Unexecuted:
      return "unexecuted";
  }
  return "?";
}

std::optional<Classification> parse_classification(std::string_view text) noexcept {
  for (Classification c : kAllClassifications) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

Classification classify(double phi, std::uint64_t execs) noexcept {
  if (execs == 0) return Classification::Unexecuted;
  if (phi >= 1.0) return Classification::Antifragile;
  if (phi <= 0.0) return Classification::Fragile;
  if (phi >= 0.75) return Classification::Robust;
  return Classification::Intermediate;
}

Classification classify(const PointTally& t) noexcept {
  if (t.execs == 0) return Classification::Unexecuted;
  if (t.success == t.execs) return Classification::Antifragile;
  if (t.success == 0) return Classification::Fragile;
  if (4 * t.success >= 3 * t.execs) return Classification::Robust;
  return Classification::Intermediate;
}

PointStats point_stats(const PointTally& tally) {
  if (!tally.consistent()) {
    throw std::invalid_argument("tally of point " + std::to_string(tally.point) +
                                " does not partition its executions");
  }
  PointStats s;
  s.point = tally.point;
  s.execs = tally.execs;
  s.classification = classify(tally);
  if (tally.execs > 0) {
    s.phi = Ratio{tally.success, tally.execs};
    s.chi = Ratio{tally.oracle_broken, tally.execs};
    s.xi = Ratio{tally.exception, tally.execs};
  }
  return s;
}

std::size_t histogram_bin(const Ratio& phi) noexcept {
  const auto bin = static_cast<std::size_t>((kHistogramBins * phi.num) / phi.den);
  return std::min(bin, kHistogramBins - 1);
}

CampaignSummary aggregate(std::span<const PointTally> tallies) {
  CampaignSummary summary;
  for (const auto& t : tallies) {
    const PointStats stats = point_stats(t);
    summary.omega += t.success;
    summary.space_size += t.execs;
    ++summary.class_counts[static_cast<std::size_t>(stats.classification)];
    if (stats.phi) ++summary.profile[histogram_bin(*stats.phi)];
  }
  if (summary.space_size == 0) {
    throw std::invalid_argument("campaign explored no perturbed executions");
  }
  summary.correctness_ratio = Ratio{summary.omega, summary.space_size};
  return summary;
}

double weighted_mean_phi(std::span<const PointTally> tallies) {
  double weighted = 0.0;
  double weight = 0.0;
  for (const auto& t : tallies) {
    if (t.execs == 0) continue;
    const double phi = static_cast<double>(t.success) / static_cast<double>(t.execs);
    weighted += phi * static_cast<double>(t.execs);
    weight += static_cast<double>(t.execs);
  }
  if (weight == 0.0) throw std::invalid_argument("campaign explored no perturbed executions");
  return weighted / weight;
}

}  // namespace attract
