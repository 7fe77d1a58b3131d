#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/explorer.hpp"

namespace attract {

struct CampaignRequest {
  std::uint64_t seed = 42;
  std::size_t inputs = 20;
  ExploreOptions options;
};

/// Type-erased view of one subject for the campaign runner and the CLI.
struct SubjectEntry {
  std::string_view name;
  std::string_view description;
  std::span<const PerturbationPoint> points;
  /// Input count used when a campaign does not specify one.
  std::size_t default_inputs = 20;
  std::function<Exploration(const CampaignRequest&)> explore;
  /// Printable form of the generated inputs, for reports.
  std::function<std::vector<std::string>(std::uint64_t seed, std::size_t count)> show_inputs;

  std::size_t count(PointKind kind) const noexcept;
};

/// All subjects, in a fixed order with the worked example first.
std::span<const SubjectEntry> subject_registry();
/// nullptr when no subject has that name.
const SubjectEntry* find_subject(std::string_view name);

}  // namespace attract
