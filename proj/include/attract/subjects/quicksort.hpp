#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// In-place recursive quicksort with a middle pivot and Hoare-style
/// two-index partition. 41 integer and 6 boolean points.
struct QuickSort {
  static constexpr std::string_view name = "quicksort";
  static constexpr std::string_view description = "sort an array of integers";

  using Input = std::vector<jvm::Int>;
  using Output = std::vector<jvm::Int>;

  static constexpr std::size_t kInputLength = 100;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& array, Controller& c);
  /// Sorted, and the same multiset as the input.
  static bool accepts(const Input& input, const Output& reference, const Output& out);
  /// Arrays of 100 integers drawn uniformly from the full 32-bit range.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& array);

  static constexpr PointId kPivotIndexPoint = 8;
  static constexpr PointId kPartitionLoopPoint = 41;
};

}  // namespace attract::corpus
