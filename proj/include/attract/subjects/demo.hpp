#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// The bit-mask accumulation loop
///
///   acc = 0; mask = 2;
///   for (i = bound; i > 0; i--) acc |= p(1, i) >> mask;
///
/// Point 0 is the loop condition, point 1 the read of `i`.
struct Demo {
  static constexpr std::string_view name = "demo";
  static constexpr std::string_view description = "bitwise-or of i >> 2 for i in [1, bound]";

  using Input = jvm::Int;
  using Output = jvm::Int;

  static constexpr jvm::Int kMaxBound = 1'000'000;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& bound, Controller& c);
  static bool accepts(const Input& bound, const Output& reference, const Output& out);
  /// Input i is bound = i; the seed is ignored.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& bound);

  /// Uninstrumented evaluation used by the oracle.
  static Output expected(jvm::Int bound) noexcept;
};

}  // namespace attract::corpus
