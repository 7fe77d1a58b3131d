#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// Longest common subsequence by the dynamic programming table, then a
/// traceback from the bottom-right corner.
struct Lcs {
  static constexpr std::string_view name = "lcs";
  static constexpr std::string_view description = "longest common subsequence of two strings";

  struct Input {
    std::string a;
    std::string b;
    friend bool operator==(const Input&, const Input&) = default;
  };
  using Output = std::string;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& input, Controller& c);
  /// Same length as the reference output and a subsequence of both strings.
  static bool accepts(const Input& input, const Output& reference, const Output& out);
  /// Bundled pairs, starting at a seed-dependent offset and wrapping.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& input) { return input.a + " " + input.b; }

  static const std::vector<Input>& bundled();
  /// Two non-comment lines per pair; '#' starts a comment.
  static std::vector<Input> parse(std::string_view text);

  static bool is_subsequence(std::string_view sub, std::string_view of);

  /// Points 0-2 build the row count `a.length() + 1`, 3-5 the column count.
  static constexpr PointId kFirstDimensionPoint = 0;
  static constexpr PointId kDimensionPointCount = 6;
};

}  // namespace attract::corpus
