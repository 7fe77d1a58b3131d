#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// LZW compression followed by decompression of a byte string. Characters
/// are widened to 16-bit Java chars, so the output type is a u16string.
struct Zip {
  static constexpr std::string_view name = "zip";
  static constexpr std::string_view description = "LZW compress then decompress a string";

  using Input = std::string;
  using Output = std::u16string;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& text, Controller& c);
  /// uncompress(compress(x)) == x.
  static bool accepts(const Input& text, const Output& reference, const Output& out);
  /// Strings of 20 to 40 characters over a small alphabet; about a third of
  /// them contain byte 255 somewhere past the third character.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& text);

  /// Uninstrumented codec, for tests.
  static std::vector<jvm::Int> compress(const Input& text);
  static Output decompress(const std::vector<jvm::Int>& codes);

  static constexpr PointId kDictSizePoint = 0;
};

}  // namespace attract::corpus
