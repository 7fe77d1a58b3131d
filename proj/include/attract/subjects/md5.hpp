#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// MD5 in the single-function Java style: pad, fill a 16-word buffer per
/// block, 64 rounds with a switch on the round group.
struct Md5 {
  static constexpr std::string_view name = "md5";
  static constexpr std::string_view description = "MD5 digest of a byte string";

  using Input = std::string;
  using Output = std::array<std::uint8_t, 16>;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& message, Controller& c);
  /// Digest equals the one computed by digest().
  static bool accepts(const Input& message, const Output& reference, const Output& out);
  /// Printable ASCII strings of 1 to 40 characters.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& message) { return message; }

  /// Uninstrumented reference digest.
  static Output digest(std::string_view message);
  static std::string hex(const Output& digest);
};

}  // namespace attract::corpus
