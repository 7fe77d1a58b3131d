#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// RC4 stream cipher engine in the style of a Java crypto provider: one
/// engine object keyed for encryption, then re-keyed for decryption.
/// The state array is allocated once and reused by the second setKey.
struct Rc4 {
  static constexpr std::string_view name = "rc4";
  static constexpr std::string_view description = "RC4 encrypt then decrypt a message";

  struct Input {
    std::string key;
    std::string plaintext;
    friend bool operator==(const Input&, const Input&) = default;
  };
  using Output = std::string;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& input, Controller& c);
  /// decrypt(encrypt(x)) == x.
  static bool accepts(const Input& input, const Output& reference, const Output& out);
  /// Keys of 5 to 16 bytes and plaintexts of 4 to 16 printable characters.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& input);

  /// Uninstrumented encryption with a fresh engine.
  static std::string encrypt(std::string_view key, std::string_view plaintext);

  /// `i` in the state initialization loop condition `i < STATE_LENGTH`.
  static constexpr PointId kInitLoopIndexPoint = 4;
};

}  // namespace attract::corpus
