#pragma once

// JVM-style value semantics for instrumented subjects: 32-bit wrapping
// arithmetic, checked arrays that fault instead of invoking UB, and an
// exception hierarchy that separates catchable exceptions from errors.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "attract/engine.hpp"

namespace attract::jvm {

using Int = std::int32_t;
using Byte = std::int8_t;

/// Analogue of java.lang.Exception: subject code may catch these.
/// Errors (stack overflow, out of memory) are plain RuntimeFaults.
class Exception : public RuntimeFault {
 public:
  using RuntimeFault::RuntimeFault;
};

[[noreturn]] void throw_index_out_of_bounds(std::int64_t index, std::size_t length);
[[noreturn]] void throw_negative_array_size(Int size);
[[noreturn]] void throw_arithmetic(const char* what);
[[noreturn]] void throw_illegal_argument(const std::string& what);

/// Largest array the subjects may allocate; bigger requests fault as OOM.
inline constexpr Int kMaxArrayLength = Int{1} << 24;

constexpr Int add(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(b));
}
constexpr Int sub(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint32_t>(a) - static_cast<std::uint32_t>(b));
}
constexpr Int mul(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint32_t>(a) * static_cast<std::uint32_t>(b));
}
constexpr Int neg(Int a) noexcept { return sub(0, a); }

inline Int div(Int a, Int b) {
  if (b == 0) throw_arithmetic("/ by zero");
  if (b == -1) return neg(a);
  return a / b;
}

inline Int rem(Int a, Int b) {
  if (b == 0) throw_arithmetic("/ by zero");
  if (b == -1) return 0;
  return a % b;
}

constexpr Int shl(Int a, Int n) noexcept {
  return static_cast<Int>(static_cast<std::uint32_t>(a) << (n & 31));
}
constexpr Int shr(Int a, Int n) noexcept { return a >> (n & 31); }
constexpr Int ushr(Int a, Int n) noexcept {
  return static_cast<Int>(static_cast<std::uint32_t>(a) >> (n & 31));
}
constexpr Int rotl(Int a, Int n) noexcept {
  const auto bits = static_cast<std::uint32_t>(a);
  const int s = n & 31;
  return static_cast<Int>(s == 0 ? bits : (bits << s) | (bits >> (32 - s)));
}

constexpr Byte to_byte(Int v) noexcept { return static_cast<Byte>(static_cast<std::uint8_t>(v)); }

/// Fixed-length array with Java indexing rules. Elements start
/// value-initialized, as Java arrays do.
template <class T>
class Array {
 public:
  Array() = default;
  explicit Array(Int length) {
    if (length < 0) throw_negative_array_size(length);
    if (length > kMaxArrayLength) throw RuntimeFault("OutOfMemoryError");
    data_.resize(static_cast<std::size_t>(length));
  }
  explicit Array(std::vector<T> values) : data_(std::move(values)) {}

  Int length() const noexcept { return static_cast<Int>(data_.size()); }

  T& operator[](Int index) { return data_[check(index)]; }
  const T& operator[](Int index) const { return data_[check(index)]; }

  const std::vector<T>& values() const noexcept { return data_; }
  std::vector<T>& values() noexcept { return data_; }

  friend bool operator==(const Array&, const Array&) = default;

 private:
  std::size_t check(Int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= data_.size()) {
      throw_index_out_of_bounds(index, data_.size());
    }
    return static_cast<std::size_t>(index);
  }

  std::vector<T> data_;
};

/// Java `new T[rows][cols]`.
template <class T>
Array<Array<T>> new_matrix(Int rows, Int cols) {
  Array<Array<T>> m(rows);
  if (cols < 0) throw_negative_array_size(cols);
  for (auto& row : m.values()) row = Array<T>(cols);
  return m;
}

/// Bounds-checked character access for string-like containers.
template <class Str>
auto char_at(const Str& s, Int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= s.size()) {
    throw_index_out_of_bounds(index, s.size());
  }
  return s[static_cast<std::size_t>(index)];
}

}  // namespace attract::jvm
