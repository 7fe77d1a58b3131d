#include "attract/subjects/demo.hpp"

#include <stdexcept>

namespace attract::corpus {

namespace {
constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Bool, "loop condition i > 0"},
    {1, PointKind::Int, "read of i in acc |= i >> mask"},
};
}  // namespace

std::span<const PerturbationPoint> Demo::points() { return kPoints; }

Demo::Output Demo::run(const Input& bound, Controller& c) {
  if (bound < 0 || bound > kMaxBound) {
    throw std::invalid_argument("demo bound out of range: " + std::to_string(bound));
  }
  jvm::Int acc = 0;
  const jvm::Int mask = 0x2;
  for (jvm::Int i = bound; c.hook_bool(0, i > 0); i--) {
    acc |= jvm::shr(c.hook_int(1, i), mask);
  }
  return acc;
}

Demo::Output Demo::expected(jvm::Int bound) noexcept {
  jvm::Int acc = 0;
  for (jvm::Int i = 1; i <= bound; ++i) acc |= i >> 2;
  return acc;
}

bool Demo::accepts(const Input& bound, const Output&, const Output& out) {
  return out == expected(bound);
}

std::vector<Demo::Input> Demo::generate(std::uint64_t, std::size_t count) {
  std::vector<Input> bounds(count);
  for (std::size_t i = 0; i < count; ++i) bounds[i] = static_cast<Input>(i);
  return bounds;
}

std::string Demo::show(const Input& bound) { return std::to_string(bound); }

}  // namespace attract::corpus
