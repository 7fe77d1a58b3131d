#include "attract/engine.hpp"

#include <string>

#include "attract/jvm.hpp"

namespace attract {

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::Identity:
      return "identity";
    case Model::Pone:
      return "pone";
    case Model::Mone:
      return "mone";
    case Model::Pzero:
      return "pzero";
    case Model::Pbool:
      return "pbool";
  }
  return "?";
}

std::string_view to_string(PointKind kind) noexcept {
  return kind == PointKind::Int ? "int" : "bool";
}

std::optional<Model> parse_model(std::string_view text) noexcept {
  for (Model m : {Model::Identity, Model::Pone, Model::Mone, Model::Pzero, Model::Pbool}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::optional<PointKind> parse_kind(std::string_view text) noexcept {
  if (text == "int") return PointKind::Int;
  if (text == "bool") return PointKind::Bool;
  return std::nullopt;
}

Controller::Controller(std::span<const PerturbationPoint> points, PerturbationPlan plan,
                       std::uint64_t step_budget, std::uint32_t max_call_depth)
    : plan_(plan),
      kinds_(points.size()),
      counts_(points.size(), 0),
      budget_(step_budget),
      max_depth_(max_call_depth) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id != i) {
      throw ConfigurationError("point ids must be dense and ordered; got " +
                               std::to_string(points[i].id) + " at position " +
                               std::to_string(i));
    }
    kinds_[i] = points[i].kind;
  }
  if (plan_.mode == PerturbationPlan::Mode::Perturbing) {
    if (plan_.target_point >= kinds_.size()) {
      throw ConfigurationError("plan targets unknown point " +
                               std::to_string(plan_.target_point));
    }
    if (!applies_to(plan_.model, kinds_[plan_.target_point])) {
      throw ConfigurationError("model " + std::string(to_string(plan_.model)) +
                               " cannot perturb " +
                               std::string(to_string(kinds_[plan_.target_point])) +
                               " point " + std::to_string(plan_.target_point));
    }
    armed_ = true;
  }
}

void Controller::reject(PointId id, PointKind kind) const {
  if (id >= kinds_.size()) {
    throw ConfigurationError("hook invoked with unregistered point id " + std::to_string(id));
  }
  throw ConfigurationError("point " + std::to_string(id) + " is registered as " +
                           std::string(to_string(kinds_[id])) + " but hooked as " +
                           std::string(to_string(kind)));
}

namespace jvm {

void throw_index_out_of_bounds(std::int64_t index, std::size_t length) {
  throw Exception("ArrayIndexOutOfBoundsException: index " + std::to_string(index) +
                  " out of bounds for length " + std::to_string(length));
}

void throw_negative_array_size(Int size) {
  throw Exception("NegativeArraySizeException: " + std::to_string(size));
}

void throw_arithmetic(const char* what) {
  throw Exception(std::string("ArithmeticException: ") + what);
}

void throw_illegal_argument(const std::string& what) {
  throw Exception("IllegalArgumentException: " + what);
}

}  // namespace jvm
}  // namespace attract
