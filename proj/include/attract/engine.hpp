#pragma once

#include <cstdint>
#include <limits>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace attract {

using PointId = std::uint32_t;

enum class PointKind : std::uint8_t { Int, Bool };

/// Value transformation applied at the single fired hook of a perturbed run.
enum class Model : std::uint8_t { Identity, Pone, Mone, Pzero, Pbool };

/// A hooked expression in a subject program. Ids are dense within a subject.
struct PerturbationPoint {
  PointId id;
  PointKind kind;
  std::string_view label;
};

/// Raised for faults the boundary in run_guarded() classifies as RuntimeError.
class RuntimeFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Misuse of the engine (unknown point, kind mismatch). Never classified;
/// always escapes run_guarded().
class ConfigurationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown by a hook when the step budget is exhausted. Deliberately not an
/// std::exception so subject code catching faults cannot swallow it.
struct BudgetExhausted {};

constexpr bool applies_to(Model model, PointKind kind) noexcept {
  switch (model) {
    case Model::Identity:
      return true;
    case Model::Pone:
    case Model::Mone:
    case Model::Pzero:
      return kind == PointKind::Int;
    case Model::Pbool:
      return kind == PointKind::Bool;
  }
  return false;
}

/// Integer models wrap at 32 bits. Bool-only models leave integers alone
/// (and vice versa); plan construction rejects such pairings.
constexpr std::int32_t apply_model(Model model, std::int32_t value) noexcept {
  const auto bits = static_cast<std::uint32_t>(value);
  switch (model) {
    case Model::Pone:
      return static_cast<std::int32_t>(bits + 1U);
    case Model::Mone:
      return static_cast<std::int32_t>(bits - 1U);
    case Model::Pzero:
      return 0;
    case Model::Identity:
    case Model::Pbool:
      break;
  }
  return value;
}

constexpr bool apply_model(Model model, bool value) noexcept {
  return model == Model::Pbool ? !value : value;
}

std::string_view to_string(Model model) noexcept;
std::string_view to_string(PointKind kind) noexcept;
std::optional<Model> parse_model(std::string_view text) noexcept;
std::optional<PointKind> parse_kind(std::string_view text) noexcept;

struct PerturbationPlan {
  enum class Mode : std::uint8_t { Counting, Perturbing };

  Mode mode = Mode::Counting;
  PointId target_point = 0;
  std::uint64_t target_occurrence = 0;
  Model model = Model::Identity;

  static PerturbationPlan counting() noexcept { return {}; }
  static PerturbationPlan perturbing(PointId point, std::uint64_t occurrence,
                                     Model model) noexcept {
    return {Mode::Perturbing, point, occurrence, model};
  }
};

/// Per-execution controller consulted by every hook. One instance per run;
/// never shared between concurrently running executions.
class Controller {
 public:
  static constexpr std::uint64_t kUnlimitedBudget =
      std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint32_t kDefaultMaxCallDepth = 4096;

  /// Throws ConfigurationError when the plan targets an unknown point or
  /// pairs a model with a point of the wrong kind.
  Controller(std::span<const PerturbationPoint> points, PerturbationPlan plan,
             std::uint64_t step_budget = kUnlimitedBudget,
             std::uint32_t max_call_depth = kDefaultMaxCallDepth);

  std::int32_t hook_int(PointId id, std::int32_t value) {
    if (step(id, PointKind::Int)) {
      const std::int32_t out = apply_model(plan_.model, value);
      altered_ += out != value ? 1U : 0U;
      return out;
    }
    return value;
  }

  bool hook_bool(PointId id, bool value) {
    if (step(id, PointKind::Bool)) {
      const bool out = apply_model(plan_.model, value);
      altered_ += out != value ? 1U : 0U;
      return out;
    }
    return value;
  }

  /// RAII guard for one subject-level call frame; throwing a RuntimeFault
  /// (stack overflow) when recursion exceeds the configured depth.
  class Frame {
   public:
    explicit Frame(Controller& c) : c_(c) {
      if (++c_.depth_ > c_.max_depth_) {
        --c_.depth_;
        throw RuntimeFault("StackOverflowError");
      }
    }
    ~Frame() { --c_.depth_; }
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

   private:
    Controller& c_;
  };

  const PerturbationPlan& plan() const noexcept { return plan_; }
  bool fired() const noexcept { return fired_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t total_hooks() const noexcept { return total_; }
  /// Hook invocations whose return value differed from their argument.
  std::uint32_t altered() const noexcept { return altered_; }

 private:
  // Returns true iff this invocation is the planned perturbation.
  bool step(PointId id, PointKind kind) {
    if (id >= kinds_.size() || kinds_[id] != kind) [[unlikely]] {
      reject(id, kind);
    }
    if (total_ == budget_) [[unlikely]] {
      throw BudgetExhausted{};
    }
    ++total_;
    const std::uint64_t occurrence = counts_[id]++;
    if (armed_ && id == plan_.target_point &&
        occurrence == plan_.target_occurrence) {
      armed_ = false;
      fired_ = true;
      return true;
    }
    return false;
  }

  [[noreturn]] void reject(PointId id, PointKind kind) const;

  PerturbationPlan plan_;
  std::vector<PointKind> kinds_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t budget_;
  std::uint64_t total_ = 0;
  std::uint32_t max_depth_;
  std::uint32_t depth_ = 0;
  std::uint32_t altered_ = 0;
  bool armed_ = false;
  bool fired_ = false;
};

struct RuntimeError {
  std::string description;
  friend bool operator==(const RuntimeError&, const RuntimeError&) = default;
};

struct BudgetExceeded {
  friend bool operator==(const BudgetExceeded&, const BudgetExceeded&) = default;
};

/// Exactly one variant per execution; faulted runs carry no output.
template <class Output>
using ExecutionOutcome = std::variant<Output, RuntimeError, BudgetExceeded>;

/// Runs `body(controller)` behind the fault boundary. ConfigurationError is
/// rethrown; everything else a subject raises becomes a classified outcome.
template <class Body>
auto run_guarded(Body&& body, Controller& controller)
    -> ExecutionOutcome<std::invoke_result_t<Body&, Controller&>> {
  using Output = std::invoke_result_t<Body&, Controller&>;
  try {
    return ExecutionOutcome<Output>{std::in_place_index<0>, body(controller)};
  } catch (const ConfigurationError&) {
    throw;
  } catch (const BudgetExhausted&) {
    return BudgetExceeded{};
  } catch (const std::bad_alloc&) {
    return RuntimeError{"OutOfMemoryError"};
  } catch (const std::exception& e) {
    return RuntimeError{e.what()};
  }
}

}  // namespace attract
