#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "attract/engine.hpp"

namespace attract {

/// An instrumented program packaged with its perfect oracle and a seeded
/// input generator. `accepts` receives the reference output of the same
/// input; oracles that judge outputs on their own simply ignore it.
template <class S>
concept Subject = requires(const typename S::Input& in, const typename S::Output& out,
                           Controller& c, std::uint64_t seed, std::size_t n) {
  { S::name } -> std::convertible_to<std::string_view>;
  { S::points() } -> std::convertible_to<std::span<const PerturbationPoint>>;
  { S::run(in, c) } -> std::same_as<typename S::Output>;
  { S::accepts(in, out, out) } -> std::same_as<bool>;
  { S::generate(seed, n) } -> std::same_as<std::vector<typename S::Input>>;
};

/// Perturbed runs get max(factor * reference hooks, minimum) hook steps.
struct BudgetPolicy {
  std::uint64_t factor = 100;
  std::uint64_t minimum = 1'000'000;

  std::uint64_t for_reference(std::uint64_t reference_hooks) const noexcept {
    return std::max(factor * reference_hooks, minimum);
  }
  friend bool operator==(const BudgetPolicy&, const BudgetPolicy&) = default;
};

/// Hook cap for unperturbed runs; a correct subject never approaches it.
inline constexpr std::uint64_t kReferenceBudget = 10'000'000'000ULL;

/// R_ref: executions of each point, one row per input.
class ReferenceCounts {
 public:
  ReferenceCounts() = default;
  explicit ReferenceCounts(std::size_t points) : points_(points) {}

  void add_row(std::span<const std::uint64_t> row);

  std::size_t points() const noexcept { return points_; }
  std::size_t inputs() const noexcept { return rows_.size(); }
  std::uint64_t at(PointId point, std::size_t input) const { return rows_.at(input).at(point); }
  std::span<const std::uint64_t> row(std::size_t input) const { return rows_.at(input); }
  std::uint64_t point_total(PointId point) const;
  std::uint64_t input_total(std::size_t input) const;

  friend bool operator==(const ReferenceCounts&, const ReferenceCounts&) = default;

 private:
  std::size_t points_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

enum class Verdict : std::uint8_t { Success, OracleBroken, Exception };

struct Classified {
  Verdict verdict = Verdict::Success;
  bool budget_exceeded = false;
  friend bool operator==(const Classified&, const Classified&) = default;
};

/// Raw outcome counters of one point; exception includes budget_exceeded.
struct PointTally {
  PointId point = 0;
  std::uint64_t success = 0;
  std::uint64_t oracle_broken = 0;
  std::uint64_t exception = 0;
  std::uint64_t budget_exceeded = 0;
  std::uint64_t execs = 0;

  void record(Classified c) noexcept;
  PointTally& operator+=(const PointTally& other) noexcept;
  bool consistent() const noexcept { return success + oracle_broken + exception == execs; }
  friend bool operator==(const PointTally&, const PointTally&) = default;
};

/// Thrown when an unperturbed run does not produce an output the oracle
/// accepts; the campaign cannot proceed on a broken premise.
class ReferenceRunFailure : public std::runtime_error {
 public:
  ReferenceRunFailure(std::size_t input, const std::string& why)
      : std::runtime_error("reference run failed on input " + std::to_string(input) + ": " +
                           why),
        input_(input) {}
  std::size_t input() const noexcept { return input_; }

 private:
  std::size_t input_;
};

struct ExploreOptions {
  Model model = Model::Pone;
  /// Restricts Identity campaigns to one kind; other models imply theirs.
  std::optional<PointKind> kind;
  BudgetPolicy budget;
  unsigned jobs = 1;
};

/// Tallies of one exhaustive campaign. `tallies` holds one entry per
/// explored point (matching kind), sorted by id.
struct Exploration {
  Model model = Model::Pone;
  std::optional<PointKind> kind;
  std::vector<PointTally> tallies;
  ReferenceCounts reference;
  std::uint64_t space_size = 0;

  friend bool operator==(const Exploration&, const Exploration&) = default;
};

/// Points a campaign with `options` perturbs.
std::vector<PointId> explored_points(std::span<const PerturbationPoint> points,
                                     Model model, std::optional<PointKind> kind);

/// Calls task(i) for i in [0, count) on `jobs` workers. Rethrows the first
/// exception any task raised after all workers stop.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& task);

template <Subject S>
ExecutionOutcome<typename S::Output> run_guarded(const typename S::Input& input,
                                                 Controller& controller) {
  return run_guarded([&input](Controller& c) { return S::run(input, c); }, controller);
}

template <Subject S>
struct ReferenceRun {
  typename S::Output output;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_hooks = 0;
};

/// Unperturbed run recording per-point execution counts.
template <Subject S>
ReferenceRun<S> reference_run(const typename S::Input& input, std::size_t index = 0) {
  Controller controller(S::points(), PerturbationPlan::counting(), kReferenceBudget);
  auto outcome = run_guarded<S>(input, controller);
  if (auto* err = std::get_if<RuntimeError>(&outcome)) {
    throw ReferenceRunFailure(index, err->description);
  }
  if (std::holds_alternative<BudgetExceeded>(outcome)) {
    throw ReferenceRunFailure(index, "reference step budget exhausted");
  }
  auto& output = std::get<0>(outcome);
  if (!S::accepts(input, output, output)) {
    throw ReferenceRunFailure(index, "oracle rejects the unperturbed output");
  }
  const auto counts = controller.counts();
  return {std::move(output), {counts.begin(), counts.end()}, controller.total_hooks()};
}

/// One run with `model` applied at occurrence `occurrence` of `point`.
/// The oracle is consulted only when the run produced an output.
template <Subject S>
Classified perturbed_run(const typename S::Input& input, const typename S::Output& reference,
                         PointId point, std::uint64_t occurrence, Model model,
                         std::uint64_t budget) {
  Controller controller(S::points(), PerturbationPlan::perturbing(point, occurrence, model),
                        budget);
  auto outcome = run_guarded<S>(input, controller);
  if (std::holds_alternative<BudgetExceeded>(outcome)) return {Verdict::Exception, true};
  if (std::holds_alternative<RuntimeError>(outcome)) return {Verdict::Exception, false};
  return {S::accepts(input, reference, std::get<0>(outcome)) ? Verdict::Success
                                                              : Verdict::OracleBroken,
          false};
}

template <Subject S>
Exploration explore(std::span<const typename S::Input> inputs, const ExploreOptions& options) {
  const auto points = std::span<const PerturbationPoint>(S::points());
  const std::vector<PointId> targets = explored_points(points, options.model, options.kind);
  if (targets.empty()) {
    throw ConfigurationError("subject " + std::string(S::name) + " has no point model " +
                             std::string(to_string(options.model)) + " can perturb");
  }

  Exploration result;
  result.model = options.model;
  result.kind = options.kind;
  result.reference = ReferenceCounts(points.size());

  std::vector<typename S::Output> outputs;
  std::vector<std::uint64_t> budgets;
  outputs.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto ref = reference_run<S>(inputs[i], i);
    result.reference.add_row(ref.counts);
    budgets.push_back(options.budget.for_reference(ref.total_hooks));
    outputs.push_back(std::move(ref.output));
  }

  // Runs are enumerated in (input, point, occurrence) order.
  struct Task {
    std::uint32_t input;
    std::uint32_t slot;
    std::uint64_t occurrence;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t slot = 0; slot < targets.size(); ++slot) {
      const std::uint64_t n = result.reference.at(targets[slot], i);
      for (std::uint64_t j = 0; j < n; ++j) {
        tasks.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(slot), j});
      }
    }
  }

  std::vector<Classified> verdicts(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    verdicts[t] = perturbed_run<S>(inputs[task.input], outputs[task.input],
                                   targets[task.slot], task.occurrence, options.model,
                                   budgets[task.input]);
  });

  result.tallies.resize(targets.size());
  for (std::size_t slot = 0; slot < targets.size(); ++slot) {
    result.tallies[slot].point = targets[slot];
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    result.tallies[tasks[t].slot].record(verdicts[t]);
  }
  result.space_size = tasks.size();
  return result;
}

}  // namespace attract
