#include "attract/explorer.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace attract {

void ReferenceCounts::add_row(std::span<const std::uint64_t> row) {
  if (row.size() != points_) {
    throw ConfigurationError("reference row has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(points_));
  }
  rows_.emplace_back(row.begin(), row.end());
}

std::uint64_t ReferenceCounts::point_total(PointId point) const {
  std::uint64_t total = 0;
  for (const auto& row : rows_) total += row.at(point);
  return total;
}

std::uint64_t ReferenceCounts::input_total(std::size_t input) const {
  const auto& row = rows_.at(input);
  return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
}

void PointTally::record(Classified c) noexcept {
  ++execs;
  switch (c.verdict) {
    case Verdict::Success:
      ++success;
      break;
    case Verdict::OracleBroken:
      ++oracle_broken;
      break;
    case Verdict::Exception:
      ++exception;
      budget_exceeded += c.budget_exceeded ? 1U : 0U;
      break;
  }
}

PointTally& PointTally::operator+=(const PointTally& other) noexcept {
  success += other.success;
  oracle_broken += other.oracle_broken;
  exception += other.exception;
  budget_exceeded += other.budget_exceeded;
  execs += other.execs;
  return *this;
}

std::vector<PointId> explored_points(std::span<const PerturbationPoint> points, Model model,
                                     std::optional<PointKind> kind) {
  std::vector<PointId> out;
  for (const auto& p : points) {
    if (applies_to(model, p.kind) && (!kind || *kind == p.kind)) out.push_back(p.id);
  }
  return out;
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  constexpr std::size_t kChunk = 16;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + kChunk);
      try {
        for (std::size_t i = begin; i < end; ++i) task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  {
    std::vector<std::jthread> workers;
    workers.reserve(n);
    for (unsigned w = 0; w < n; ++w) workers.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace attract
