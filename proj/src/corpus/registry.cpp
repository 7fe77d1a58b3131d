#include <algorithm>

#include "attract/corpus.hpp"
#include "attract/subjects/demo.hpp"
#include "attract/subjects/laguerre.hpp"
#include "attract/subjects/lcs.hpp"
#include "attract/subjects/linreg.hpp"
#include "attract/subjects/md5.hpp"
#include "attract/subjects/quicksort.hpp"
#include "attract/subjects/rc4.hpp"
#include "attract/subjects/sudoku.hpp"
#include "attract/subjects/zip.hpp"

namespace attract {

namespace {

template <Subject S>
SubjectEntry entry(std::size_t default_inputs) {
  SubjectEntry e;
  e.name = S::name;
  e.description = S::description;
  e.points = S::points();
  e.default_inputs = default_inputs;
  e.explore = [](const CampaignRequest& request) {
    const auto inputs = S::generate(request.seed, request.inputs);
    return attract::explore<S>(std::span<const typename S::Input>(inputs), request.options);
  };
  e.show_inputs = [](std::uint64_t seed, std::size_t count) {
    std::vector<std::string> shown;
    for (const auto& in : S::generate(seed, count)) shown.push_back(S::show(in));
    return shown;
  };
  return e;
}

}  // namespace

std::size_t SubjectEntry::count(PointKind kind) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      points.begin(), points.end(), [kind](const PerturbationPoint& p) { return p.kind == kind; }));
}

std::span<const SubjectEntry> subject_registry() {
  static const std::vector<SubjectEntry> registry = {
      entry<corpus::Demo>(100),     entry<corpus::QuickSort>(20), entry<corpus::Zip>(20),
      entry<corpus::Sudoku>(20),    entry<corpus::Md5>(20),       entry<corpus::Rc4>(20),
      entry<corpus::Lcs>(20),       entry<corpus::Laguerre>(20),  entry<corpus::LinReg>(20),
  };
  return registry;
}

const SubjectEntry* find_subject(std::string_view name) {
  for (const auto& e : subject_registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace attract
