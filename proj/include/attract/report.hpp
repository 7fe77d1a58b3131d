#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attract/explorer.hpp"
#include "attract/metrics.hpp"

namespace attract {

/// Bad subject, model, kind or format requested by the user.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format : std::uint8_t { Csv, Json };
std::optional<Format> parse_format(std::string_view text) noexcept;

struct CampaignConfig {
  std::string subject;
  Model model = Model::Pone;
  std::optional<PointKind> kind;
  std::uint64_t seed = 42;
  /// 0 picks the subject's default input count.
  std::size_t inputs = 0;
  BudgetPolicy budget;
  /// Worker count; never affects the report.
  unsigned jobs = 1;
  bool timing = false;
};

struct ReportRow {
  PointId id = 0;
  std::string label;
  PointKind kind = PointKind::Int;
  PointTally tally;
  PointStats stats;
  std::string annotation;

  friend bool operator==(const ReportRow& a, const ReportRow& b) {
    return a.id == b.id && a.label == b.label && a.kind == b.kind && a.tally == b.tally &&
           a.annotation == b.annotation;
  }
};

struct CampaignReport {
  std::string subject;
  Model model = Model::Pone;
  std::optional<PointKind> kind;
  std::uint64_t seed = 0;
  std::size_t input_count = 0;
  BudgetPolicy budget;
  std::string tool_version;
  std::vector<std::string> inputs;
  std::vector<ReportRow> rows;
  CampaignSummary summary;
  /// Present only when the campaign was timed.
  std::optional<double> wall_clock_seconds;

  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;
};

std::string_view tool_version() noexcept;

/// Throws UsageError for an unknown subject or an impossible model/kind
/// pairing, ReferenceRunFailure when an unperturbed run fails.
CampaignReport run_campaign(const CampaignConfig& config);

/// Builds a report from finished tallies; rows follow point order.
CampaignReport make_report(const CampaignConfig& config, std::span<const PerturbationPoint> points,
                           const Exploration& exploration, std::vector<std::string> inputs);

/// Sidecar lines `<point_id> <label>`; blank lines and '#' comments ignored.
using Annotations = std::map<PointId, std::string>;
Annotations parse_annotations(std::string_view text);
/// Throws std::invalid_argument when an annotation names a point not in
/// the report.
void annotate(CampaignReport& report, const Annotations& annotations);

inline constexpr std::string_view kCsvHeader =
    "point_id,label,kind,execs,success,oracle_broken,exception,budget_exceeded,phi,chi,xi,class,"
    "annotation";

std::string emit_table(const CampaignReport& report, Format format);

/// Inverse of emit_table(report, Format::Json). Throws std::invalid_argument
/// for malformed input or when the stored ratios or summary disagree with
/// the ones recomputed from the counters.
CampaignReport parse_json_report(std::string_view text);

struct PointDrift {
  PointId id = 0;
  std::string label;
  Classification before = Classification::Unexecuted;
  Classification after = Classification::Unexecuted;
  /// after - before; absent when either side is unexecuted.
  std::optional<double> delta_phi;
};

struct Drift {
  /// Configuration differences worth knowing before reading the rest.
  std::vector<std::string> notes;
  std::vector<PointDrift> class_flips;
  /// Every point whose phi or classification differs.
  std::vector<PointDrift> changed;
  double max_abs_delta_phi = 0.0;

  bool empty() const noexcept { return class_flips.empty() && changed.empty(); }
};

/// Throws std::invalid_argument when the reports cover different subjects.
Drift compare_reports(const CampaignReport& before, const CampaignReport& after);

std::string format_drift(const Drift& drift);
std::string format_summary(const CampaignReport& report);

}  // namespace attract
