#include "attract/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "attract/corpus.hpp"

#ifndef ATTRACT_VERSION
#define ATTRACT_VERSION "0.0.0"
#endif

namespace attract {

namespace {

using nlohmann::ordered_json;

std::string ratio_text(const std::optional<Ratio>& r) { return r ? r->fixed(4) : std::string(); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_csv(const CampaignReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : report.rows) {
    const auto& t = row.tally;
    out += std::to_string(row.id) + ',' + csv_field(row.label) + ',' +
           std::string(to_string(row.kind)) + ',' + std::to_string(t.execs) + ',' +
           std::to_string(t.success) + ',' + std::to_string(t.oracle_broken) + ',' +
           std::to_string(t.exception) + ',' + std::to_string(t.budget_exceeded) + ',' +
           ratio_text(row.stats.phi) + ',' + ratio_text(row.stats.chi) + ',' +
           ratio_text(row.stats.xi) + ',' + std::string(to_string(row.stats.classification)) +
           ',' + csv_field(row.annotation) + '\n';
  }
  return out;
}

ordered_json ratio_json(const std::optional<Ratio>& r) {
  return r ? ordered_json(r->fixed(4)) : ordered_json(nullptr);
}

ordered_json to_json(const CampaignReport& report) {
  ordered_json j;
  j["tool"] = "attract";
  j["version"] = report.tool_version;
  j["config"] = {
      {"subject", report.subject},
      {"model", to_string(report.model)},
      {"kind", report.kind ? ordered_json(to_string(*report.kind)) : ordered_json(nullptr)},
      {"seed", report.seed},
      {"inputs", report.input_count},
      {"budget", {{"factor", report.budget.factor}, {"minimum", report.budget.minimum}}},
  };
  ordered_json classes = ordered_json::object();
  for (Classification c : kAllClassifications) classes[std::string(to_string(c))] = report.summary.count(c);
  j["summary"] = {
      {"space_size", report.summary.space_size},
      {"omega", report.summary.omega},
      {"phi", report.summary.correctness_ratio.fixed(4)},
      {"classes", classes},
      {"profile", report.summary.profile},
  };
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    const auto& t = row.tally;
    rows.push_back({
        {"point_id", row.id},
        {"label", row.label},
        {"kind", to_string(row.kind)},
        {"execs", t.execs},
        {"success", t.success},
        {"oracle_broken", t.oracle_broken},
        {"exception", t.exception},
        {"budget_exceeded", t.budget_exceeded},
        {"phi", ratio_json(row.stats.phi)},
        {"chi", ratio_json(row.stats.chi)},
        {"xi", ratio_json(row.stats.xi)},
        {"class", to_string(row.stats.classification)},
        {"annotation", row.annotation},
    });
  }
  j["points"] = std::move(rows);
  j["inputs"] = report.inputs;
  if (report.wall_clock_seconds) j["wall_clock_seconds"] = *report.wall_clock_seconds;
  return j;
}

[[noreturn]] void malformed(const std::string& why) {
  throw std::invalid_argument("malformed report: " + why);
}

void expect_ratio(const ordered_json& j, const char* key, const std::optional<Ratio>& r,
                  PointId id) {
  const auto& v = j.at(key);
  const bool ok = r ? (v.is_string() && v.get<std::string>() == r->fixed(4)) : v.is_null();
  if (!ok) malformed(std::string(key) + " of point " + std::to_string(id) + " disagrees with its counters");
}

CampaignSummary summary_or_empty(std::span<const PointTally> tallies) {
  std::uint64_t execs = 0;
  for (const auto& t : tallies) execs += t.execs;
  if (execs == 0) throw std::invalid_argument("campaign explored no perturbation");
  return aggregate(tallies);
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) noexcept {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

std::string_view tool_version() noexcept { return ATTRACT_VERSION; }

CampaignReport make_report(const CampaignConfig& config, std::span<const PerturbationPoint> points,
                           const Exploration& exploration, std::vector<std::string> inputs) {
  CampaignReport report;
  report.subject = config.subject;
  report.model = config.model;
  report.kind = config.kind;
  report.seed = config.seed;
  report.input_count = exploration.reference.inputs();
  report.budget = config.budget;
  report.tool_version = std::string(tool_version());
  report.inputs = std::move(inputs);
  for (const auto& tally : exploration.tallies) {
    const auto& p = points[tally.point];
    report.rows.push_back({p.id, std::string(p.label), p.kind, tally, point_stats(tally), {}});
  }
  report.summary = summary_or_empty(exploration.tallies);
  return report;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  const SubjectEntry* subject = find_subject(config.subject);
  if (!subject) throw UsageError("unknown subject '" + config.subject + "'");
  if (config.kind && !applies_to(config.model, *config.kind)) {
    throw UsageError("model " + std::string(to_string(config.model)) + " does not apply to " +
                     std::string(to_string(*config.kind)) + " points");
  }
  if (explored_points(subject->points, config.model, config.kind).empty()) {
    throw UsageError("subject " + config.subject + " has no point model " +
                     std::string(to_string(config.model)) + " can perturb");
  }
  CampaignConfig effective = config;
  if (effective.inputs == 0) effective.inputs = subject->default_inputs;

  CampaignRequest request;
  request.seed = effective.seed;
  request.inputs = effective.inputs;
  request.options.model = effective.model;
  request.options.kind = effective.kind;
  request.options.budget = effective.budget;
  request.options.jobs = effective.jobs;

  const auto start = std::chrono::steady_clock::now();
  const Exploration exploration = subject->explore(request);
  const auto stop = std::chrono::steady_clock::now();

  CampaignReport report = make_report(effective, subject->points, exploration,
                                      subject->show_inputs(effective.seed, effective.inputs));
  if (config.timing) report.wall_clock_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

Annotations parse_annotations(std::string_view text) {
  Annotations out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(line.substr(first), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("annotation line " + std::to_string(line_no) + ": expected a point id");
    }
    const auto rest = line.find_first_not_of(" \t", first + used);
    if (rest == std::string::npos || rest == first + used) {
      throw std::invalid_argument("annotation line " + std::to_string(line_no) + ": expected a label");
    }
    out[static_cast<PointId>(id)] = line.substr(rest);
  }
  return out;
}

void annotate(CampaignReport& report, const Annotations& annotations) {
  for (const auto& [id, label] : annotations) {
    auto it = std::find_if(report.rows.begin(), report.rows.end(),
                           [id = id](const ReportRow& r) { return r.id == id; });
    if (it == report.rows.end()) {
      throw std::invalid_argument("annotation for point " + std::to_string(id) +
                                  " which this report does not cover");
    }
    it->annotation = label;
  }
}

std::string emit_table(const CampaignReport& report, Format format) {
  if (report.summary.space_size == 0) throw std::invalid_argument("empty campaign");
  if (format == Format::Csv) return emit_csv(report);
  return to_json(report).dump(2) + "\n";
}

CampaignReport parse_json_report(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  try {
    CampaignReport r;
    r.tool_version = j.at("version").get<std::string>();
    const auto& cfg = j.at("config");
    r.subject = cfg.at("subject").get<std::string>();
    const auto model = parse_model(cfg.at("model").get<std::string>());
    if (!model) malformed("unknown model");
    r.model = *model;
    if (!cfg.at("kind").is_null()) {
      const auto kind = parse_kind(cfg.at("kind").get<std::string>());
      if (!kind) malformed("unknown kind");
      r.kind = *kind;
    }
    r.seed = cfg.at("seed").get<std::uint64_t>();
    r.input_count = cfg.at("inputs").get<std::size_t>();
    r.budget.factor = cfg.at("budget").at("factor").get<std::uint64_t>();
    r.budget.minimum = cfg.at("budget").at("minimum").get<std::uint64_t>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();

    std::vector<PointTally> tallies;
    for (const auto& p : j.at("points")) {
      ReportRow row;
      row.id = p.at("point_id").get<PointId>();
      row.label = p.at("label").get<std::string>();
      const auto kind = parse_kind(p.at("kind").get<std::string>());
      if (!kind) malformed("unknown point kind");
      row.kind = *kind;
      row.tally.point = row.id;
      row.tally.execs = p.at("execs").get<std::uint64_t>();
      row.tally.success = p.at("success").get<std::uint64_t>();
      row.tally.oracle_broken = p.at("oracle_broken").get<std::uint64_t>();
      row.tally.exception = p.at("exception").get<std::uint64_t>();
      row.tally.budget_exceeded = p.at("budget_exceeded").get<std::uint64_t>();
      if (row.tally.budget_exceeded > row.tally.exception) {
        malformed("point " + std::to_string(row.id) + " has more budget aborts than exceptions");
      }
      row.stats = point_stats(row.tally);
      expect_ratio(p, "phi", row.stats.phi, row.id);
      expect_ratio(p, "chi", row.stats.chi, row.id);
      expect_ratio(p, "xi", row.stats.xi, row.id);
      if (p.at("class").get<std::string>() != to_string(row.stats.classification)) {
        malformed("class of point " + std::to_string(row.id) + " disagrees with its counters");
      }
      row.annotation = p.at("annotation").get<std::string>();
      if (!r.rows.empty() && r.rows.back().id >= row.id) malformed("points out of order");
      tallies.push_back(row.tally);
      r.rows.push_back(std::move(row));
    }
    r.summary = summary_or_empty(tallies);

    const auto& s = j.at("summary");
    bool summary_ok = s.at("space_size").get<std::uint64_t>() == r.summary.space_size &&
                      s.at("omega").get<std::uint64_t>() == r.summary.omega &&
                      s.at("phi").get<std::string>() == r.summary.correctness_ratio.fixed(4) &&
                      s.at("profile").get<std::vector<std::uint64_t>>() ==
                          std::vector<std::uint64_t>(r.summary.profile.begin(), r.summary.profile.end());
    for (Classification c : kAllClassifications) {
      summary_ok = summary_ok && s.at("classes").at(std::string(to_string(c))).get<std::uint64_t>() ==
                                     r.summary.count(c);
    }
    if (!summary_ok) malformed("summary disagrees with the per-point counters");
    if (j.contains("wall_clock_seconds")) r.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Drift compare_reports(const CampaignReport& before, const CampaignReport& after) {
  if (before.subject != after.subject) {
    throw std::invalid_argument("reports cover different subjects: " + before.subject + " and " +
                                after.subject);
  }
  Drift d;
  if (before.model != after.model) {
    d.notes.push_back("models differ: " + std::string(to_string(before.model)) + " vs " +
                      std::string(to_string(after.model)));
  }
  if (before.seed != after.seed) {
    d.notes.push_back("seeds differ: " + std::to_string(before.seed) + " vs " + std::to_string(after.seed));
  }
  if (before.input_count != after.input_count) {
    d.notes.push_back("input counts differ: " + std::to_string(before.input_count) + " vs " +
                      std::to_string(after.input_count));
  }
  if (before.tool_version != after.tool_version) {
    d.notes.push_back("tool versions differ: " + before.tool_version + " vs " + after.tool_version);
  }
  std::map<PointId, const ReportRow*> old_rows;
  for (const auto& row : before.rows) old_rows[row.id] = &row;
  for (const auto& row : after.rows) {
    const auto it = old_rows.find(row.id);
    if (it == old_rows.end()) {
      d.notes.push_back("point " + std::to_string(row.id) + " only in the second report");
      continue;
    }
    const ReportRow& old = *it->second;
    PointDrift pd{row.id, row.label, old.stats.classification, row.stats.classification, {}};
    bool phi_changed = old.stats.phi.has_value() != row.stats.phi.has_value();
    if (old.stats.phi && row.stats.phi) {
      pd.delta_phi = row.stats.phi->value() - old.stats.phi->value();
      phi_changed = !(*old.stats.phi == *row.stats.phi);
      d.max_abs_delta_phi = std::max(d.max_abs_delta_phi, std::fabs(*pd.delta_phi));
    }
    if (pd.before != pd.after) d.class_flips.push_back(pd);
    if (phi_changed || pd.before != pd.after) d.changed.push_back(pd);
    old_rows.erase(it);
  }
  for (const auto& [id, row] : old_rows) {
    d.notes.push_back("point " + std::to_string(id) + " only in the first report");
  }
  return d;
}

std::string format_drift(const Drift& drift) {
  std::string out;
  for (const auto& n : drift.notes) out += "note: " + n + "\n";
  if (drift.empty()) return out + "no drift\n";
  char buf[64];
  for (const auto& pd : drift.changed) {
    out += "point " + std::to_string(pd.id) + " (" + pd.label + "): " +
           std::string(to_string(pd.before));
    if (pd.before != pd.after) out += " -> " + std::string(to_string(pd.after));
    if (pd.delta_phi) {
      std::snprintf(buf, sizeof buf, ", dphi %+.4f", *pd.delta_phi);
      out += buf;
    }
    out += "\n";
  }
  std::snprintf(buf, sizeof buf, "%.4f", drift.max_abs_delta_phi);
  out += std::to_string(drift.class_flips.size()) + " class flip(s), max |dphi| " + buf + "\n";
  return out;
}

std::string format_summary(const CampaignReport& report) {
  const auto& s = report.summary;
  std::string out = report.subject + " " + std::string(to_string(report.model));
  if (report.kind) out += " (" + std::string(to_string(*report.kind)) + ")";
  out += ", seed " + std::to_string(report.seed) + ", " + std::to_string(report.input_count) + " inputs\n";
  out += "  perturbed runs " + std::to_string(s.space_size) + ", correct " + std::to_string(s.omega) +
         ", Phi " + s.correctness_ratio.fixed(4) + "\n";
  out += "  points:";
  for (Classification c : kAllClassifications) {
    out += " " + std::string(to_string(c)) + " " + std::to_string(s.count(c));
  }
  out += "\n";
  std::uint64_t budget = 0;
  for (const auto& row : report.rows) budget += row.tally.budget_exceeded;
  if (budget) out += "  budget aborts " + std::to_string(budget) + "\n";
  if (report.wall_clock_seconds) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "  wall clock %.2f s\n", *report.wall_clock_seconds);
    out += buf;
  }
  return out;
}

}  // namespace attract
