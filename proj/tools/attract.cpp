// attract: run correctness-attraction campaigns and compare their reports.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "attract/corpus.hpp"
#include "attract/report.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitReference = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw std::runtime_error("cannot write " + path);
  }
}

unsigned default_jobs() {
  const char* env = std::getenv("ATTRACT_JOBS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  if (*end != '\0' || n == 0 || n > 1024) {
    throw attract::UsageError(std::string("ATTRACT_JOBS must be a positive integer, got '") + env + "'");
  }
  return static_cast<unsigned>(n);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct RunArgs {
  std::string subject, model, kind, out, format, annotations;
  std::size_t inputs = 0;
  std::uint64_t seed = 42;
  std::uint64_t budget_factor = attract::BudgetPolicy{}.factor;
  std::uint64_t budget_min = attract::BudgetPolicy{}.minimum;
  unsigned jobs = 0;
  bool timing = false;
  bool quiet = false;
};

int do_run(const RunArgs& a) {
  attract::CampaignConfig config;
  config.subject = a.subject;
  const auto model = attract::parse_model(a.model);
  if (!model) throw attract::UsageError("unknown model '" + a.model + "'");
  config.model = *model;
  if (!a.kind.empty()) {
    const auto kind = attract::parse_kind(a.kind);
    if (!kind) throw attract::UsageError("unknown point kind '" + a.kind + "'");
    config.kind = *kind;
  }
  attract::Format format = ends_with(a.out, ".json") ? attract::Format::Json : attract::Format::Csv;
  if (!a.format.empty()) {
    const auto f = attract::parse_format(a.format);
    if (!f) throw attract::UsageError("unknown format '" + a.format + "'");
    format = *f;
  }
  if (a.budget_factor == 0) throw attract::UsageError("--budget-factor must be positive");
  config.seed = a.seed;
  config.inputs = a.inputs;
  config.budget = {a.budget_factor, a.budget_min};
  config.jobs = a.jobs ? a.jobs : default_jobs();
  config.timing = a.timing;

  attract::Annotations annotations;
  if (!a.annotations.empty()) annotations = attract::parse_annotations(read_file(a.annotations));

  attract::CampaignReport report = attract::run_campaign(config);
  attract::annotate(report, annotations);
  const std::string bytes = attract::emit_table(report, format);
  if (a.out.empty() || a.out == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
  } else {
    write_file(a.out, bytes);
  }
  if (!a.quiet) std::fputs(attract::format_summary(report).c_str(), stderr);
  return 0;
}

int do_list() {
  for (const auto& s : attract::subject_registry()) {
    std::printf("%-10s %3zu int %3zu bool  %s\n", std::string(s.name).c_str(),
                s.count(attract::PointKind::Int), s.count(attract::PointKind::Bool),
                std::string(s.description).c_str());
  }
  return 0;
}

int do_compare(const std::string& a, const std::string& b) {
  const auto before = attract::parse_json_report(read_file(a));
  const auto after = attract::parse_json_report(read_file(b));
  std::fputs(attract::format_drift(attract::compare_reports(before, after)).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correctness attraction campaigns over a bundled corpus"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "explore one subject under one perturbation model");
  run_cmd->add_option("--subject", run.subject, "subject name (see list-subjects)")->required();
  run_cmd->add_option("--model", run.model, "identity, pone, mone, pzero or pbool")->required();
  run_cmd->add_option("--kind", run.kind, "restrict an identity campaign to int or bool points");
  run_cmd->add_option("--inputs", run.inputs, "number of seeded inputs (default: per subject)");
  run_cmd->add_option("--seed", run.seed, "input generator seed")->capture_default_str();
  run_cmd->add_option("--budget-factor", run.budget_factor, "step budget as a multiple of reference hooks")
      ->capture_default_str();
  run_cmd->add_option("--budget-min", run.budget_min, "lower bound on the step budget")->capture_default_str();
  run_cmd->add_option("--out", run.out, "report path, '-' for stdout");
  run_cmd->add_option("--format", run.format, "csv or json (default: from --out extension)");
  run_cmd->add_option("--jobs", run.jobs, "worker threads (default: ATTRACT_JOBS or 1)");
  run_cmd->add_option("--annotations", run.annotations, "sidecar of '<point_id> <label>' lines");
  run_cmd->add_flag("--timing", run.timing, "record wall-clock duration in the report");
  run_cmd->add_flag("-q,--quiet", run.quiet, "no summary on stderr");

  auto* list_cmd = app.add_subcommand("list-subjects", "print the bundled subjects");

  std::string cmp_a, cmp_b;
  auto* cmp_cmd = app.add_subcommand("compare", "per-point drift between two JSON reports");
  cmp_cmd->add_option("a", cmp_a, "earlier report")->required();
  cmp_cmd->add_option("b", cmp_b, "later report")->required();

  app.set_version_flag("--version", std::string(attract::tool_version()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run_cmd) return do_run(run);
    if (*list_cmd) return do_list();
    if (*cmp_cmd) return do_compare(cmp_a, cmp_b);
  } catch (const attract::UsageError& e) {
    std::fprintf(stderr, "attract: %s\n", e.what());
    return kExitUsage;
  } catch (const attract::ReferenceRunFailure& e) {
    std::fprintf(stderr, "attract: %s\n", e.what());
    return kExitReference;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "attract: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
