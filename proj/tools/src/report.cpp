#include "qfactor_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "qfactor_cli/config.hpp"

namespace qfactor::cli {
namespace {

using nlohmann::ordered_json;

std::string extra_value(const std::variant<double, std::uint64_t>& v) {
  if (const auto* seed = std::get_if<std::uint64_t>(&v)) return std::to_string(*seed);
  return format_number(std::get<double>(v));
}

ordered_json json_number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

std::string dims_string(const std::vector<int>& dims) {
  std::string s;
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
  return s;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const CampaignReport& report, const std::string& timestamp) {
  const CampaignConfig& c = report.config;
  if (!timestamp.empty()) out << "# generated " << timestamp << '\n';
  out << "# command " << command_name(c.command) << " dims " << dims_string(c.dims) << " trials " << c.trials
      << " seed " << c.seed << " eps " << format_number(c.eps_depolarize) << " tolerance "
      << format_number(c.tolerance) << '\n';
  out << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.trial << ',' << r.seed << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
        << format_number(r.error_factor) << ',' << format_number(r.margin) << ',' << status_name(r.status) << '\n';
  }
  const Summary& s = report.summary;
  out << "# summary\n";
  out << "# trials," << s.trials << "\n# pass," << s.pass << "\n# fail," << s.fail << "\n# vacuous," << s.vacuous
      << "\n# skipped," << s.skipped << "\n# min_margin," << format_number(s.min_margin) << "\n# worst_trial,"
      << s.worst_trial << "\n# worst_seed," << s.worst_seed << '\n';
  for (const auto& [name, value] : s.extras) out << "# " << name << ',' << extra_value(value) << '\n';
  if (!report.decay.empty()) {
    out << "# decay\n# trial,t,divergence,bound,trace_distance\n";
    for (const auto& d : report.decay) {
      out << "# " << d.trial << ',' << format_number(d.t) << ',' << format_number(d.divergence) << ','
          << format_number(d.bound) << ',' << format_number(d.trace_distance) << '\n';
    }
  }
}

void write_json(std::ostream& out, const CampaignReport& report) {
  const CampaignConfig& c = report.config;
  ordered_json j;
  j["command"] = command_name(c.command);
  j["config"] = {{"dims", c.dims},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"eps", c.eps_depolarize},
                 {"tolerance", c.tolerance},
                 {"t_max", c.t_max},
                 {"steps", c.steps}};
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"trial", r.trial},
                    {"seed", r.seed},
                    {"lhs", json_number(r.lhs)},
                    {"rhs", json_number(r.rhs)},
                    {"error_factor", json_number(r.error_factor)},
                    {"margin", json_number(r.margin)},
                    {"status", status_name(r.status)}});
  }
  j["rows"] = std::move(rows);
  const Summary& s = report.summary;
  ordered_json summary = {{"trials", s.trials},   {"pass", s.pass},
                          {"fail", s.fail},       {"vacuous", s.vacuous},
                          {"skipped", s.skipped}, {"min_margin", json_number(s.min_margin)},
                          {"worst_trial", s.worst_trial}, {"worst_seed", s.worst_seed}};
  for (const auto& [name, value] : s.extras) {
    if (const auto* seed = std::get_if<std::uint64_t>(&value)) summary[name] = *seed;
    else summary[name] = json_number(std::get<double>(value));
  }
  j["summary"] = std::move(summary);
  if (!report.decay.empty()) {
    ordered_json decay = ordered_json::array();
    for (const auto& d : report.decay) {
      decay.push_back({{"trial", d.trial},
                       {"t", d.t},
                       {"divergence", json_number(d.divergence)},
                       {"bound", json_number(d.bound)},
                       {"trace_distance", json_number(d.trace_distance)}});
    }
    j["decay"] = std::move(decay);
  }
  out << j.dump(2) << '\n';
}

std::string resolve_output_path(const CampaignConfig& config) {
  if (!config.output_path.empty()) return config.output_path;
  const char* dir = std::getenv("QFACTOR_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  const std::string file = std::string(command_name(config.command)) + (config.format == Format::Json ? ".json" : ".csv");
  return (std::filesystem::path(dir) / file).string();
}

bool emit_report(const CampaignReport& report, std::ostream& fallback, const std::string& timestamp) {
  const std::string path = resolve_output_path(report.config);
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::out | std::ios::trunc);
    if (!file) return false;
  }
  std::ostream& out = path.empty() ? fallback : file;
  if (report.config.format == Format::Json) write_json(out, report);
  else write_csv(out, report, timestamp);
  out.flush();
  return static_cast<bool>(out);
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CampaignConfig config;
  try {
    config = parse_config(args);
  } catch (const UsageError& e) {
    (e.exit_code() == 0 ? out : err) << e.what() << '\n';
    return e.exit_code();
  }
  // Fail fast on an unwritable destination before running the campaign.
  const std::string path = resolve_output_path(config);
  if (!path.empty()) {
    std::ofstream probe(path, std::ios::out | std::ios::app);
    if (!probe) {
      err << "qfactor: cannot write " << path << '\n';
      return kExitUnwritable;
    }
  }
  const CampaignReport report = run_campaign(config);
  if (!emit_report(report, out, utc_timestamp())) {
    err << "qfactor: cannot write " << path << '\n';
    return kExitUnwritable;
  }
  return report.summary.fail > 0 ? kExitFail : 0;
}

}  // namespace qfactor::cli
