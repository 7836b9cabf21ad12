#include "qfactor_cli/config.hpp"

#include <map>

#include <CLI11.hpp>

namespace qfactor::cli {
namespace {

constexpr const char* kFooter =
    "CSV columns: trial,seed,lhs,rhs,error_factor,margin,status\n"
    "  status: pass | fail (margin < -tolerance) | vacuous (error_factor <= 0) | skipped\n"
    "  summary and decay blocks follow as '#' sections; JSON mirrors them under \"rows\" and \"summary\".\n"
    "Seeds: trial k uses derive_seed(seed, k); rho from derive_seed(trial, 0), reference from derive_seed(trial, 1).\n"
    "Output: --output, else $QFACTOR_OUTPUT_DIR/<command>.<format>, else stdout.\n"
    "Exit codes: 0 no fail rows, 1 fail rows, 2 usage error, 3 unwritable output.";

struct Flags {
  std::vector<int> dims;
  CampaignConfig config;
  std::string format = "csv";
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--dims", f.dims, "Site dimensions, comma separated (product <= 64)")->delimiter(',');
  sub->add_option("--trials", f.config.trials, "Number of trials")->capture_default_str();
  sub->add_option("--seed", f.config.seed, "Root seed")->capture_default_str();
  sub->add_option("--eps", f.config.eps_depolarize, "Depolarizing weight for near-pure samples")
      ->capture_default_str();
  sub->add_option("--tolerance", f.config.tolerance, "Margin below -tolerance counts as fail")->capture_default_str();
  sub->add_option("--output", f.config.output_path, "Report file");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--t-max", f.config.t_max, "evolve: final time")->capture_default_str();
  sub->add_option("--steps", f.config.steps, "evolve: grid intervals")->capture_default_str();
  sub->add_option("--threads", f.config.threads, "Worker threads")->capture_default_str();
}

std::vector<int> default_dims(Command c) {
  switch (c) {
    case Command::QfExpectation:
    case Command::Evolve:
    case Command::LsEstimate: return {2, 2};
    default: return {2, 2, 2};
  }
}

int min_sites(Command c) {
  switch (c) {
    case Command::CompareCre: return 3;
    case Command::QfOverlap:
    case Command::QfExpectation: return 2;
    default: return 1;
  }
}

void validate(CampaignConfig& c, const std::string& usage) {
  const auto fail = [&](const std::string& why) { throw UsageError(kExitUsage, why + "\n" + usage); };
  if (c.trials < 1) fail("--trials must be at least 1");
  if (!(c.tolerance > 0.0)) fail("--tolerance must be positive");
  if (!(c.eps_depolarize >= 0.0 && c.eps_depolarize <= 1.0)) fail("--eps must lie in [0, 1]");
  if (!(c.t_max > 0.0)) fail("--t-max must be positive");
  if (c.steps < 1) fail("--steps must be at least 1");
  if (c.threads < 1) fail("--threads must be at least 1");
  if (c.dims.empty()) c.dims = default_dims(c.command);
  long long total = 1;
  for (int d : c.dims) {
    if (d < 2) fail("--dims entries must be at least 2");
    total *= d;
    if (total > kMaxTotalDim) fail("--dims product exceeds " + std::to_string(kMaxTotalDim));
  }
  if (static_cast<int>(c.dims.size()) < min_sites(c.command))
    fail(std::string(command_name(c.command)) + " needs at least " + std::to_string(min_sites(c.command)) + " sites");
}

}  // namespace

CampaignConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Quasi-factorization and heat-bath verification campaigns", "qfactor"};
  app.footer(kFooter);
  app.require_subcommand(1);

  const std::vector<std::pair<Command, const char*>> commands{
      {Command::QfProduct, "D <= sum of single-site conditional divergences, product sigma"},
      {Command::QfOverlap, "(1 - 2||H||) D <= D_AB + D_BC, correlated sigma"},
      {Command::QfExpectation, "(1 - xi) D <= D^E_A + D^E_B and the chain behind it"},
      {Command::CompareCre, "I(A:C|B) vs D(rho || rho-built Petz state) on near-pure states"},
      {Command::Evolve, "Heat-bath decay D(rho_t||sigma) <= D(rho_0||sigma) e^{-t}"},
      {Command::LsEstimate, "Sampled and refined log-Sobolev constant"},
      {Command::QuadSelftest, "beta0 quadrature checks"},
  };
  std::vector<std::unique_ptr<Flags>> storage;
  std::map<CLI::App*, Flags*> flags_of;
  for (const auto& [cmd, description] : commands) {
    CLI::App* sub = app.add_subcommand(command_name(cmd), description);
    storage.push_back(std::make_unique<Flags>());
    storage.back()->config.command = cmd;
    add_flags(sub, *storage.back());
    flags_of[sub] = storage.back().get();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    throw UsageError(0, target->help());
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(0, app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(kExitUsage, std::string(e.what()) + "\n" + app.help());
  }

  CLI::App* chosen = app.get_subcommands().front();
  Flags& f = *flags_of.at(chosen);
  CampaignConfig config = f.config;
  config.dims = f.dims;
  config.format = f.format == "json" ? Format::Json : Format::Csv;
  validate(config, chosen->help());
  return config;
}

}  // namespace qfactor::cli
