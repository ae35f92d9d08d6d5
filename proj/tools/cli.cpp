#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cateval/analysis.hpp"
#include "cateval/data_model.hpp"
#include "cateval/report_io.hpp"
#include "cateval/synth.hpp"

namespace cateval::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, delim)) out.push_back(item);
  if (!s.empty() && s.back() == delim) out.emplace_back();
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(what + ": '" + s + "' is not a number");
  return v;
}

long long to_int(const std::string& s, const std::string& what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(what + ": '" + s + "' is not an integer");
  return v;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw UsageError("--grid expects start:stop:steps");
  try {
    return linear_grid(to_double(parts[0], "--grid start"), to_double(parts[1], "--grid stop"),
                       to_int(parts[2], "--grid steps"));
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("--grid: ") + e.what());
  }
}

// Flags shared by eval, sweep and compare.
struct EvalFlags {
  double alpha = 0.7;
  double beta = 0.5;
  std::string sig;
  std::string format = "table";

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "sig/non-sig weight parameter in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--beta", beta, "sensitivity/specificity balance (> 0)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--sig", sig, "comma-separated sig cohorts");
    cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  }

  EvalConfig config() const {
    EvalConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    for (auto& c : split(sig, ',')) {
      if (!c.empty()) cfg.sig_cohorts.insert(c);
    }
    return cfg;
  }

  OutputFormat output_format() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Table;
  }
};

void warn_unknown_sig(const Dataset& d, const EvalConfig& cfg, std::ostream& err) {
  for (const auto& c : cfg.sig_cohorts) {
    if (!d.cohort_index().contains(c)) err << "warning: sig cohort '" << c << "' not in data\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohort-attention evaluation of binary classifiers on tied data", "cateval"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one prediction file");
  std::string eval_input;
  EvalFlags eval_flags;
  eval_cmd->add_option("input", eval_input, "prediction file")->required();
  eval_flags.attach(eval_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate over an alpha or beta grid");
  std::string sweep_input;
  std::string sweep_param;
  std::string sweep_grid;
  EvalFlags sweep_flags;
  sweep_cmd->add_option("input", sweep_input, "prediction file")->required();
  sweep_cmd->add_option("--param", sweep_param, "alpha or beta")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta"}));
  sweep_cmd->add_option("--grid", sweep_grid, "start:stop:steps")->required();
  sweep_flags.attach(sweep_cmd);

  // curves
  auto* curves_cmd = app.add_subcommand("curves", "Emit variance-ratio or entropy curves");
  std::string which;
  std::string rhos = "0,0.3,0.7";
  long long n_max = 20;
  long long points = 1000;
  std::string curves_format = "table";
  curves_cmd->add_option("--which", which, "variance or entropy")
      ->required()
      ->check(CLI::IsMember({"variance", "entropy"}));
  curves_cmd->add_option("--rhos", rhos, "comma-separated correlations")->capture_default_str();
  curves_cmd->add_option("--nmax", n_max, "largest test count")->capture_default_str();
  curves_cmd->add_option("--points", points, "entropy grid size (>= 2)")->capture_default_str();
  curves_cmd->add_option("--format", curves_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic prediction file");
  std::string preset_name;
  std::uint64_t seed = 42;
  std::string out_path;
  std::optional<long long> n_items;
  std::optional<long long> n_testers;
  std::optional<long long> n_cohorts;
  std::optional<double> pos_ratio;
  std::string precision;
  synth_cmd->add_option("--preset", preset_name, "A or B")->check(CLI::IsMember({"A", "B", "a", "b"}));
  synth_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
  synth_cmd->add_option("--out", out_path, "output file (default: stdout)");
  synth_cmd->add_option("--n-items", n_items, "number of records");
  synth_cmd->add_option("--n-testers", n_testers, "number of distinct tiedIDs");
  synth_cmd->add_option("--n-cohorts", n_cohorts, "number of cohorts");
  synth_cmd->add_option("--pos-ratio", pos_ratio, "record-level positive fraction");
  synth_cmd->add_option("--precision", precision, "lo:hi per-record correctness range");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Compare labeled prediction files");
  std::vector<std::string> labeled;
  EvalFlags compare_flags;
  bool verbose = false;
  compare_cmd->add_option("inputs", labeled, "label=path pairs")->required();
  compare_cmd->add_flag("--verbose,-v", verbose, "include per-cohort rows");
  compare_flags.attach(compare_cmd);

  std::string current_file;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }

    if (eval_cmd->parsed()) {
      const auto cfg = eval_flags.config();
      current_file = eval_input;
      const auto d = load_dataset(eval_input);
      warn_unknown_sig(d, cfg, err);
      write_report(out, evaluate(d, cfg), eval_flags.output_format());
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      const auto grid = parse_grid(sweep_grid);
      const auto param = sweep_param == "alpha" ? SweepParam::Alpha : SweepParam::Beta;
      for (const double v : grid) {
        if (param == SweepParam::Alpha && !(v >= 0.0 && v <= 1.0))
          throw UsageError("--grid: alpha values must lie in [0,1]");
        if (param == SweepParam::Beta && !(v > 0.0))
          throw UsageError("--grid: beta values must be > 0");
      }
      const auto cfg = sweep_flags.config();
      current_file = sweep_input;
      const auto d = load_dataset(sweep_input);
      warn_unknown_sig(d, cfg, err);
      write_sweep(out, sweep(d, param, grid, cfg), sweep_flags.output_format());
      return kExitOk;
    }

    if (curves_cmd->parsed()) {
      const auto fmt = curves_format == "json" ? OutputFormat::Json : OutputFormat::Table;
      if (which == "variance") {
        std::vector<double> rho_values;
        for (const auto& r : split(rhos, ',')) {
          const double v = to_double(r, "--rhos");
          if (!(v >= 0.0 && v <= 1.0)) throw UsageError("--rhos: values must lie in [0,1]");
          rho_values.push_back(v);
        }
        if (rho_values.empty()) throw UsageError("--rhos: at least one value required");
        if (n_max < 1) throw UsageError("--nmax must be >= 1");
        write_curve(out, variance_curves(rho_values, n_max), fmt);
      } else {
        if (points < 2) throw UsageError("--points must be >= 2");
        write_curve(out, entropy_curve(points), fmt);
      }
      return kExitOk;
    }

    if (synth_cmd->parsed()) {
      SynthSpec spec = preset_name.empty() ? preset_a(seed) : preset(preset_name, seed);
      spec.seed = seed;
      if (n_items) spec.n_items = *n_items;
      if (n_testers) spec.n_testers = *n_testers;
      if (n_cohorts) spec.n_cohorts = *n_cohorts;
      if (pos_ratio) spec.positive_ratio = *pos_ratio;
      if (!precision.empty()) {
        const auto parts = split(precision, ':');
        if (parts.size() != 2) throw UsageError("--precision expects lo:hi");
        spec.precision_lo = to_double(parts[0], "--precision lo");
        spec.precision_hi = to_double(parts[1], "--precision hi");
      }
      try {
        spec.validate();
      } catch (const SpecError& e) {
        throw UsageError(e.what());
      }

      const auto d = generate_dataset(spec);
      const auto summary = summarize(d);
      std::ostream* summary_out = &err;
      if (out_path.empty()) {
        write_dataset(out, d);
      } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
          err << "error: cannot write " << out_path << '\n';
          return kExitDataError;
        }
        write_dataset(file, d);
        summary_out = &out;
      }
      *summary_out << "records," << d.size() << '\n'
                   << "testers," << d.tester_count() << '\n'
                   << "cohorts," << d.cohort_count() << '\n'
                   << "positive_fraction," << format_number(summary.positive_fraction) << '\n'
                   << "correctness_rate," << format_number(summary.correctness_rate) << '\n';
      return kExitOk;
    }

    if (compare_cmd->parsed()) {
      std::vector<std::pair<std::string, std::string>> inputs;
      std::map<std::string, int> seen;
      for (const auto& item : labeled) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
          throw UsageError("compare inputs must be label=path, got '" + item + "'");
        std::string label = item.substr(0, eq);
        if (++seen[label] > 1) throw UsageError("duplicate label '" + label + "'");
        inputs.emplace_back(std::move(label), item.substr(eq + 1));
      }
      const auto cfg = compare_flags.config();
      std::vector<LabeledReport> reports;
      for (const auto& [label, path] : inputs) {
        current_file = path;
        const auto d = load_dataset(path);
        warn_unknown_sig(d, cfg, err);
        reports.push_back({label, evaluate(d, cfg)});
      }
      write_comparison(out, compare_report(reports), verbose, compare_flags.output_format());
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << current_file << ": " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << (current_file.empty() ? "" : current_file + ": ") << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace cateval::cli
