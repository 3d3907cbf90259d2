#include "mlingam/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mlingam/csv.hpp"
#include "mlingam/direction.hpp"
#include "mlingam/report.hpp"
#include "mlingam/synth.hpp"

namespace mlingam {

namespace {

const char* command_name(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::Estimate:
      return "estimate";
    case RunConfig::Command::Simulate:
      return "simulate";
    case RunConfig::Command::CheckGaussian:
      return "check-gaussian";
  }
  return "?";
}

GridSpec grid_spec_for(const RunConfig& cfg) {
  GridSpec spec = cfg.fast ? GridSpec::fast() : GridSpec{};
  spec.prior_family = cfg.prior;
  spec.error_family = cfg.errors;
  if (!cfg.fast) spec.samples = cfg.samples;
  return spec;
}

std::string direction_arrow(const std::array<std::string, 2>& labels, DirectionModel winner) {
  return winner == DirectionModel::M1 ? labels[0] + "->" + labels[1]
                                      : labels[1] + "->" + labels[0];
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Timed {
  PairReport report;
  double wall_s = 0.0;
};

void print_pair_table(std::ostream& out, const std::vector<Timed>& rows,
                      const std::string& profile) {
  out << "pair            direction     decided  logML(M1)      logML(M2)      "
         "tau1(frac)  tau2(frac)  sigma12  mc_se    wall_s\n";
  for (const auto& [r, wall] : rows) {
    std::ostringstream pair_name;
    pair_name << r.labels[0] << "," << r.labels[1];
    out << std::left << std::setw(16) << pair_name.str() << std::setw(14)
        << direction_arrow(r.labels, r.winner) << std::setw(9) << (r.decided ? "yes" : "no")
        << std::setw(15) << std::setprecision(8) << r.log_ml_m1 << std::setw(15) << r.log_ml_m2
        << std::setw(12) << std::setprecision(3) << r.tau_frac1 << std::setw(12) << r.tau_frac2
        << std::setw(9) << r.sigma12 << std::setw(9) << std::setprecision(3) << r.mc_se
        << std::setprecision(3) << wall << "\n";
  }
  out << "profile: " << profile << "\n";
}

int run_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool gaussian_check) {
  if (cfg.input_path.empty()) throw std::invalid_argument("estimate: --input is required");
  if (!cfg.all_pairs && cfg.pair.size() != 2)
    throw std::invalid_argument("estimate: give --pair A,B or --all-pairs");

  const CsvTable table = ingest_csv(cfg.input_path, cfg.all_pairs ? std::vector<std::string>{}
                                                                  : cfg.pair);
  std::vector<std::array<std::string, 2>> pairs;
  if (cfg.all_pairs) {
    for (std::size_t a = 0; a < table.columns.size(); ++a)
      for (std::size_t b = a + 1; b < table.columns.size(); ++b)
        pairs.push_back({table.columns[a], table.columns[b]});
    if (pairs.empty()) throw std::invalid_argument("all-pairs: need at least 2 columns");
  } else {
    pairs.push_back({cfg.pair[0], cfg.pair[1]});
  }

  const GridSpec spec = grid_spec_for(cfg);
  SearchOptions opts;
  opts.threads = cfg.threads;
  const std::string profile = cfg.fast ? "fast" : "default";
  const std::string command = command_name(cfg.command);

  std::vector<Timed> rows;
  std::vector<PairOutcome> outcomes;
  std::ostringstream jsonl;
  std::size_t pair_index = 0;
  for (const auto& labels : pairs) {
    const auto t0 = std::chrono::steady_clock::now();
    const PairExtract extract = extract_pair(table, labels[0], labels[1]);
    if (extract.rejected > 0)
      err << labels[0] << "," << labels[1] << ": dropped " << extract.rejected
          << " rows with missing or non-numeric entries\n";
    // Every pair gets its own derived scoring seed under the user seed.
    const std::uint64_t pair_seed = RngStream{cfg.seed, 0}.derive(pair_index).stream;

    if (gaussian_check) {
      const auto rec = gaussianity_check(extract.data, spec, pair_seed, opts);
      const double wall = seconds_since(t0);
      nlohmann::ordered_json payload{
          {"labels", {labels[0], labels[1]}},
          {"laplace_best_log_ml", rec.laplace.best_log_ml},
          {"gaussian_best_log_ml", rec.gaussian.best_log_ml},
          {"gaussian_preferred", rec.gaussian_preferred},
          {"laplace", to_json(make_pair_report(labels, rec.laplace))},
          {"gaussian", to_json(make_pair_report(labels, rec.gaussian))},
          {"profile", profile},
      };
      jsonl << jsonl_line(command, cfg.seed, "gaussianity", payload) << "\n";
      if (cfg.format == RunConfig::Format::Table) {
        out << labels[0] << "," << labels[1] << ": laplace best " << std::setprecision(8)
            << rec.laplace.best_log_ml << ", gaussian best " << rec.gaussian.best_log_ml
            << ", gaussian_preferred=" << (rec.gaussian_preferred ? "true" : "false")
            << ", wall_s=" << std::setprecision(3) << wall << "\n";
      }
      err << labels[0] << "," << labels[1] << ": done in " << std::setprecision(3) << wall
          << " s\n";
    } else {
      const auto est = estimate_direction(extract.data, spec, pair_seed, opts);
      const double wall = seconds_since(t0);
      const PairReport report = make_pair_report(labels, est);
      nlohmann::ordered_json payload = to_json(report);
      payload["profile"] = profile;
      jsonl << jsonl_line(command, cfg.seed, "pair_report", payload) << "\n";
      rows.push_back({report, wall});
      outcomes.push_back({labels, est.winner});
      err << labels[0] << "," << labels[1] << ": done in " << std::setprecision(3) << wall
          << " s\n";
    }
    ++pair_index;
  }

  if (cfg.all_pairs && !gaussian_check) {
    const OrderingResult ordering = aggregate_ordering(outcomes);
    nlohmann::ordered_json payload = to_json(ordering);
    payload["note"] = "win-count heuristic";
    jsonl << jsonl_line(command, cfg.seed, "ordering", payload) << "\n";
    if (cfg.format == RunConfig::Format::Table) {
      print_pair_table(out, rows, profile);
      out << "ordering (win-count heuristic):";
      for (std::size_t i = 0; i < ordering.order.size(); ++i)
        out << " " << ordering.order[i] << "(" << ordering.wins[i] << ")";
      out << (ordering.tie_flag ? "  [ties present]" : "") << "\n";
    }
  } else if (cfg.format == RunConfig::Format::Table && !gaussian_check) {
    print_pair_table(out, rows, profile);
  }

  if (cfg.format == RunConfig::Format::JsonLines) out << jsonl.str();
  return kExitOk;
}

int run_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials < 1) throw std::invalid_argument("simulate: --trials must be >= 1");
  if (cfg.n < 3) throw std::invalid_argument("simulate: --n must be >= 3");

  GenConfig gen;
  gen.n = cfg.n;
  gen.q = cfg.q;
  gen.seed = cfg.seed;
  const GridSpec spec = grid_spec_for(cfg);
  SearchOptions opts;
  opts.threads = cfg.threads;
  const std::string profile = cfg.fast ? "fast" : "default";

  const auto t0 = std::chrono::steady_clock::now();
  const SuccessReport report = run_experiment(cfg.trials, gen, spec, cfg.seed, opts);
  const double wall = seconds_since(t0);
  err << "simulate: " << cfg.trials << " trials in " << std::setprecision(4) << wall << " s\n";

  if (cfg.format == RunConfig::Format::JsonLines) {
    const std::string command = command_name(cfg.command);
    for (const auto& rec : report.records)
      out << jsonl_line(command, cfg.seed, "trial", to_json(rec)) << "\n";
    nlohmann::ordered_json summary = to_json(report);
    summary["n"] = cfg.n;
    summary["q"] = cfg.q;
    summary["profile"] = profile;
    out << jsonl_line(command, cfg.seed, "summary", summary) << "\n";
  } else {
    out << "trial  truth  winner  success  best_logML      tau1(frac)  tau2(frac)  sigma12\n";
    for (const auto& rec : report.records) {
      out << std::left << std::setw(7) << rec.index << std::setw(7) << to_string(rec.truth)
          << std::setw(8) << to_string(rec.winner) << std::setw(9)
          << (rec.success ? "yes" : "no") << std::setw(16) << std::setprecision(8)
          << rec.best_log_ml << std::setw(12) << std::setprecision(3) << rec.tau_frac1
          << std::setw(12) << rec.tau_frac2 << rec.sigma12 << "\n";
    }
    out << "successes: " << report.successes << "/" << report.trials << " ("
        << std::fixed << std::setprecision(2) << report.success_pct << "%, se "
        << report.se_pct << ")" << std::defaultfloat << "  profile: " << profile
        << "  wall_s: " << std::setprecision(4) << wall << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffered;
    int code = kExitOk;
    switch (config.command) {
      case RunConfig::Command::Estimate:
        code = run_estimate(config, buffered, err, /*gaussian_check=*/false);
        break;
      case RunConfig::Command::CheckGaussian:
        code = run_estimate(config, buffered, err, /*gaussian_check=*/true);
        break;
      case RunConfig::Command::Simulate:
        code = run_simulate(config, buffered, err);
        break;
    }
    if (code == kExitOk) out << buffered.str();
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace mlingam
