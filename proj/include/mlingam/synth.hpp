#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mlingam/direction.hpp"
#include "mlingam/model.hpp"
#include "mlingam/rng.hpp"

namespace mlingam {

// One entry of the non-Gaussian source catalog (18 standardized
// distributions: heavy-tailed t variants, double exponentials, uniform,
// exponential, and two- and four-component Gaussian mixtures spanning
// multimodal / transitional / unimodal and symmetric / asymmetric shapes).
// Every source has zero mean and unit variance by analytic standardization.
struct SourceDist {
  int id = 1;  // 1..18
  std::string name;
};

const std::vector<SourceDist>& source_catalog();
const SourceDist& source_by_id(int id);  // throws on unknown id

double sample_source(const SourceDist& dist, Rng& rng);
std::vector<double> sample_source(const SourceDist& dist, RngStream stream,
                                  std::size_t count);

// Linear pair generator with q latent confounders:
//   x1 = mu1 + sum_k lambda1k f_k + e1
//   x2 = mu2 + b21 x1 + sum_k lambda2k f_k + e2
// Coefficients have magnitude uniform in (coef_low, coef_high) with random
// sign; error variances are uniform in (err_var_low, err_var_high); all
// source distributions are drawn independently from the catalog; columns are
// presented in a random order with the truth recorded.
struct GenConfig {
  std::size_t n = 100;
  std::size_t q = 0;
  double coef_low = 0.5;
  double coef_high = 1.5;
  double err_var_low = 0.25;   // 0.5^2
  double err_var_high = 2.25;  // 1.5^2
  std::vector<int> source_ids;  // empty = whole catalog
  std::uint64_t seed = 0;       // used by the rng-less gen_pair overload
  bool store_latents = false;   // keep f and e draws in GenTruth

  void validate() const;
};

struct GenTruth {
  // Direction relative to the presented column order.
  DirectionModel true_direction = DirectionModel::M1;
  bool columns_swapped = false;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double b21 = 0.0;
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  double err_sd1 = 0.0;
  double err_sd2 = 0.0;
  int err_source1 = 0;
  int err_source2 = 0;
  std::vector<int> confounder_sources;
  // Populated only when store_latents is set; row-major confounder draws.
  std::vector<std::vector<double>> f;
  std::vector<double> e1;
  std::vector<double> e2;
};

struct GeneratedPair {
  PairDataset data;
  GenTruth truth;
};

GeneratedPair gen_pair(const GenConfig& config, RngStream stream);
GeneratedPair gen_pair(const GenConfig& config);  // stream {config.seed, 0}

// Success-rate experiment: generate, estimate, compare against the recorded
// truth, repeat.
struct TrialRecord {
  std::size_t index = 0;
  DirectionModel truth = DirectionModel::M1;
  DirectionModel winner = DirectionModel::M1;
  bool decided = true;
  bool success = false;
  bool columns_swapped = false;
  double best_log_ml = 0.0;
  double runner_up_log_ml = 0.0;
  double tau_frac1 = 0.0;
  double tau_frac2 = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double sigma12 = 0.0;
};

struct SuccessReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_pct = 0.0;
  double se_pct = 0.0;  // binomial standard error, percentage points
  std::vector<TrialRecord> records;
};

// 100 * sqrt(p(1-p)/trials) with p = successes/trials.
double binomial_se_pct(std::size_t successes, std::size_t trials);

SuccessReport run_experiment(std::size_t trials, const GenConfig& config,
                             const GridSpec& spec, std::uint64_t base_seed,
                             const SearchOptions& opts = {});

}  // namespace mlingam
