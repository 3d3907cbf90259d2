#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mlingam/marginal.hpp"
#include "mlingam/model.hpp"

namespace mlingam {

// Empirical-Bayes candidate grid over the per-observation effect
// hyperparameters. tau fractions are squared and scaled by the column sample
// variance, so tau_indvdl = frac^2 * var(x_l).
struct GridSpec {
  std::vector<double> tau_fracs{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<double> sigma12_values{0.0, 0.3, -0.3, 0.5, -0.5, 0.7, -0.7, 0.9, -0.9};
  PriorFamily prior_family = PriorFamily::StudentT;
  int nu = 6;
  ErrorFamily error_family = ErrorFamily::Laplace;
  std::size_t samples = 1000;
  // When either tau is 0 the correlation parameter is unidentifiable, so only
  // sigma12 = 0 is kept for those points. Disable to enumerate the full
  // Cartesian product.
  bool deduplicate = true;

  void validate() const;  // throws std::invalid_argument

  // Reduced profile for quick runs: fewer fractions, correlations and
  // samples. Results are not comparable with default-profile output.
  static GridSpec fast();
};

struct SearchOptions {
  bool common_random_numbers = false;
  unsigned threads = 0;
};

// Cartesian product of (tau1, tau2, sigma12) candidates with the degenerate
// points deduplicated; tau_cmmn filled from default_tau_cmmn(data).
std::vector<HyperParams> grid_hyperparams(const PairDataset& data, const GridSpec& spec);

struct DirectionEstimate {
  DirectionModel winner = DirectionModel::M1;
  HyperParams best_hyper;
  double best_log_ml = 0.0;
  // Best cell of the losing model.
  double runner_up_log_ml = 0.0;
  // Grid fractions that produced best_hyper's tau values (NaN if unknown).
  double best_tau_frac1 = 0.0;
  double best_tau_frac2 = 0.0;
  double mc_se_winner = 0.0;
  std::vector<MarginalEstimate> table;
  // False only when the two models' best scores are exactly tied.
  bool decided = true;
};

// Argmax selection over an existing table; the scoring stage is separate so
// the selection rule can be exercised on hand-built tables.
DirectionEstimate select_direction(std::vector<MarginalEstimate> table);

// Score every (model, grid point) cell and select the maximum.
DirectionEstimate estimate_direction(const PairDataset& data, const GridSpec& spec,
                                     std::uint64_t base_seed,
                                     const SearchOptions& opts = {});

// The identical search run under both error families. When the Gaussian
// error model wins, the data carry too little non-Gaussian signal for the
// direction estimate to be trusted.
struct GaussianityRecord {
  DirectionEstimate laplace;
  DirectionEstimate gaussian;
  bool gaussian_preferred = false;
};

GaussianityRecord gaussianity_check(const PairDataset& data, const GridSpec& spec,
                                    std::uint64_t base_seed,
                                    const SearchOptions& opts = {});

// Pairwise result feeding the ordering aggregation.
struct PairOutcome {
  std::array<std::string, 2> labels;
  DirectionModel winner = DirectionModel::M1;
};

struct OrderingResult {
  std::vector<std::string> order;  // upstream first
  std::vector<int> wins;           // aligned with order
  // Set when win counts tie (including cyclic tournaments); the tied span is
  // ordered lexicographically.
  bool tie_flag = false;
};

// Copeland-style aggregation: a variable wins a pair when estimated upstream;
// variables are ranked by descending win count. Requires every unordered pair
// of the label set exactly once.
OrderingResult aggregate_ordering(const std::vector<PairOutcome>& pair_results);

}  // namespace mlingam
