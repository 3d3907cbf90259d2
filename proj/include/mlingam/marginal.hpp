#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlingam/model.hpp"
#include "mlingam/rng.hpp"

namespace mlingam {

// Monte Carlo estimate of the log-marginal likelihood of one
// (direction, hyperparameter) cell. The constant terms log p(M_r) (uniform)
// and log p(D) are omitted; they cancel in every comparison the estimate
// feeds.
struct MarginalEstimate {
  double log_ml = 0.0;
  // Delta-method standard error of log_ml; +inf when no variance information
  // exists (a single sample, or every draw scored -inf).
  double mc_se = 0.0;
  std::size_t samples = 0;
  RngStream stream;
  DirectionModel model = DirectionModel::M1;
  HyperParams hyper;
};

// Plain prior Monte Carlo: draw theta from the prior `samples` times, average
// the likelihoods in log space. Deterministic given the stream.
MarginalEstimate log_marginal(const PairDataset& data, DirectionModel model,
                              const HyperParams& hyper, std::size_t samples,
                              RngStream stream);

struct ScoreTableOptions {
  // Share one stream between the two models at each grid point, reducing the
  // variance of their comparison. Off by default: every cell independent.
  bool common_random_numbers = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// One MarginalEstimate per (model, grid point) cell, ordered by grid index
// with M1 before M2. Cell streams derive from {base_seed, 0}, so the table is
// reproducible regardless of thread count.
std::vector<MarginalEstimate> score_table(const PairDataset& data,
                                          const std::vector<HyperParams>& grid,
                                          std::size_t samples,
                                          std::uint64_t base_seed,
                                          const ScoreTableOptions& opts = {});

}  // namespace mlingam
