#include "mlingam/marginal.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mlingam/dist.hpp"
#include "mlingam/parallel.hpp"

namespace mlingam {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Standard error of log-mean of weights exp(ll), via the delta method in
// max-shifted space: sd(w) / (sqrt(S) * mean(w)).
double delta_mc_se(const std::vector<double>& ll, double max_ll) {
  const std::size_t s = ll.size();
  if (s < 2 || max_ll == -kInf) return kInf;
  double mean = 0.0;
  for (double v : ll) mean += std::exp(v - max_ll);
  mean /= static_cast<double>(s);
  double acc = 0.0;
  for (double v : ll) {
    const double d = std::exp(v - max_ll) - mean;
    acc += d * d;
  }
  const double sd = std::sqrt(acc / static_cast<double>(s - 1));
  return sd / (std::sqrt(static_cast<double>(s)) * mean);
}
}  // namespace

MarginalEstimate log_marginal(const PairDataset& data, DirectionModel model,
                              const HyperParams& hyper, std::size_t samples,
                              RngStream stream) {
  hyper.validate();
  if (samples < 1) throw std::invalid_argument("log_marginal: samples must be >= 1");
  if (data.n() < 1) throw std::invalid_argument("log_marginal: empty dataset");

  ParamDraw draw;
  std::vector<double> ll(samples);
  double max_ll = -kInf;
  for (std::size_t s = 0; s < samples; ++s) {
    // One substream per draw index, so cells sharing a stream see the same
    // base randomness at the same index regardless of how many values each
    // consumes; under common random numbers this pairs the whole table.
    Rng rng(stream.derive(s));
    sample_prior_into(draw, hyper, model, data.n(), rng);
    ll[s] = log_likelihood(data, model, draw, hyper);
    if (ll[s] > max_ll) max_ll = ll[s];
  }

  MarginalEstimate est;
  est.log_ml = log_mean_exp(ll);
  est.mc_se = delta_mc_se(ll, max_ll);
  est.samples = samples;
  est.stream = stream;
  est.model = model;
  est.hyper = hyper;
  return est;
}

std::vector<MarginalEstimate> score_table(const PairDataset& data,
                                          const std::vector<HyperParams>& grid,
                                          std::size_t samples,
                                          std::uint64_t base_seed,
                                          const ScoreTableOptions& opts) {
  if (grid.empty()) throw std::invalid_argument("score_table: empty grid");
  const RngStream root{base_seed, 0};
  const std::size_t cells = 2 * grid.size();
  std::vector<MarginalEstimate> table(cells);
  parallel_for(cells, opts.threads, [&](std::size_t k) {
    const std::size_t j = k / 2;
    const DirectionModel model = (k % 2 == 0) ? DirectionModel::M1 : DirectionModel::M2;
    // Common random numbers: every cell of the table shares one stream, so
    // the argmax compares paired estimates instead of independent noise.
    const RngStream cell_stream = opts.common_random_numbers ? root : root.derive(k);
    try {
      table[k] = log_marginal(data, model, grid[j], samples, cell_stream);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "score_table: cell " << j << " (" << to_string(model)
          << ", tau1=" << grid[j].tau_indvdl1 << ", tau2=" << grid[j].tau_indvdl2
          << ", sigma12=" << grid[j].sigma12 << ") failed: " << e.what();
      throw std::runtime_error(msg.str());
    }
  });
  return table;
}

}  // namespace mlingam
