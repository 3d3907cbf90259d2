#include "mlingam/direction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace mlingam {

void GridSpec::validate() const {
  if (tau_fracs.empty() || sigma12_values.empty())
    throw std::invalid_argument("grid spec: empty candidate list");
  if (!std::is_sorted(tau_fracs.begin(), tau_fracs.end()))
    throw std::invalid_argument("grid spec: tau_fracs must be sorted ascending");
  if (tau_fracs.front() != 0.0)
    throw std::invalid_argument("grid spec: tau_fracs must contain 0");
  for (double f : tau_fracs)
    if (!(f >= 0.0) || !std::isfinite(f))
      throw std::invalid_argument("grid spec: tau_fracs must be nonnegative");
  if (std::find(sigma12_values.begin(), sigma12_values.end(), 0.0) == sigma12_values.end())
    throw std::invalid_argument("grid spec: sigma12_values must contain 0");
  for (double s : sigma12_values)
    if (!(std::abs(s) < 1.0))
      throw std::invalid_argument("grid spec: sigma12 values must lie in (-1, 1)");
  if (samples < 1) throw std::invalid_argument("grid spec: samples must be >= 1");
  if (prior_family == PriorFamily::StudentT && nu <= 2)
    throw std::invalid_argument("grid spec: nu must exceed 2");
}

GridSpec GridSpec::fast() {
  GridSpec spec;
  spec.tau_fracs = {0.0, 0.4, 0.8, 1.0};
  spec.sigma12_values = {0.0, 0.5, -0.5, 0.9, -0.9};
  spec.samples = 250;
  return spec;
}

std::vector<HyperParams> grid_hyperparams(const PairDataset& data, const GridSpec& spec) {
  spec.validate();
  const auto tau_cmmn = default_tau_cmmn(data);
  const double v1 = sample_variance(data.x1);
  const double v2 = sample_variance(data.x2);

  std::vector<HyperParams> grid;
  for (double f1 : spec.tau_fracs) {
    for (double f2 : spec.tau_fracs) {
      const bool degenerate = f1 == 0.0 || f2 == 0.0;
      for (double s : spec.sigma12_values) {
        if (spec.deduplicate && degenerate && s != 0.0) continue;
        HyperParams h;
        h.tau_cmmn = tau_cmmn;
        h.tau_indvdl1 = f1 * f1 * v1;
        h.tau_indvdl2 = f2 * f2 * v2;
        h.sigma12 = s;
        h.prior_family = spec.prior_family;
        h.nu = spec.nu;
        h.error_family = spec.error_family;
        grid.push_back(h);
      }
    }
  }
  return grid;
}

namespace {
// Recovers the grid fraction behind a tau value; exact because the candidate
// taus were produced by the same arithmetic.
double recover_frac(double tau, double variance, const std::vector<double>& fracs) {
  for (double f : fracs)
    if (f * f * variance == tau) return f;
  return std::sqrt(tau / variance);
}
}  // namespace

DirectionEstimate select_direction(std::vector<MarginalEstimate> table) {
  if (table.empty()) throw std::invalid_argument("select_direction: empty table");

  std::size_t best_idx = 0;
  double best_m1 = -std::numeric_limits<double>::infinity();
  double best_m2 = best_m1;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto& cell = table[k];
    double& best_model = cell.model == DirectionModel::M1 ? best_m1 : best_m2;
    if (cell.log_ml > best_model) best_model = cell.log_ml;
    if (cell.log_ml > table[best_idx].log_ml) best_idx = k;
  }

  DirectionEstimate est;
  est.winner = table[best_idx].model;
  est.best_hyper = table[best_idx].hyper;
  est.best_log_ml = table[best_idx].log_ml;
  est.runner_up_log_ml = est.winner == DirectionModel::M1 ? best_m2 : best_m1;
  est.mc_se_winner = table[best_idx].mc_se;
  est.decided = best_m1 != best_m2;
  est.best_tau_frac1 = std::numeric_limits<double>::quiet_NaN();
  est.best_tau_frac2 = std::numeric_limits<double>::quiet_NaN();
  est.table = std::move(table);
  return est;
}

DirectionEstimate estimate_direction(const PairDataset& data, const GridSpec& spec,
                                     std::uint64_t base_seed, const SearchOptions& opts) {
  const auto grid = grid_hyperparams(data, spec);
  ScoreTableOptions table_opts;
  table_opts.common_random_numbers = opts.common_random_numbers;
  table_opts.threads = opts.threads;
  auto est = select_direction(score_table(data, grid, spec.samples, base_seed, table_opts));
  est.best_tau_frac1 =
      recover_frac(est.best_hyper.tau_indvdl1, sample_variance(data.x1), spec.tau_fracs);
  est.best_tau_frac2 =
      recover_frac(est.best_hyper.tau_indvdl2, sample_variance(data.x2), spec.tau_fracs);
  return est;
}

GaussianityRecord gaussianity_check(const PairDataset& data, const GridSpec& spec,
                                    std::uint64_t base_seed, const SearchOptions& opts) {
  GridSpec laplace_spec = spec;
  laplace_spec.error_family = ErrorFamily::Laplace;
  GridSpec gaussian_spec = spec;
  gaussian_spec.error_family = ErrorFamily::Gaussian;

  GaussianityRecord rec;
  rec.laplace = estimate_direction(data, laplace_spec, base_seed, opts);
  rec.gaussian = estimate_direction(data, gaussian_spec, base_seed, opts);
  rec.gaussian_preferred = rec.gaussian.best_log_ml > rec.laplace.best_log_ml;
  return rec;
}

OrderingResult aggregate_ordering(const std::vector<PairOutcome>& pair_results) {
  if (pair_results.empty()) throw std::invalid_argument("aggregate_ordering: no results");

  std::set<std::string> label_set;
  for (const auto& pr : pair_results) {
    if (pr.labels[0] == pr.labels[1])
      throw std::invalid_argument("aggregate_ordering: pair with identical labels");
    label_set.insert(pr.labels[0]);
    label_set.insert(pr.labels[1]);
  }
  const std::size_t d = label_set.size();
  if (pair_results.size() != d * (d - 1) / 2)
    throw std::invalid_argument("aggregate_ordering: need every unordered pair exactly once");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& pr : pair_results) {
    auto key = std::minmax(pr.labels[0], pr.labels[1]);
    if (!seen.insert(key).second)
      throw std::invalid_argument("aggregate_ordering: duplicate pair " + key.first + "," +
                                  key.second);
  }

  std::map<std::string, int> wins;
  for (const auto& l : label_set) wins[l] = 0;
  for (const auto& pr : pair_results) {
    const auto& upstream = pr.winner == DirectionModel::M1 ? pr.labels[0] : pr.labels[1];
    ++wins[upstream];
  }

  OrderingResult out;
  for (const auto& [label, count] : wins) {
    out.order.push_back(label);
    out.wins.push_back(count);
  }
  // Descending wins; the map already yields lexicographic order within ties.
  std::vector<std::size_t> idx(out.order.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return out.wins[a] > out.wins[b]; });
  OrderingResult sorted;
  sorted.order.reserve(idx.size());
  sorted.wins.reserve(idx.size());
  for (std::size_t i : idx) {
    sorted.order.push_back(out.order[i]);
    sorted.wins.push_back(out.wins[i]);
  }
  for (std::size_t i = 1; i < sorted.wins.size(); ++i)
    if (sorted.wins[i] == sorted.wins[i - 1]) sorted.tie_flag = true;
  return sorted;
}

}  // namespace mlingam
