#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mlingam/rng.hpp"

namespace mlingam {

// Candidate causal direction between the two columns of a pair.
// M1: column 1 -> column 2 (column 2 does not cause column 1).
// M2: column 2 -> column 1.
enum class DirectionModel { M1, M2 };

enum class PriorFamily { StudentT, Gaussian };
enum class ErrorFamily { Laplace, Gaussian };

const char* to_string(DirectionModel m);
const char* to_string(PriorFamily f);
const char* to_string(ErrorFamily f);

// n observations of one ordered variable pair, stored column-wise.
struct PairDataset {
  std::vector<double> x1;
  std::vector<double> x2;
  std::array<std::string, 2> labels{"x1", "x2"};

  std::size_t n() const noexcept { return x1.size(); }

  // Columns and labels exchanged.
  PairDataset swapped() const;
};

// Validates sizes and finiteness; throws std::invalid_argument.
PairDataset make_pair_dataset(std::vector<double> x1, std::vector<double> x2,
                              std::array<std::string, 2> labels = {"x1", "x2"});

// Sample variance with the n-1 divisor; n must be >= 2.
double sample_variance(const std::vector<double>& v);

// One draw of the pair model's parameters. b is the causal coefficient of the
// direction being scored (col1 -> col2 under M1, col2 -> col1 under M2); h1,
// h2 enter the error densities through their absolute values. mu_tilde holds
// the per-observation effects, one value per row and column.
struct ParamDraw {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double b = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  std::vector<double> mu_tilde1;
  std::vector<double> mu_tilde2;
};

// Indices into HyperParams::tau_cmmn.
enum TauCmmnIndex { kTauMu1 = 0, kTauMu2, kTauB12, kTauB21, kTauH1, kTauH2 };

struct HyperParams {
  // Prior variances for (mu1, mu2, b12, b21, h1, h2).
  std::array<double, 6> tau_cmmn{100, 100, 100, 100, 100, 100};
  // Prior variances of the two per-observation effect columns; 0 disables.
  double tau_indvdl1 = 0.0;
  double tau_indvdl2 = 0.0;
  // Correlation parameter of the per-observation effect prior, in (-1, 1).
  double sigma12 = 0.0;
  PriorFamily prior_family = PriorFamily::StudentT;
  int nu = 6;
  ErrorFamily error_family = ErrorFamily::Laplace;

  void validate() const;  // throws std::invalid_argument
};

// Columns of implied error realizations under the given direction.
struct ResidualMatrix {
  std::vector<double> e1;
  std::vector<double> e2;
};

ResidualMatrix residuals(const PairDataset& data, DirectionModel model,
                         const ParamDraw& draw);

// Sum over observations of the two error log-densities at the residuals.
// Laplace errors use scale |h_l|/sqrt(2) (variance h_l^2); Gaussian errors
// use standard deviation |h_l|. |h_l| below 1e-12 scores -inf so that Monte
// Carlo averaging over prior draws stays total.
double log_likelihood(const PairDataset& data, DirectionModel model,
                      const ParamDraw& draw, const HyperParams& hyper);

// One draw from the prior: Gaussian common effects, then n i.i.d. rows of
// per-observation effects from the chosen family. When both tau_indvdl are 0
// the row stage is skipped entirely and consumes no randomness.
ParamDraw sample_prior(const HyperParams& hyper, DirectionModel model,
                       std::size_t n, Rng& rng);
ParamDraw sample_prior(const HyperParams& hyper, DirectionModel model,
                       std::size_t n, RngStream stream);

// In-place variant reusing the draw's buffers; skips hyper validation so it
// can sit inside the Monte Carlo loop.
void sample_prior_into(ParamDraw& draw, const HyperParams& hyper,
                       DirectionModel model, std::size_t n, Rng& rng);

// Scale-tracking defaults for the common-effect prior variances:
// 10^2 * var(x1) for (mu1, b12, h1) and 10^2 * var(x2) for (mu2, b21, h2).
std::array<double, 6> default_tau_cmmn(const PairDataset& data);

}  // namespace mlingam
