#include "mlingam/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "mlingam/dist.hpp"

namespace mlingam {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHFloor = 1e-12;
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kLogTwoPi = 1.8378770664093454836;

void check_draw(const PairDataset& data, const ParamDraw& draw) {
  if (draw.mu_tilde1.size() != data.n() || draw.mu_tilde2.size() != data.n())
    throw std::invalid_argument("mu_tilde row count does not match dataset");
}
}  // namespace

const char* to_string(DirectionModel m) { return m == DirectionModel::M1 ? "M1" : "M2"; }
const char* to_string(PriorFamily f) { return f == PriorFamily::StudentT ? "t" : "gaussian"; }
const char* to_string(ErrorFamily f) { return f == ErrorFamily::Laplace ? "laplace" : "gaussian"; }

PairDataset PairDataset::swapped() const {
  PairDataset out;
  out.x1 = x2;
  out.x2 = x1;
  out.labels = {labels[1], labels[0]};
  return out;
}

PairDataset make_pair_dataset(std::vector<double> x1, std::vector<double> x2,
                              std::array<std::string, 2> labels) {
  if (x1.size() != x2.size()) throw std::invalid_argument("pair dataset: column length mismatch");
  if (x1.empty()) throw std::invalid_argument("pair dataset: no rows");
  for (double v : x1)
    if (!std::isfinite(v)) throw std::invalid_argument("pair dataset: non-finite entry in column 1");
  for (double v : x2)
    if (!std::isfinite(v)) throw std::invalid_argument("pair dataset: non-finite entry in column 2");
  PairDataset out;
  out.x1 = std::move(x1);
  out.x2 = std::move(x2);
  out.labels = std::move(labels);
  return out;
}

double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("sample_variance: need at least 2 values");
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return acc / static_cast<double>(v.size() - 1);
}

void HyperParams::validate() const {
  for (double t : tau_cmmn)
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument("hyper: tau_cmmn entries must be positive");
  if (!(tau_indvdl1 >= 0.0) || !(tau_indvdl2 >= 0.0))
    throw std::invalid_argument("hyper: tau_indvdl must be nonnegative");
  if (!(std::abs(sigma12) < 1.0)) throw std::invalid_argument("hyper: |sigma12| must be below 1");
  if (prior_family == PriorFamily::StudentT && nu <= 2)
    throw std::invalid_argument("hyper: nu must exceed 2 for the t prior");
}

ResidualMatrix residuals(const PairDataset& data, DirectionModel model,
                         const ParamDraw& draw) {
  check_draw(data, draw);
  const std::size_t n = data.n();
  ResidualMatrix r;
  r.e1.resize(n);
  r.e2.resize(n);
  if (model == DirectionModel::M1) {
    for (std::size_t i = 0; i < n; ++i) {
      r.e1[i] = data.x1[i] - draw.mu1 - draw.mu_tilde1[i];
      r.e2[i] = data.x2[i] - draw.mu2 - draw.mu_tilde2[i] - draw.b * data.x1[i];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      r.e1[i] = data.x1[i] - draw.mu1 - draw.mu_tilde1[i] - draw.b * data.x2[i];
      r.e2[i] = data.x2[i] - draw.mu2 - draw.mu_tilde2[i];
    }
  }
  return r;
}

double log_likelihood(const PairDataset& data, DirectionModel model,
                      const ParamDraw& draw, const HyperParams& hyper) {
  check_draw(data, draw);
  const double a1 = std::abs(draw.h1);
  const double a2 = std::abs(draw.h2);
  if (a1 < kHFloor || a2 < kHFloor) return -kInf;

  const std::size_t n = data.n();
  const double nn = static_cast<double>(n);
  // Absolute (Laplace) or squared (Gaussian) residual totals per column,
  // accumulated in row order so that a column swap commutes exactly.
  double s1 = 0.0, s2 = 0.0;
  const bool m1 = model == DirectionModel::M1;
  if (hyper.error_family == ErrorFamily::Laplace) {
    for (std::size_t i = 0; i < n; ++i) {
      const double e1 = m1 ? data.x1[i] - draw.mu1 - draw.mu_tilde1[i]
                           : data.x1[i] - draw.mu1 - draw.mu_tilde1[i] - draw.b * data.x2[i];
      const double e2 = m1 ? data.x2[i] - draw.mu2 - draw.mu_tilde2[i] - draw.b * data.x1[i]
                           : data.x2[i] - draw.mu2 - draw.mu_tilde2[i];
      s1 += std::abs(e1);
      s2 += std::abs(e2);
    }
    const double scale1 = a1 / kSqrt2;
    const double scale2 = a2 / kSqrt2;
    const double t1 = -nn * std::log(2.0 * scale1) - s1 / scale1;
    const double t2 = -nn * std::log(2.0 * scale2) - s2 / scale2;
    return t1 + t2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double e1 = m1 ? data.x1[i] - draw.mu1 - draw.mu_tilde1[i]
                         : data.x1[i] - draw.mu1 - draw.mu_tilde1[i] - draw.b * data.x2[i];
    const double e2 = m1 ? data.x2[i] - draw.mu2 - draw.mu_tilde2[i] - draw.b * data.x1[i]
                         : data.x2[i] - draw.mu2 - draw.mu_tilde2[i];
    s1 += e1 * e1;
    s2 += e2 * e2;
  }
  const double t1 = -0.5 * nn * kLogTwoPi - nn * std::log(a1) - 0.5 * s1 / (a1 * a1);
  const double t2 = -0.5 * nn * kLogTwoPi - nn * std::log(a2) - 0.5 * s2 / (a2 * a2);
  return t1 + t2;
}

void sample_prior_into(ParamDraw& draw, const HyperParams& hyper,
                       DirectionModel model, std::size_t n, Rng& rng) {
  draw.mu1 = std::sqrt(hyper.tau_cmmn[kTauMu1]) * rng.normal();
  draw.mu2 = std::sqrt(hyper.tau_cmmn[kTauMu2]) * rng.normal();
  const double tau_b =
      model == DirectionModel::M1 ? hyper.tau_cmmn[kTauB21] : hyper.tau_cmmn[kTauB12];
  draw.b = std::sqrt(tau_b) * rng.normal();
  draw.h1 = std::sqrt(hyper.tau_cmmn[kTauH1]) * rng.normal();
  draw.h2 = std::sqrt(hyper.tau_cmmn[kTauH2]) * rng.normal();

  if (hyper.tau_indvdl1 == 0.0 && hyper.tau_indvdl2 == 0.0) {
    // Degenerate prior: no per-observation stage, no randomness consumed, so
    // sigma12 provably cannot influence anything downstream.
    draw.mu_tilde1.assign(n, 0.0);
    draw.mu_tilde2.assign(n, 0.0);
    return;
  }

  draw.mu_tilde1.resize(n);
  draw.mu_tilde2.resize(n);
  const double r1 = std::sqrt(hyper.tau_indvdl1);
  const double r2 = std::sqrt(hyper.tau_indvdl2);
  if (hyper.prior_family == PriorFamily::StudentT) {
    // u ~ t_nu(0, Sigma) scaled by C^{-1/2} = sqrt((nu-2)/nu) so each column
    // has variance tau_indvdl exactly.
    const double c = std::sqrt((hyper.nu - 2.0) / hyper.nu);
    const MvtParams mvt{hyper.nu, hyper.sigma12};
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = sample_mvt(mvt, rng);
      draw.mu_tilde1[i] = r1 * c * u[0];
      draw.mu_tilde2[i] = r2 * c * u[1];
    }
  } else {
    const Cov2 corr{1.0, hyper.sigma12, 1.0};
    for (std::size_t i = 0; i < n; ++i) {
      const auto z = sample_mvn(corr, rng);
      draw.mu_tilde1[i] = r1 * z[0];
      draw.mu_tilde2[i] = r2 * z[1];
    }
  }
}

ParamDraw sample_prior(const HyperParams& hyper, DirectionModel model,
                       std::size_t n, Rng& rng) {
  hyper.validate();
  if (n < 1) throw std::invalid_argument("sample_prior: n must be >= 1");
  ParamDraw draw;
  sample_prior_into(draw, hyper, model, n, rng);
  return draw;
}

ParamDraw sample_prior(const HyperParams& hyper, DirectionModel model,
                       std::size_t n, RngStream stream) {
  Rng rng(stream);
  return sample_prior(hyper, model, n, rng);
}

std::array<double, 6> default_tau_cmmn(const PairDataset& data) {
  if (data.n() < 2) throw std::invalid_argument("default_tau_cmmn: need at least 2 rows");
  const double v1 = sample_variance(data.x1);
  const double v2 = sample_variance(data.x2);
  if (!(v1 > 0.0)) throw std::invalid_argument("default_tau_cmmn: column 1 has zero variance");
  if (!(v2 > 0.0)) throw std::invalid_argument("default_tau_cmmn: column 2 has zero variance");
  const double c1 = 100.0 * v1;
  const double c2 = 100.0 * v2;
  return {c1, c2, c1, c2, c1, c2};
}

}  // namespace mlingam
