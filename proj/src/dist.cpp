#include "mlingam/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlingam {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double laplace_logpdf(double x, const LaplaceParams& p) {
  if (!std::isfinite(x)) throw std::invalid_argument("laplace_logpdf: x must be finite");
  if (!(p.scale > 0.0) || !std::isfinite(p.scale))
    throw std::invalid_argument("laplace_logpdf: scale must be positive");
  return -std::log(2.0 * p.scale) - std::abs(x - p.mean) / p.scale;
}

double gaussian_logpdf(double x, double mean, double sd) {
  if (!std::isfinite(x)) throw std::invalid_argument("gaussian_logpdf: x must be finite");
  if (!(sd > 0.0) || !std::isfinite(sd))
    throw std::invalid_argument("gaussian_logpdf: sd must be positive");
  constexpr double kLogTwoPi = 1.8378770664093454836;
  const double z = (x - mean) / sd;
  return -0.5 * kLogTwoPi - std::log(sd) - 0.5 * z * z;
}

std::vector<double> sample_laplace(const LaplaceParams& p, RngStream stream,
                                   std::size_t count) {
  if (!(p.scale > 0.0)) throw std::invalid_argument("sample_laplace: scale must be positive");
  if (count == 0) throw std::invalid_argument("sample_laplace: count must be >= 1");
  Rng rng(stream);
  std::vector<double> out(count);
  for (auto& v : out) v = rng.laplace(p.mean, p.scale);
  return out;
}

std::array<double, 2> sample_mvt(const MvtParams& p, Rng& rng) {
  if (p.nu <= 2) throw std::invalid_argument("sample_mvt: nu must exceed 2");
  if (!(std::abs(p.sigma12) < 1.0))
    throw std::invalid_argument("sample_mvt: |sigma12| must be below 1");
  const auto y = sample_mvn(Cov2{1.0, p.sigma12, 1.0}, rng);
  const double v = rng.chi_squared(p.nu);
  const double r = std::sqrt(static_cast<double>(p.nu) / v);
  return {y[0] * r, y[1] * r};
}

std::array<double, 2> sample_mvt(const MvtParams& p, RngStream stream) {
  Rng rng(stream);
  return sample_mvt(p, rng);
}

std::array<double, 2> sample_mvn(const Cov2& sigma, Rng& rng) {
  if (!(sigma.s11 >= 0.0) || !(sigma.s22 >= 0.0))
    throw std::invalid_argument("sample_mvn: negative diagonal");
  if (sigma.s11 == 0.0) {
    if (sigma.s12 != 0.0) throw std::invalid_argument("sample_mvn: covariance not PSD");
    if (sigma.s22 == 0.0) return {0.0, 0.0};
    return {0.0, std::sqrt(sigma.s22) * rng.normal()};
  }
  const double l11 = std::sqrt(sigma.s11);
  const double l21 = sigma.s12 / l11;
  const double rem = sigma.s22 - l21 * l21;
  const double tol = 1e-12 * std::max(1.0, sigma.s22);
  if (rem < -tol) throw std::invalid_argument("sample_mvn: covariance not PSD");
  const double l22 = std::sqrt(std::max(rem, 0.0));
  const double z1 = rng.normal();
  const double z2 = rng.normal();
  return {l11 * z1, l21 * z1 + l22 * z2};
}

std::array<double, 2> sample_mvn(const Cov2& sigma, RngStream stream) {
  Rng rng(stream);
  return sample_mvn(sigma, rng);
}

double log_mean_exp(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("log_mean_exp: empty input");
  double mx = -kInf;
  for (double v : values) {
    if (std::isnan(v) || v == kInf)
      throw std::invalid_argument("log_mean_exp: entries must not be NaN or +inf");
    mx = std::max(mx, v);
  }
  if (mx == -kInf) return -kInf;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - mx);
  return mx + std::log(acc / static_cast<double>(values.size()));
}

}  // namespace mlingam
