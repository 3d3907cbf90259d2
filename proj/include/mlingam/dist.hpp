#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mlingam/rng.hpp"

namespace mlingam {

// Classical Laplace parameterization; variance is 2 * scale^2.
struct LaplaceParams {
  double mean = 0.0;
  double scale = 1.0;
};

// Bivariate Student t scale parameters. The 2x2 scale matrix has unit
// diagonal, so the single off-diagonal entry determines it.
struct MvtParams {
  int nu = 6;
  double sigma12 = 0.0;
};

double laplace_logpdf(double x, const LaplaceParams& p);
double gaussian_logpdf(double x, double mean, double sd);

std::vector<double> sample_laplace(const LaplaceParams& p, RngStream stream,
                                   std::size_t count);

// One draw u = y / sqrt(v / nu) with y ~ N(0, Sigma) and v ~ chi^2(nu).
// Component variance is nu/(nu-2); corr(u1, u2) equals sigma12.
std::array<double, 2> sample_mvt(const MvtParams& p, Rng& rng);
std::array<double, 2> sample_mvt(const MvtParams& p, RngStream stream);

// Zero-mean bivariate Gaussian with covariance
// [[s11, s12], [s12, s22]]; the matrix must be positive semi-definite.
struct Cov2 {
  double s11 = 1.0;
  double s12 = 0.0;
  double s22 = 1.0;
};

std::array<double, 2> sample_mvn(const Cov2& sigma, Rng& rng);
std::array<double, 2> sample_mvn(const Cov2& sigma, RngStream stream);

// log((1/S) * sum_s exp(values[s])), shifted by the maximum so that it never
// overflows. All entries equal to -inf yields -inf.
double log_mean_exp(const std::vector<double>& values);

}  // namespace mlingam
