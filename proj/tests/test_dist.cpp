#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mlingam/dist.hpp"
#include "stats_util.hpp"

using namespace mlingam;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("laplace_logpdf closed-form values") {
  CHECK(laplace_logpdf(0.0, {0.0, 1.0}) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(laplace_logpdf(1.0, {0.0, 1.0}) ==
        doctest::Approx(-std::log(2.0) - 1.0).epsilon(1e-12));
  // scale 1/sqrt(2) corresponds to unit variance (h = 1)
  CHECK(laplace_logpdf(0.0, {0.0, 1.0 / kSqrt2}) ==
        doctest::Approx(-std::log(kSqrt2)).epsilon(1e-12));

  CHECK_THROWS_AS(laplace_logpdf(kInf, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(laplace_logpdf(0.0, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(laplace_logpdf(0.0, {0.0, -1.0}), std::invalid_argument);
}

TEST_CASE("laplace density integrates to one") {
  const LaplaceParams p{0.7, 0.4};
  const std::size_t points = 200001;
  const double lo = p.mean - 40.0 * p.scale;
  const double hi = p.mean + 40.0 * p.scale;
  const double h = (hi - lo) / static_cast<double>(points - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + h * static_cast<double>(i);
    const double f = std::exp(laplace_logpdf(x, p));
    acc += (i == 0 || i + 1 == points) ? 0.5 * f : f;
  }
  CHECK(acc * h == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sample_laplace moments and contracts") {
  const LaplaceParams p{0.0, 1.0 / kSqrt2};  // variance h^2 = 1
  const auto draws = sample_laplace(p, {42, 0}, 100000);
  const double var = test_stats::variance(draws);
  CHECK(var > 0.97);
  CHECK(var < 1.03);
  CHECK(std::abs(test_stats::mean(draws)) < 0.02);

  CHECK_THROWS_AS(sample_laplace(p, {42, 0}, 0), std::invalid_argument);

  const auto again = sample_laplace(p, {42, 0}, 100000);
  CHECK(draws == again);
  const auto other_stream = sample_laplace(p, {42, 1}, 100000);
  CHECK(draws != other_stream);
}

TEST_CASE("sample_mvt variance, correlation and energy correlation") {
  const std::size_t n = 100000;
  std::vector<double> u1(n), u2(n), sq1(n), sq2(n);

  SUBCASE("uncorrelated components") {
    Rng rng(RngStream{7, 0});
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = sample_mvt({6, 0.0}, rng);
      u1[i] = u[0];
      u2[i] = u[1];
      sq1[i] = u[0] * u[0];
      sq2[i] = u[1] * u[1];
    }
    // nu/(nu-2) = 1.5
    CHECK(test_stats::variance(u1) > 1.44);
    CHECK(test_stats::variance(u1) < 1.56);
    CHECK(test_stats::variance(u2) > 1.44);
    CHECK(test_stats::variance(u2) < 1.56);
    // linearly uncorrelated but dependent: squares covary positively
    CHECK(std::abs(test_stats::correlation(u1, u2)) < 0.02);
    CHECK(test_stats::covariance(sq1, sq2) > 0.0);
  }

  SUBCASE("correlated components") {
    Rng rng(RngStream{8, 0});
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = sample_mvt({6, 0.5}, rng);
      u1[i] = u[0];
      u2[i] = u[1];
    }
    CHECK(test_stats::correlation(u1, u2) == doctest::Approx(0.5).epsilon(0.04));
    CHECK(std::abs(test_stats::correlation(u1, u2) - 0.5) < 0.02);
  }

  SUBCASE("degrees of freedom guard") {
    Rng rng(RngStream{9, 0});
    CHECK_THROWS_AS(sample_mvt({2, 0.0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_mvt({6, 1.0}, rng), std::invalid_argument);
  }
}

TEST_CASE("mvt marginal kurtosis near 3 at nu = 6") {
  const std::size_t n = 1000000;
  Rng rng(RngStream{11, 0});
  std::vector<double> u1(n);
  for (std::size_t i = 0; i < n; ++i) u1[i] = sample_mvt({6, 0.0}, rng)[0];
  const double k = test_stats::excess_kurtosis(u1);
  CHECK(k > 2.4);
  CHECK(k < 3.6);
}

TEST_CASE("sample_mvn moments and degenerate cases") {
  const std::size_t n = 100000;
  std::vector<double> z1(n), z2(n);

  Rng rng(RngStream{21, 0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto z = sample_mvn(Cov2{1.0, 0.0, 1.0}, rng);
    z1[i] = z[0];
    z2[i] = z[1];
  }
  CHECK(test_stats::variance(z1) > 0.97);
  CHECK(test_stats::variance(z1) < 1.03);
  CHECK(test_stats::variance(z2) > 0.97);
  CHECK(test_stats::variance(z2) < 1.03);

  Rng rng2(RngStream{22, 0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto z = sample_mvn(Cov2{1.0, 0.9, 1.0}, rng2);
    z1[i] = z[0];
    z2[i] = z[1];
  }
  CHECK(std::abs(test_stats::correlation(z1, z2) - 0.9) < 0.01);

  Rng rng3(RngStream{23, 0});
  const auto zero = sample_mvn(Cov2{0.0, 0.0, 0.0}, rng3);
  CHECK(zero[0] == 0.0);
  CHECK(zero[1] == 0.0);

  CHECK_THROWS_AS(sample_mvn(Cov2{1.0, 2.0, 1.0}, rng3), std::invalid_argument);
  CHECK_THROWS_AS(sample_mvn(Cov2{-1.0, 0.0, 1.0}, rng3), std::invalid_argument);
}

TEST_CASE("log_mean_exp values and stability") {
  CHECK(log_mean_exp({3.5, 3.5, 3.5}) == 3.5);
  CHECK(log_mean_exp({-120.0, -120.0}) == -120.0);
  CHECK(log_mean_exp({0.0, std::log(3.0)}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(log_mean_exp({-1000.0, 0.0}) ==
        doctest::Approx(std::log(0.5)).epsilon(1e-9));
  CHECK(std::isfinite(log_mean_exp({-1000.0, 0.0})));

  CHECK(log_mean_exp({-kInf, -kInf}) == -kInf);
  CHECK(log_mean_exp({-kInf, 1.0}) ==
        doctest::Approx(1.0 + std::log(0.5)).epsilon(1e-12));

  CHECK_THROWS_AS(log_mean_exp({}), std::invalid_argument);
  CHECK_THROWS_AS(log_mean_exp({1.0, kInf}), std::invalid_argument);
  CHECK_THROWS_AS(log_mean_exp({std::nan("")}), std::invalid_argument);
}

TEST_CASE("log_mean_exp never exceeds the maximum") {
  Rng rng(RngStream{31, 0});
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> v(1 + static_cast<std::size_t>(rng.uniform() * 20));
    double mx = -kInf;
    for (auto& x : v) {
      x = 500.0 * (rng.uniform() - 0.5);
      mx = std::max(mx, x);
    }
    const double lme = log_mean_exp(v);
    CHECK(lme <= mx);
    bool all_equal = true;
    for (double x : v) all_equal = all_equal && x == v[0];
    if (all_equal)
      CHECK(lme == mx);
    else if (v.size() > 1)
      CHECK(lme < mx);
  }
}

TEST_CASE("samplers are pure functions of the stream") {
  const RngStream s{123, 456};
  CHECK(sample_mvt({6, 0.3}, s) == sample_mvt({6, 0.3}, s));
  CHECK(sample_mvn(Cov2{1.0, 0.2, 1.0}, s) == sample_mvn(Cov2{1.0, 0.2, 1.0}, s));
  CHECK(sample_laplace({0.0, 1.0}, s, 16) == sample_laplace({0.0, 1.0}, s, 16));
  CHECK(s.derive(5) == s.derive(5));
  CHECK(s.derive(5) != s.derive(6));
}
