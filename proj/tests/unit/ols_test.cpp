#include <cmath>
#include <random>

#include "doctest.h"
#include "inflanow/errors.hpp"
#include "inflanow/ols.hpp"
#include "support/oracles.hpp"

using namespace inflanow;

namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("exact fit recovers the line") {
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(8, -3.0, 4.0);
  Eigen::MatrixXd X(8, 2);
  X.col(0).setOnes();
  X.col(1) = x;
  Eigen::VectorXd y = (1.0 + 2.0 * x.array()).matrix();
  auto r = fit_ols(y, X, {"const", "x"});
  CHECK(std::abs(r.coefficients[0].estimate - 1.0) < 1e-10);
  CHECK(std::abs(r.coefficients[1].estimate - 2.0) < 1e-10);
  CHECK(r.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("10x3 fixture matches a 50-digit normal-equations evaluation") {
  // Values from tests/oracles/ols_fixture_oracle.py (mpmath, 50 digits).
  const double x1[] = {1.2, 2.3, 3.1, 4.8, 5.0, 6.7, 7.2, 8.9, 9.4, 10.1};
  const double x2[] = {0.5, -1.0, 2.0, 0.3, -0.7, 1.1, 0.0, -2.2, 1.6, 0.9};
  const double yv[] = {3.1, 2.9, 7.4, 7.0, 6.1, 10.3, 9.0, 8.2, 13.9, 13.1};
  Eigen::MatrixXd X(10, 3);
  Eigen::VectorXd y(10);
  for (int i = 0; i < 10; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = x1[i];
    X(i, 2) = x2[i];
    y(i) = yv[i];
  }
  auto r = fit_ols(y, X, {"const", "x1", "x2"});
  const double beta[] = {1.5015040132746777804, 1.0696866987385625959, 1.277740260519839126};
  const double se[] = {0.18646205177161121659, 0.028271441312921397186, 0.068604806628306446084};
  const double t[] = {8.0525983652362729777, 37.836298719218986268, 18.624646337719456214};
  const double p[] = {0.000087411764102607240608, 2.3432780154817315828e-9,
                      3.1927061215443345358e-7};
  for (int j = 0; j < 3; ++j) {
    const auto& c = r.coefficients[static_cast<std::size_t>(j)];
    CHECK(close_rel(c.estimate, beta[j], 1e-8));
    CHECK(close_rel(c.std_error, se[j], 1e-8));
    CHECK(close_rel(c.t_value, t[j], 1e-8));
    CHECK(std::abs(c.p_value - p[j]) <= 1e-8 * p[j]);
    CHECK(c.tier == 3);
  }
  CHECK(close_rel(r.r_squared, 0.99605209594264183269, 1e-8));
  CHECK(close_rel(r.adj_r_squared, 0.99492412335482521346, 1e-8));
  CHECK(close_rel(r.residual_std_error, 0.26235260110883235822, 1e-8));
  CHECK(close_rel(r.f_statistic, 883.0463671733976163, 1e-8));
  CHECK(std::abs(r.f_p_value - 3.8661888535130715781e-9) <= 1e-8 * 3.8661888535130715781e-9);
  CHECK(r.observations == 10);
  CHECK(r.df_residual == 7);
}

TEST_CASE("residuals are orthogonal to every design column") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd X(40, 4);
    Eigen::VectorXd y(40);
    for (int i = 0; i < 40; ++i) {
      X(i, 0) = 1.0;
      for (int j = 1; j < 4; ++j) X(i, j) = 3.0 * n(rng) + j;
      y(i) = n(rng) + X(i, 1);
    }
    auto r = fit_ols(y, X);
    Eigen::VectorXd g = X.transpose() * r.residuals;
    CHECK(g.cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("R2 invariant to affine rescaling; coefficient scales inversely") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXd X(30, 3);
  Eigen::VectorXd y(30);
  for (int i = 0; i < 30; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = n(rng);
    X(i, 2) = n(rng);
    y(i) = 0.5 + 2.0 * X(i, 1) - X(i, 2) + 0.3 * n(rng);
  }
  auto base = fit_ols(y, X);
  Eigen::MatrixXd Xs = X;
  Xs.col(1) = (4.0 * X.col(1).array() + 7.0).matrix();
  auto scaled = fit_ols(y, Xs);
  CHECK(scaled.r_squared == doctest::Approx(base.r_squared).epsilon(1e-12));
  CHECK(scaled.coefficients[1].estimate ==
        doctest::Approx(base.coefficients[1].estimate / 4.0).epsilon(1e-10));
  CHECK(scaled.coefficients[1].t_value == doctest::Approx(base.coefficients[1].t_value).epsilon(1e-10));
}

TEST_CASE("random designs match the long-double oracle") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_int_distribution<int> kdist(2, 5);
  for (int trial = 0; trial < 10; ++trial) {
    int k = kdist(rng);
    int rows = k + 5 + trial;
    Eigen::MatrixXd X(rows, k);
    Eigen::VectorXd y(rows);
    std::vector<std::vector<double>> rowv(static_cast<std::size_t>(rows));
    std::vector<double> yv(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
      X(i, 0) = 1.0;
      for (int j = 1; j < k; ++j) X(i, j) = n(rng);
      y(i) = X.row(i).sum() + n(rng);
      yv[static_cast<std::size_t>(i)] = y(i);
      for (int j = 0; j < k; ++j) rowv[static_cast<std::size_t>(i)].push_back(X(i, j));
    }
    auto r = fit_ols(y, X);
    auto o = oracle::normal_equations(yv, rowv);
    for (int j = 0; j < k; ++j) {
      const auto& c = r.coefficients[static_cast<std::size_t>(j)];
      CHECK(close_rel(c.estimate, o.beta[static_cast<std::size_t>(j)], 1e-8));
      CHECK(close_rel(c.std_error, o.se[static_cast<std::size_t>(j)], 1e-8));
      CHECK(close_rel(c.p_value, o.p[static_cast<std::size_t>(j)], 1e-8));
    }
    CHECK(close_rel(r.f_p_value, o.f_p, 1e-8));
  }
}

TEST_CASE("rank deficiency names the dependent column") {
  Eigen::MatrixXd X(10, 4);
  for (int i = 0; i < 10; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = i;
    X(i, 2) = i * i;
    X(i, 3) = 2.0 * i + 3.0;  // const and x1 combination
  }
  Eigen::VectorXd y = Eigen::VectorXd::LinSpaced(10, 0.0, 1.0);
  try {
    fit_ols(y, X, {"const", "x1", "x2", "x3"});
    FAIL("expected SingularDesignError");
  } catch (const SingularDesignError& e) {
    REQUIRE(e.dependent_columns().size() == 1);
    auto col = e.dependent_columns()[0];
    CHECK((col == "const" || col == "x1" || col == "x3"));
  }
}

TEST_CASE("fit_ols input errors") {
  Eigen::MatrixXd X = Eigen::MatrixXd::Ones(3, 3);
  X(1, 1) = 2;
  X(2, 2) = 3;
  CHECK_THROWS_AS(fit_ols(Eigen::VectorXd::Ones(3), X), DataError);  // n <= k
  CHECK_THROWS_AS(fit_ols(Eigen::VectorXd::Ones(4), Eigen::MatrixXd::Ones(5, 2)), DataError);
  Eigen::MatrixXd no_intercept(6, 2);
  no_intercept << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12;
  CHECK_THROWS_AS(fit_ols(Eigen::VectorXd::Ones(6), no_intercept), DataError);
}

TEST_CASE("significance tiers") {
  CHECK(significance_tier(0.009) == 3);
  CHECK(significance_tier(0.01) == 2);
  CHECK(significance_tier(0.049) == 2);
  CHECK(significance_tier(0.05) == 1);
  CHECK(significance_tier(0.0999) == 1);
  CHECK(significance_tier(0.1) == 0);
  CHECK(significance_tier(std::nan("")) == 0);
  CHECK(stars(3) == "***");
  CHECK(stars(0).empty());
}

TEST_CASE("HC1 covariance matches the sandwich by hand") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXd X(25, 2);
  Eigen::VectorXd y(25);
  for (int i = 0; i < 25; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = n(rng);
    y(i) = 1.0 + X(i, 1) + std::abs(X(i, 1)) * n(rng);
  }
  OlsOptions opts;
  opts.covariance = CovarianceType::hc1;
  auto r = fit_ols(y, X, {}, opts);
  Eigen::MatrixXd bread = (X.transpose() * X).inverse();
  Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(2, 2);
  for (int i = 0; i < 25; ++i) meat += r.residuals(i) * r.residuals(i) * X.row(i).transpose() * X.row(i);
  Eigen::MatrixXd cov = bread * meat * bread * (25.0 / 23.0);
  CHECK(r.coefficients[1].std_error == doctest::Approx(std::sqrt(cov(1, 1))).epsilon(1e-10));
  auto classical = fit_ols(y, X);
  CHECK(classical.coefficients[1].estimate == doctest::Approx(r.coefficients[1].estimate));
  CHECK(classical.f_statistic == doctest::Approx(r.f_statistic));
}
