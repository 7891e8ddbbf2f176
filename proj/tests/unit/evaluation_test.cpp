#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "inflanow/errors.hpp"
#include "inflanow/evaluation.hpp"
#include "inflanow/transforms.hpp"
#include "support/oracles.hpp"

using namespace inflanow;

namespace {

// Frozen from an independent numpy/scipy computation.
const std::vector<double> kErrA{0.9, -1.2, 0.4, 1.5, -0.3, 0.8, -2.1, 0.6, 1.1, -0.5, 0.2, -1.4};
const std::vector<double> kErrB{0.7, -0.9, 0.6, 1.1, -0.2, 1.0, -1.6, 0.4, 0.9, -0.8, 0.1, -1.0};

ForecastSeries make_series(std::string name, MonthKey start, const std::vector<double>& errors) {
  ForecastSeries f{std::move(name), {}};
  for (std::size_t i = 0; i < errors.size(); ++i) {
    ForecastRow r;
    r.month = start.plus(static_cast<int>(i));
    r.realized = 2.0 + 0.1 * static_cast<double>(i);
    r.nowcast = r.realized + errors[i];
    r.realized_annualized = annualize(r.realized);
    r.nowcast_annualized = annualize(r.nowcast);
    f.rows.push_back(r);
  }
  return f;
}

}  // namespace

TEST_CASE("rmse") {
  std::vector<double> f{3.0, 0.0}, y{0.0, 4.0};
  CHECK(rmse(f, y) == doctest::Approx(3.535533905932737622).epsilon(1e-15));
  std::vector<double> e{3.0, -4.0};
  CHECK(rmse(e) == doctest::Approx(3.535533905932737622).epsilon(1e-15));
  std::vector<double> zero{1.5, 2.5};
  CHECK(rmse(zero, zero) == 0.0);
  CHECK_THROWS_AS(rmse(std::vector<double>{}), DataError);
  CHECK_THROWS_AS(rmse(f, std::vector<double>{1.0}), DataError);
}

TEST_CASE("Giacomini-White frozen values") {
  auto u = giacomini_white(kErrA, kErrB);
  CHECK(u.df == 1);
  CHECK(u.observations == 12);
  CHECK(u.statistic == doctest::Approx(4.329280963707998).epsilon(1e-12));
  CHECK(u.p_value == doctest::Approx(0.03746206795939502).epsilon(1e-10));

  auto hac = giacomini_white(kErrA, kErrB, GWVariant::unconditional, 2);
  CHECK(hac.statistic == doctest::Approx(11.280023086753971).epsilon(1e-12));
  CHECK(hac.p_value == doctest::Approx(0.0007834558223683771).epsilon(1e-10));

  auto c = giacomini_white(kErrA, kErrB, GWVariant::conditional_lag1);
  CHECK(c.df == 2);
  CHECK(c.statistic == doctest::Approx(2.932254094140996).epsilon(1e-12));
  CHECK(c.p_value == doctest::Approx(0.2308177024105466).epsilon(1e-10));
}

TEST_CASE("unconditional statistic is n mean^2 / variance") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> z(0.3, 1.0);
  std::vector<double> d(40);
  for (auto& v : d) v = z(rng);
  double mean = 0;
  for (double v : d) mean += v;
  mean /= 40;
  double var = 0;
  for (double v : d) var += (v - mean) * (v - mean);
  var /= 40;
  auto r = giacomini_white_differential(d);
  CHECK(r.statistic == doctest::Approx(40 * mean * mean / var).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(oracle::chi2_upper(r.statistic, 1)).epsilon(1e-10));
  CHECK(r.mean_differential == doctest::Approx(mean).epsilon(1e-14));
}

TEST_CASE("identical errors give a zero statistic") {
  for (auto variant : {GWVariant::unconditional, GWVariant::conditional_lag1}) {
    auto r = giacomini_white(kErrA, kErrA, variant);
    CHECK(r.statistic == 0.0);
    CHECK(r.p_value == 1.0);
  }
}

TEST_CASE("constant non-zero differential is degenerate") {
  std::vector<double> d(12, 0.25);
  CHECK_THROWS_AS(giacomini_white_differential(d), DegenerateDifferentialError);
  CHECK_THROWS_AS(giacomini_white_differential(d, GWVariant::conditional_lag1),
                  DegenerateDifferentialError);
}

TEST_CASE("GW symmetry, scale invariance and p-value monotonicity") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> z(0.0, 1.0);
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<double> a(30), b(30);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = z(rng);
      b[i] = 0.8 * z(rng);
    }
    for (auto variant : {GWVariant::unconditional, GWVariant::conditional_lag1}) {
      auto ab = giacomini_white(a, b, variant);
      auto ba = giacomini_white(b, a, variant);
      CHECK(ab.statistic == doctest::Approx(ba.statistic).epsilon(1e-12));
      CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));

      std::vector<double> a3, b3;
      for (std::size_t i = 0; i < a.size(); ++i) {
        a3.push_back(3.0 * a[i]);
        b3.push_back(3.0 * b[i]);
      }
      auto scaled = giacomini_white(a3, b3, variant);
      CHECK(scaled.statistic == doctest::Approx(ab.statistic).epsilon(1e-10));
    }
  }
  std::vector<double> d{1.0, 0.3, 0.9, 1.4, 0.2, 0.7, 1.1, 0.5, 0.8, 1.2};
  double last_p = 1.0;
  for (double shift : {0.0, 0.5, 1.0, 2.0}) {
    std::vector<double> s;
    for (double v : d) s.push_back(v - 0.81 + shift);
    auto r = giacomini_white_differential(s);
    CHECK(r.p_value <= last_p);
    last_p = r.p_value;
  }
}

TEST_CASE("GW sample-size requirements") {
  std::vector<double> seven(kErrA.begin(), kErrA.begin() + 7), seven_b(kErrB.begin(), kErrB.begin() + 7);
  CHECK_THROWS_AS(giacomini_white(seven, seven_b), DataError);
  std::vector<double> eight(kErrA.begin(), kErrA.begin() + 8), eight_b(kErrB.begin(), kErrB.begin() + 8);
  CHECK_NOTHROW(giacomini_white(eight, eight_b));
  CHECK_THROWS_AS(giacomini_white(eight, eight_b, GWVariant::conditional_lag1), DataError);
  CHECK_THROWS_AS(giacomini_white(kErrA, seven), DataError);
}

TEST_CASE("option parsing") {
  CHECK(parse_gw_variant("conditional-lag1") == GWVariant::conditional_lag1);
  CHECK(to_string(GWVariant::unconditional) == "unconditional");
  CHECK(parse_eval_target("monthly") == EvalTarget::monthly);
  CHECK(parse_rmse_unit("percent") == RmseUnit::percent);
  CHECK_THROWS_AS(parse_gw_variant("lag2"), ConfigError);
  CHECK_THROWS_AS(parse_rmse_unit("bps"), ConfigError);
}

TEST_CASE("evaluate scores common months against the first model") {
  auto bench = make_series("fed", MonthKey(2020, 1), kErrA);
  auto other = make_series("fed+news", MonthKey(2020, 1), kErrB);
  std::vector<double> longer_err = kErrB;
  longer_err.insert(longer_err.begin(), 0.5);
  auto shifted = make_series("news", MonthKey(2019, 12), longer_err);

  EvaluationOptions monthly{EvalTarget::monthly, RmseUnit::percent};
  std::vector<ForecastSeries> all{bench, other, shifted};
  auto report = evaluate(all, monthly);
  CHECK(report.months.size() == 12);
  REQUIRE(report.models.size() == 3);
  CHECK_FALSE(report.models[0].vs_benchmark.has_value());
  CHECK(report.models[0].rmse == doctest::Approx(rmse(kErrA)).epsilon(1e-14));
  REQUIRE(report.models[1].vs_benchmark.has_value());
  CHECK(report.models[1].vs_benchmark->p_value ==
        doctest::Approx(0.03746206795939502).epsilon(1e-10));
  CHECK(report.pairs.size() == 3);
  CHECK(report.pairs[2].model_a == "fed+news");
  CHECK(report.pairs[2].model_b == "news");
  CHECK(std::abs(report.pairs[2].result.mean_differential) < 1e-12);

  EvaluationOptions frac{EvalTarget::monthly, RmseUnit::fraction};
  auto fr = evaluate(all, frac);
  CHECK(fr.models[0].rmse == doctest::Approx(report.models[0].rmse / 100).epsilon(1e-14));

  auto annual = evaluate(all);
  auto ld = loss_differential(bench, other);
  CHECK(ld.errors_a.front() ==
        doctest::Approx((bench.rows[0].nowcast_annualized - bench.rows[0].realized_annualized) / 100)
            .epsilon(1e-14));
  CHECK(annual.models[0].rmse == doctest::Approx(rmse(ld.errors_a)).epsilon(1e-14));

  std::vector<ForecastSeries> dup{bench, bench};
  CHECK_THROWS_AS(evaluate(dup), DataError);
  std::vector<ForecastSeries> disjoint{bench, make_series("news", MonthKey(2022, 1), kErrB)};
  CHECK_THROWS_AS(evaluate(disjoint), DataError);
}
