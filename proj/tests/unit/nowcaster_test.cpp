#include <cmath>
#include <vector>

#include "doctest.h"
#include "inflanow/errors.hpp"
#include "inflanow/nowcaster.hpp"
#include "inflanow/transforms.hpp"
#include "support/synthetic.hpp"

using namespace inflanow;

namespace {

const MonthKey kStart(2013, 1);
const MonthWindow kTrain{MonthKey(2015, 1), MonthKey(2019, 12)};
const MonthWindow kEval{MonthKey(2020, 1), MonthKey(2023, 12)};

double mean_before(const MonthlySeries& s, MonthKey t) {
  double sum = 0.0;
  for (int k = 1; k <= 12; ++k) sum += s.at(t.plus(-k));
  return sum / 12.0;
}

}  // namespace

TEST_CASE("model specs and their column sets") {
  using enum Regressor;
  CHECK(model_spec(ModelName::fed).regressors == std::vector{core_cpi, food_cpi, gasoline});
  CHECK(model_spec(ModelName::news).regressors == std::vector{news});
  CHECK(model_spec(ModelName::fed_news).regressors == std::vector{core_cpi, food_cpi, gasoline, news});
  CHECK(model_spec(ModelName::fed_gas_news).regressors == std::vector{core_cpi, food_cpi, news});
  CHECK(model_spec(ModelName::ccpi_news).regressors == std::vector{core_cpi, news});
  CHECK(parse_model_spec("fed-gas+news").name == ModelName::fed_gas_news);
  CHECK(parse_model_list("all").size() == 5);
  CHECK(parse_model_list("fed,fed+news").size() == 2);
  CHECK_THROWS_AS(parse_model_spec("fed+gas"), ConfigError);
  CHECK(model_spec(ModelName::fed_news).term_names() ==
        std::vector<std::string>{"const", "pi-CCPI", "pi-FCPI", "pi-Gasoline", "pi-NEWS"});
}

TEST_CASE("fit_model recovers noise-free coefficients") {
  auto data = synthetic::eq1_bundle(1, kStart, 132, 0.0);
  auto r = fit_model(model_spec(ModelName::fed), data, kTrain);
  REQUIRE(r.coefficients.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(std::abs(r.coefficients[j].estimate - synthetic::kFedBeta[j]) < 1e-10);
  }
}

TEST_CASE("fed+news over 60 months has 5 coefficients") {
  auto data = synthetic::eq1_bundle(2, kStart, 132);
  auto r = fit_model(model_spec(ModelName::fed_news), data, kTrain);
  CHECK(r.coefficients.size() == 5);
  CHECK(r.observations == 60);
  CHECK(r.coefficients.back().name == "pi-NEWS");
}

TEST_CASE("news-only spec matches the simple-regression closed form") {
  auto data = synthetic::eq1_bundle(3, kStart, 132, 0.064, 0.4);
  auto r = fit_model(model_spec(ModelName::news), data, kTrain);
  double mx = 0, my = 0;
  for (MonthKey m = kTrain.first; m <= kTrain.last; m = m.next()) {
    mx += data.news->at(m);
    my += data.cpi.at(m);
  }
  mx /= 60;
  my /= 60;
  double sxy = 0, sxx = 0;
  for (MonthKey m = kTrain.first; m <= kTrain.last; m = m.next()) {
    sxy += (data.news->at(m) - mx) * (data.cpi.at(m) - my);
    sxx += (data.news->at(m) - mx) * (data.news->at(m) - mx);
  }
  CHECK(r.coefficients[1].estimate == doctest::Approx(sxy / sxx).epsilon(1e-10));
  CHECK(r.coefficients[0].estimate == doctest::Approx(my - sxy / sxx * mx).epsilon(1e-10));
}

TEST_CASE("adding NEWS never lowers in-sample R2") {
  for (std::uint64_t seed = 10; seed < 30; ++seed) {
    auto data = synthetic::eq1_bundle(seed, kStart, 132);
    auto fed = fit_model(model_spec(ModelName::fed), data, kTrain);
    auto both = fit_model(model_spec(ModelName::fed_news), data, kTrain);
    CHECK(both.r_squared >= fed.r_squared - 1e-12);
  }
}

TEST_CASE("fit_model data errors") {
  auto data = synthetic::eq1_bundle(4, kStart, 132);
  auto holey = data;
  std::vector<MonthlySeries::Point> pts;
  for (const auto& p : data.food_cpi) {
    if (p.first != MonthKey(2016, 5) && p.first != MonthKey(2017, 2)) pts.push_back(p);
  }
  holey.food_cpi = MonthlySeries("FoodCPI", SeriesUnit::percent, pts);
  try {
    fit_model(model_spec(ModelName::fed), holey, kTrain);
    FAIL("expected MissingDataError");
  } catch (const MissingDataError& e) {
    CHECK(e.months() == std::vector<MonthKey>{MonthKey(2016, 5), MonthKey(2017, 2)});
  }
  // ccpi+news does not use food, so the gap is irrelevant
  CHECK_NOTHROW(fit_model(model_spec(ModelName::ccpi_news), holey, kTrain));

  CHECK_THROWS_AS(fit_model(model_spec(ModelName::fed), data,
                            MonthWindow{MonthKey(2015, 1), MonthKey(2015, 5)}),
                  DataError);
  auto no_news = data;
  no_news.news.reset();
  CHECK_THROWS_AS(fit_model(model_spec(ModelName::news), no_news, kTrain), ConfigError);
}

TEST_CASE("nowcast examples") {
  auto data = synthetic::eq1_bundle(5, kStart, 132);
  MonthKey t(2020, 6);

  SUBCASE("intercept only") {
    std::vector<double> beta{0.5, 0.0, 0.0, 0.0};
    CHECK(nowcast(model_spec(ModelName::fed), beta, data, t) == 0.5);
  }
  SUBCASE("hand-evaluated linear combination") {
    std::vector<double> core, food, gas;
    for (int k = 0; k < 24; ++k) {
      core.push_back(1.0 + 0.1 * k);
      food.push_back(2.0 - 0.05 * k);
      gas.push_back(k % 2 ? 10.0 : -4.0);
    }
    MonthKey start(2019, 1);
    SeriesBundle b{synthetic::series("CPI", start, std::vector<double>(24, 0.0)),
                   synthetic::series("CoreCPI", start, core),
                   synthetic::series("FoodCPI", start, food),
                   synthetic::series("Gasoline", start, gas), std::nullopt};
    // Month index 12 (2020-01): lags are indices 0..11.
    // core mean = 1 + 0.1 * 5.5 = 1.55; food mean = 2 - 0.05 * 5.5 = 1.725; gas mean = 3.
    double expected = 0.021 + 0.616 * 1.55 + 0.186 * 1.725 + 0.035 * 3.0;
    std::vector<double> beta(synthetic::kFedBeta.begin(), synthetic::kFedBeta.end());
    CHECK(nowcast(model_spec(ModelName::fed), beta, b, MonthKey(2020, 1)) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("zero NEWS reduces fed+news to fed") {
    auto zeroed = data;
    std::vector<MonthlySeries::Point> pts;
    for (const auto& p : *data.news) pts.emplace_back(p.first, p.first == t ? 0.0 : p.second);
    zeroed.news = MonthlySeries("NEWS", SeriesUnit::percent, pts);
    std::vector<double> five{0.03, 0.6, 0.2, 0.04, 0.9};
    std::vector<double> four(five.begin(), five.end() - 1);
    CHECK(nowcast(model_spec(ModelName::fed_news), five, zeroed, t) ==
          nowcast(model_spec(ModelName::fed), four, zeroed, t));
  }
  SUBCASE("linear in coefficients") {
    std::vector<double> beta{0.03, 0.6, 0.2, 0.04, 0.9};
    std::vector<double> twice;
    for (double b : beta) twice.push_back(2 * b);
    auto spec = model_spec(ModelName::fed_news);
    CHECK(nowcast(spec, twice, data, t) == doctest::Approx(2 * nowcast(spec, beta, data, t)).epsilon(1e-14));
  }
  SUBCASE("uses lags for prices and the contemporaneous NEWS value") {
    auto spec = model_spec(ModelName::fed_news);
    std::vector<double> beta{0.1, 0.2, 0.3, 0.4, 0.5};
    double expected = 0.1 + 0.2 * mean_before(data.core_cpi, t) + 0.3 * mean_before(data.food_cpi, t) +
                      0.4 * mean_before(data.gasoline, t) + 0.5 * data.news->at(t);
    CHECK(nowcast(spec, beta, data, t) == doctest::Approx(expected).epsilon(1e-13));
  }
  SUBCASE("missing inputs") {
    auto spec = model_spec(ModelName::fed_news);
    std::vector<double> beta{0.1, 0.2, 0.3, 0.4, 0.5};
    CHECK_THROWS_AS(nowcast(spec, beta, data, MonthKey(2013, 6)), MissingDataError);
    CHECK_THROWS_AS(nowcast(spec, beta, data, MonthKey(2024, 6)), MissingDataError);
    CHECK_THROWS_AS(nowcast(spec, std::vector<double>{1.0}, data, t), DataError);
  }
}

TEST_CASE("backtest") {
  auto data = synthetic::eq1_bundle(6, kStart, 132);
  auto spec = model_spec(ModelName::fed_news);

  SUBCASE("2015-2019 training, 2020-2023 evaluation") {
    auto f = backtest(spec, data, kTrain, kEval);
    CHECK(f.model == "fed+news");
    REQUIRE(f.rows.size() == 48);
    CHECK(f.rows.front().month == MonthKey(2020, 1));
    CHECK(f.rows.back().month == MonthKey(2023, 12));
    for (const auto& r : f.rows) {
      CHECK(r.nowcast_annualized == annualize(r.nowcast));
      CHECK(r.realized_annualized == annualize(r.realized));
      CHECK(r.realized == data.cpi.at(r.month));
    }
  }
  SUBCASE("single month equals a direct nowcast") {
    MonthWindow one{MonthKey(2021, 3), MonthKey(2021, 3)};
    auto f = backtest(spec, data, kTrain, one);
    REQUIRE(f.rows.size() == 1);
    auto fitted = fit_model(spec, data, kTrain);
    CHECK(f.rows[0].nowcast == nowcast(spec, fitted, data, one.first));
  }
  SUBCASE("fixed scheme is order independent") {
    auto full = backtest(spec, data, kTrain, kEval);
    for (std::size_t i = 0; i < full.rows.size(); i += 7) {
      MonthKey m = full.rows[i].month;
      auto single = backtest(spec, data, kTrain, MonthWindow{m, m});
      CHECK(single.rows[0].nowcast == full.rows[i].nowcast);
    }
  }
  SUBCASE("rolling refits on the trailing window") {
    auto f = backtest(spec, data, kTrain, kEval, BacktestScheme::rolling);
    REQUIRE(f.rows.size() == 48);
    for (std::size_t i = 0; i < f.rows.size(); i += 11) {
      MonthKey m = f.rows[i].month;
      auto fitted = fit_model(spec, data, MonthWindow{m.plus(-60), m.prev()});
      CHECK(f.rows[i].nowcast == nowcast(spec, fitted, data, m));
    }
    auto fixed = backtest(spec, data, kTrain, kEval);
    CHECK(f.rows[0].nowcast == fixed.rows[0].nowcast);  // first trailing window is the training window
    CHECK(f.rows[5].nowcast != fixed.rows[5].nowcast);
  }
  SUBCASE("overlapping windows are rejected") {
    CHECK_THROWS_AS(backtest(spec, data, kTrain, MonthWindow{MonthKey(2019, 12), MonthKey(2020, 6)}),
                    DataError);
  }
}

TEST_CASE("zero-noise backtest errors are pure imputation errors") {
  auto data = synthetic::eq1_bundle(7, kStart, 132, 0.0);
  auto spec = model_spec(ModelName::fed);
  auto f = backtest(spec, data, kTrain, kEval);
  const auto& b = synthetic::kFedBeta;
  for (const auto& row : f.rows) {
    MonthKey t = row.month;
    double replay = b[1] * (mean_before(data.core_cpi, t) - data.core_cpi.at(t)) +
                    b[2] * (mean_before(data.food_cpi, t) - data.food_cpi.at(t)) +
                    b[3] * (mean_before(data.gasoline, t) - data.gasoline.at(t));
    CHECK(std::abs((row.nowcast - row.realized) - replay) < 1e-9);
  }
}
