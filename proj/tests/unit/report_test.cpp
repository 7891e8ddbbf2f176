#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "inflanow/errors.hpp"
#include "inflanow/nowcaster.hpp"
#include "inflanow/report.hpp"
#include "support/synthetic.hpp"

using namespace inflanow;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<FittedModel> fitted_pair() {
  auto data = synthetic::eq1_bundle(11, MonthKey(2013, 1), 132, 0.064, 0.5);
  MonthWindow train{MonthKey(2015, 1), MonthKey(2019, 12)};
  std::vector<FittedModel> out;
  for (auto name : {ModelName::fed, ModelName::fed_news}) {
    auto spec = model_spec(name);
    out.push_back({spec, fit_model(spec, data, train)});
  }
  return out;
}

}  // namespace

TEST_CASE("regression table layout") {
  auto models = fitted_pair();
  auto text = format_regression_table(models);
  auto ls = lines(text);
  REQUIRE(ls.size() > 10);
  CHECK(ls.front() == std::string(22 + 14 * 2, '='));
  CHECK(text.find("Dependent variable: CPI") != std::string::npos);
  CHECK(text.find("fed+news") != std::string::npos);

  const char* order[] = {"const", "pi-CCPI", "pi-FCPI", "pi-Gasoline", "pi-NEWS", "Observations",
                         "R2", "Adjusted R2", "Residual Std. Error", "F Statistic", "Note:"};
  std::size_t pos = 0;
  for (const char* label : order) {
    auto found = text.find(std::string("\n") + label, pos);
    INFO(label);
    REQUIRE(found != std::string::npos);
    pos = found + 1;
  }
  CHECK(ls.back().find("*p<0.1; **p<0.05; ***p<0.01") != std::string::npos);

  // pi-NEWS appears only in the second column.
  for (const auto& l : ls) {
    if (l.rfind("pi-NEWS", 0) == 0) {
      CHECK(l.substr(22, 14).find_first_not_of(' ') == std::string::npos);
      CHECK(l.size() > 36);
    }
    if (l.rfind("Observations", 0) == 0) {
      CHECK(l.find("60") != std::string::npos);
    }
  }
  CHECK(text.find("(" ) != std::string::npos);
  CHECK(format_regression_table(models) == text);
}

TEST_CASE("regression csv") {
  auto models = fitted_pair();
  std::ostringstream out;
  write_regression_csv(out, models, "inflanow test");
  auto ls = lines(out.str());
  CHECK(ls[0] == "# inflanow test");
  CHECK(ls[1] == "model,term,estimate,std_error,t_value,p_value,stars");
  CHECK(ls.size() == 2 + 4 + 5);
  CHECK(ls[2].rfind("fed,const,", 0) == 0);
  CHECK(ls.back().rfind("fed+news,pi-NEWS,", 0) == 0);

  std::ostringstream stats;
  write_regression_stats_csv(stats, models);
  auto sl = lines(stats.str());
  CHECK(sl.size() == 3);
  CHECK(sl[1].rfind("fed,60,", 0) == 0);
}

TEST_CASE("rmse cell formatting") {
  CHECK(format_rmse_cell(0.04068, std::nullopt) == "0.0407 (--)");
  GWResult gw;
  gw.p_value = 0.19;
  CHECK(format_rmse_cell(0.04068, gw) == "0.0407 (0.19)");
  gw.p_value = 0.03;
  CHECK(format_rmse_cell(0.0312, gw) == "0.0312** (0.03)");
  gw.p_value = 0.004;
  CHECK(format_rmse_cell(0.0312, gw) == "0.0312*** (0.00)");
}

TEST_CASE("forecast csv round trip") {
  auto data = synthetic::eq1_bundle(12, MonthKey(2013, 1), 132);
  MonthWindow train{MonthKey(2015, 1), MonthKey(2019, 12)};
  MonthWindow eval{MonthKey(2020, 1), MonthKey(2023, 12)};
  std::vector<ForecastSeries> fs{backtest(model_spec(ModelName::fed), data, train, eval),
                                 backtest(model_spec(ModelName::fed_news), data, train, eval)};
  std::ostringstream out;
  write_forecasts_csv(out, fs, "c");
  std::istringstream in(out.str());
  auto back = read_forecasts_csv(in);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].model == fs[i].model);
    REQUIRE(back[i].rows.size() == fs[i].rows.size());
    for (std::size_t j = 0; j < fs[i].rows.size(); ++j) {
      CHECK(back[i].rows[j].month == fs[i].rows[j].month);
      CHECK(back[i].rows[j].nowcast == fs[i].rows[j].nowcast);
      CHECK(back[i].rows[j].realized_annualized == fs[i].rows[j].realized_annualized);
    }
  }
  std::istringstream bad("date,model,nowcast,nowcast_annualized,realized,realized_annualized\n"
                         "2020-02,fed,1,1,1,1\n2020-01,fed,1,1,1,1\n");
  CHECK_THROWS_AS(read_forecasts_csv(bad), ParseError);
}

TEST_CASE("evaluation table") {
  auto data = synthetic::eq1_bundle(13, MonthKey(2013, 1), 132, 0.064, 0.5);
  MonthWindow train{MonthKey(2015, 1), MonthKey(2019, 12)};
  MonthWindow eval{MonthKey(2020, 1), MonthKey(2023, 12)};
  std::vector<ForecastSeries> fs;
  for (auto name : {ModelName::fed, ModelName::news, ModelName::fed_news}) {
    fs.push_back(backtest(model_spec(name), data, train, eval));
  }
  auto report = evaluate(fs);
  auto text = format_evaluation_table(report);
  CHECK(text.find("FED+NEWS") != std::string::npos);
  CHECK(text.find("(--)") != std::string::npos);
  CHECK(text.find("48 months") != std::string::npos);

  std::ostringstream csv_out;
  write_evaluation_csv(csv_out, report);
  auto ls = lines(csv_out.str());
  CHECK(ls.size() == 4);
  CHECK(ls[1].rfind("fed,", 0) == 0);
  CHECK(ls[1].find(",fed,,,,,") != std::string::npos);

  std::ostringstream pairs;
  write_gw_pairs_csv(pairs, report);
  CHECK(lines(pairs.str()).size() == 4);
}
