#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "inflanow/evaluation.hpp"
#include "inflanow/index_builder.hpp"
#include "inflanow/nowcaster.hpp"
#include "inflanow/ols.hpp"
#include "support/synthetic.hpp"

using namespace inflanow;

static void BM_FitOls(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z;
  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    for (int j = 1; j < k; ++j) X(i, j) = z(rng);
    y(i) = X.row(i).sum() + z(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(fit_ols(y, X));
}
BENCHMARK(BM_FitOls)->Args({60, 4})->Args({60, 5})->Args({600, 5});

static void BM_GiacominiWhite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto variant = state.range(1) ? GWVariant::conditional_lag1 : GWVariant::unconditional;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> z;
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = z(rng);
    b[i] = z(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(giacomini_white(a, b, variant));
}
BENCHMARK(BM_GiacominiWhite)->Args({48, 0})->Args({48, 1})->Args({1000, 0})->Args({1000, 1});

static void BM_MonthlyAggregate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> month(0, 167), day(1, 28);
  std::uniform_real_distribution<double> s(-1.0, 1.0);
  std::vector<ScoredArticle> articles;
  for (std::size_t i = 0; i < n; ++i) {
    articles.push_back({"a", ArticleDate{MonthKey(2010, 1).plus(month(rng)), day(rng)},
                        SentimentProbs(0.2, 0.5, 0.3), s(rng)});
  }
  for (auto _ : state) {
    auto idx = build_news_index(monthly_aggregate(articles, 15));
    benchmark::DoNotOptimize(idx);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_MonthlyAggregate)->Arg(1000)->Arg(100000);

static void BM_Backtest(benchmark::State& state) {
  auto data = synthetic::eq1_bundle(4, MonthKey(2013, 1), 132, synthetic::kFedSigma, 0.3);
  auto spec = model_spec(ModelName::fed_news);
  auto scheme = state.range(0) ? BacktestScheme::rolling : BacktestScheme::fixed;
  MonthWindow train{MonthKey(2015, 1), MonthKey(2019, 12)};
  MonthWindow eval{MonthKey(2020, 1), MonthKey(2023, 12)};
  for (auto _ : state) benchmark::DoNotOptimize(backtest(spec, data, train, eval, scheme));
}
BENCHMARK(BM_Backtest)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
