// Writes the bundled toy dataset: four monthly price-level series whose
// year-over-year inflation follows the baseline CPI regression, and a file of
// per-article sentiment probabilities.
//
//   inflanow_gen_toy <dir> [seed]

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "inflanow/month.hpp"
#include "inflanow/series.hpp"
#include "inflanow/series_io.hpp"

namespace fs = std::filesystem;
using inflanow::MonthKey;
using inflanow::MonthlySeries;
using inflanow::SeriesUnit;

namespace {

constexpr double kBeta[4] = {0.021, 0.616, 0.186, 0.035};
constexpr double kSigma = 0.064;
const MonthKey kFirstLevel(2013, 1);
const MonthKey kLast(2023, 12);
const MonthKey kFirstNews(2010, 1);

// Smooth bump peaking mid-2022, roughly the shape of the post-pandemic surge.
double surge(MonthKey m) {
  double x = (static_cast<double>(m.ordinal() - MonthKey(2022, 6).ordinal())) / 9.0;
  return std::exp(-0.5 * x * x);
}

std::vector<double> levels_from_rates(const std::vector<double>& base,
                                      const std::vector<double>& rates) {
  std::vector<double> out = base;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    double v = out[i] * (1.0 + rates[i] / 100.0);
    out.push_back(std::round(v * 1e6) / 1e6);
  }
  return out;
}

void write(const fs::path& path, const std::string& name, const std::vector<double>& values,
           const std::string& comment) {
  std::vector<MonthlySeries::Point> pts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    pts.emplace_back(kFirstLevel.plus(static_cast<int>(i)), values[i]);
  }
  std::ofstream out(path, std::ios::binary);
  inflanow::write_series(out, MonthlySeries(name, SeriesUnit::index_level, pts), comment);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: inflanow_gen_toy <dir> [seed]\n";
    return 2;
  }
  fs::path dir = argv[1];
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20240101;
  fs::create_directories(dir);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);

  // Year-over-year rates from 2014-01, one year after the first level.
  const int months = static_cast<int>(inflanow::months_between(kFirstLevel.plus(12), kLast)) + 1;
  std::vector<double> core, food, gas, cpi;
  double c = 0, f = 0, g = 0;
  for (int i = 0; i < months; ++i) {
    MonthKey m = kFirstLevel.plus(12 + i);
    c = 0.92 * c + 0.12 * z(rng);
    f = 0.9 * f + 0.35 * z(rng);
    g = 0.85 * g + 7.0 * z(rng);
    core.push_back(2.0 + c + 3.5 * surge(m));
    food.push_back(1.8 + f + 7.0 * surge(m));
    gas.push_back(2.0 + g + 35.0 * surge(m));
  }
  for (int i = 0; i < months; ++i) {
    cpi.push_back(kBeta[0] + kBeta[1] * core[i] + kBeta[2] * food[i] + kBeta[3] * gas[i] +
                  kSigma * z(rng));
  }

  // First-year levels drift gently upward from their base.
  auto base = [&](double start, double monthly) {
    std::vector<double> out;
    for (int i = 0; i < 12; ++i) out.push_back(std::round(start * std::pow(1 + monthly, i) * 1e6) / 1e6);
    return out;
  };
  std::string comment = fmt::format("synthetic toy data (seed {})", seed);
  write(dir / "cpi.csv", "CPI", levels_from_rates(base(232.0, 0.0012), cpi), comment);
  write(dir / "core_cpi.csv", "CoreCPI", levels_from_rates(base(233.0, 0.0015), core), comment);
  write(dir / "food_cpi.csv", "FoodCPI", levels_from_rates(base(237.0, 0.0010), food), comment);
  write(dir / "gasoline.csv", "Gasoline", levels_from_rates(base(310.0, -0.002), gas), comment);

  // Articles: 4-8 per month, tilted towards "up" so the NEWS level stays positive.
  std::uniform_int_distribution<int> count(4, 8), day(1, 28), early(1, 10);
  std::gamma_distribution<double> down(0.8), neutral(1.5), up(2.6);
  std::ofstream news(dir / "news_probs.csv", std::ios::binary);
  news << "# " << comment << '\n' << "id,date,p_down,p_neutral,p_up\n";
  int id = 0;
  for (MonthKey m = kFirstNews; m <= kLast; m = m.next()) {
    int n = count(rng);
    for (int k = 0; k < n; ++k) {
      // The first article of each month lands before the day-15 cutoff.
      int d = k == 0 ? early(rng) : day(rng);
      double a = down(rng), b = neutral(rng), u = up(rng);
      double s = a + b + u;
      double pd = std::round(a / s * 1e6) / 1e6;
      double pu = std::round(u / s * 1e6) / 1e6;
      double pn = std::round((1.0 - pd - pu) * 1e6) / 1e6;
      news << fmt::format("a{:05d},{}-{:02d},{:.6f},{:.6f},{:.6f}\n", ++id, m.to_string(), d, pd,
                          pn, pu);
    }
  }
  std::cout << fmt::format("wrote {} monthly levels and {} articles to {}\n", months + 12, id,
                           dir.string());
  return 0;
}
