#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inflanow/index_builder.hpp"
#include "inflanow/series.hpp"

namespace inflanow {

enum class Regressor { core_cpi, food_cpi, gasoline, news };

// Row label used in regression tables: pi-CCPI, pi-FCPI, pi-Gasoline, pi-NEWS.
std::string term_name(Regressor r);
inline constexpr std::string_view kInterceptTerm = "const";

enum class ModelName { fed, news, fed_news, fed_gas_news, ccpi_news };

// A regression of CPI inflation on an intercept plus `regressors`, in order.
struct ModelSpec {
  ModelName name;
  std::vector<Regressor> regressors;

  std::string label() const;  // fed, news, fed+news, fed-gas+news, ccpi+news
  bool uses(Regressor r) const;
  std::size_t columns() const { return regressors.size() + 1; }
  // "const" followed by the regressor term names.
  std::vector<std::string> term_names() const;
};

//   fed           const, CCPI, FCPI, Gasoline
//   news          const, NEWS
//   fed+news      const, CCPI, FCPI, Gasoline, NEWS
//   fed-gas+news  const, CCPI, FCPI, NEWS
//   ccpi+news     const, CCPI, NEWS
ModelSpec model_spec(ModelName name);
// Throws ConfigError for an unknown label.
ModelSpec parse_model_spec(std::string_view label);
// "all" expands to every spec; otherwise a comma-separated list of labels.
std::vector<ModelSpec> parse_model_list(std::string_view text);
const std::array<ModelName, 5>& all_model_names();

struct PriceLevels {
  MonthlySeries cpi;
  MonthlySeries core_cpi;
  MonthlySeries food_cpi;
  MonthlySeries gasoline;
};

// Inflation rates (percent) of the target and every candidate regressor.
struct SeriesBundle {
  MonthlySeries cpi;
  MonthlySeries core_cpi;
  MonthlySeries food_cpi;
  MonthlySeries gasoline;
  std::optional<MonthlySeries> news;

  // Throws ConfigError when asking for news that the bundle does not carry.
  const MonthlySeries& regressor(Regressor r) const;
};

// Applies pct_change with `window` to every price level and news_pi to the
// NEWS index when one is given.
SeriesBundle make_bundle(const PriceLevels& levels, const std::optional<NewsIndex>& news,
                         int window = 12, NewsPiMode news_mode = NewsPiMode::ratio);

}  // namespace inflanow
