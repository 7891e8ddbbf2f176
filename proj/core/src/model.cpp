#include "inflanow/model.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "inflanow/errors.hpp"
#include "inflanow/transforms.hpp"

namespace inflanow {

std::string term_name(Regressor r) {
  switch (r) {
    case Regressor::core_cpi:
      return "pi-CCPI";
    case Regressor::food_cpi:
      return "pi-FCPI";
    case Regressor::gasoline:
      return "pi-Gasoline";
    case Regressor::news:
      return "pi-NEWS";
  }
  return "?";
}

std::string ModelSpec::label() const {
  switch (name) {
    case ModelName::fed:
      return "fed";
    case ModelName::news:
      return "news";
    case ModelName::fed_news:
      return "fed+news";
    case ModelName::fed_gas_news:
      return "fed-gas+news";
    case ModelName::ccpi_news:
      return "ccpi+news";
  }
  return "?";
}

bool ModelSpec::uses(Regressor r) const {
  return std::find(regressors.begin(), regressors.end(), r) != regressors.end();
}

std::vector<std::string> ModelSpec::term_names() const {
  std::vector<std::string> names{std::string(kInterceptTerm)};
  for (auto r : regressors) names.push_back(term_name(r));
  return names;
}

ModelSpec model_spec(ModelName name) {
  using enum Regressor;
  switch (name) {
    case ModelName::fed:
      return {name, {core_cpi, food_cpi, gasoline}};
    case ModelName::news:
      return {name, {news}};
    case ModelName::fed_news:
      return {name, {core_cpi, food_cpi, gasoline, news}};
    case ModelName::fed_gas_news:
      return {name, {core_cpi, food_cpi, news}};
    case ModelName::ccpi_news:
      return {name, {core_cpi, news}};
  }
  throw ConfigError("unknown model");
}

const std::array<ModelName, 5>& all_model_names() {
  static constexpr std::array<ModelName, 5> kAll = {ModelName::fed, ModelName::news,
                                                    ModelName::fed_news, ModelName::fed_gas_news,
                                                    ModelName::ccpi_news};
  return kAll;
}

ModelSpec parse_model_spec(std::string_view label) {
  for (auto name : all_model_names()) {
    auto spec = model_spec(name);
    if (spec.label() == label) return spec;
  }
  throw ConfigError(fmt::format(
      "unknown model spec '{}' (expected fed, news, fed+news, fed-gas+news, ccpi+news or all)",
      label));
}

std::vector<ModelSpec> parse_model_list(std::string_view text) {
  std::vector<ModelSpec> specs;
  if (text == "all") {
    for (auto name : all_model_names()) specs.push_back(model_spec(name));
    return specs;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    specs.push_back(parse_model_spec(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return specs;
}

const MonthlySeries& SeriesBundle::regressor(Regressor r) const {
  switch (r) {
    case Regressor::core_cpi:
      return core_cpi;
    case Regressor::food_cpi:
      return food_cpi;
    case Regressor::gasoline:
      return gasoline;
    case Regressor::news:
      if (!news) throw ConfigError("model needs the NEWS index but none was provided");
      return *news;
  }
  throw ConfigError("unknown regressor");
}

SeriesBundle make_bundle(const PriceLevels& levels, const std::optional<NewsIndex>& news,
                         int window, NewsPiMode news_mode) {
  SeriesBundle bundle{pct_change(levels.cpi, window), pct_change(levels.core_cpi, window),
                      pct_change(levels.food_cpi, window), pct_change(levels.gasoline, window),
                      std::nullopt};
  if (news) bundle.news = news_pi(*news, window, news_mode);
  return bundle;
}

}  // namespace inflanow
