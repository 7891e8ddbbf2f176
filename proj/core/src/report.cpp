#include "inflanow/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "inflanow/csv.hpp"
#include "inflanow/errors.hpp"

namespace inflanow {
namespace {

constexpr int kLabelWidth = 22;
constexpr int kColumnWidth = 14;

void write_comment(std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
}

std::string fixed(double v, int decimals) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  return fmt::format("{:.{}f}", v, decimals);
}

// Centers `text` in a column, with stars hanging off the right so that
// numbers line up.
std::string cell(const std::string& number, const std::string& suffix = {}) {
  std::string body = number + suffix;
  int pad = kColumnWidth - static_cast<int>(number.size());
  int left = std::max(pad / 2, 1);
  std::string out(static_cast<std::size_t>(left), ' ');
  out += body;
  if (static_cast<int>(out.size()) < kColumnWidth) out.resize(kColumnWidth, ' ');
  return out;
}

std::string row(const std::string& label, const std::vector<std::string>& cells) {
  std::string out = fmt::format("{:<{}}", label, kLabelWidth);
  for (const auto& c : cells) out += c;
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out + '\n';
}

std::vector<std::string> ordered_terms(std::span<const FittedModel> models) {
  std::vector<std::string> canonical{std::string(kInterceptTerm)};
  for (auto r : {Regressor::core_cpi, Regressor::food_cpi, Regressor::gasoline, Regressor::news}) {
    canonical.push_back(term_name(r));
  }
  std::vector<std::string> out;
  for (const auto& term : canonical) {
    bool used = std::any_of(models.begin(), models.end(), [&](const FittedModel& m) {
      return std::any_of(m.result.coefficients.begin(), m.result.coefficients.end(),
                         [&](const Coefficient& c) { return c.name == term; });
    });
    if (used) out.push_back(term);
  }
  return out;
}

const Coefficient* find_term(const RegressionResult& r, const std::string& term) {
  for (const auto& c : r.coefficients) {
    if (c.name == term) return &c;
  }
  return nullptr;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string format_regression_table(std::span<const FittedModel> models, int decimals) {
  const std::size_t width =
      static_cast<std::size_t>(kLabelWidth + kColumnWidth * static_cast<int>(models.size()));
  const std::string heavy(width, '=');
  const std::string light(width, '-');

  std::string out = heavy + '\n';
  std::string dep = "Dependent variable: CPI";
  int span = kColumnWidth * static_cast<int>(models.size());
  int lead = kLabelWidth + std::max((span - static_cast<int>(dep.size())) / 2, 0);
  out += std::string(static_cast<std::size_t>(lead), ' ') + dep + '\n';
  out += std::string(static_cast<std::size_t>(kLabelWidth), ' ') +
         std::string(static_cast<std::size_t>(span), '-') + '\n';

  std::vector<std::string> names, numbers;
  for (std::size_t i = 0; i < models.size(); ++i) {
    names.push_back(cell(models[i].spec.label()));
    numbers.push_back(cell(fmt::format("({})", i + 1)));
  }
  out += row("", names);
  out += row("", numbers);
  out += light + '\n';

  for (const auto& term : ordered_terms(models)) {
    std::vector<std::string> est, se;
    for (const auto& m : models) {
      if (const Coefficient* c = find_term(m.result, term)) {
        est.push_back(cell(fixed(c->estimate, decimals), stars(c->tier)));
        se.push_back(cell("(" + fixed(c->std_error, decimals) + ")"));
      } else {
        est.push_back(cell(""));
        se.push_back(cell(""));
      }
    }
    out += row(term, est);
    out += row("", se);
  }
  out += light + '\n';

  std::vector<std::string> obs, r2, adj, rse, f;
  for (const auto& m : models) {
    obs.push_back(cell(std::to_string(m.result.observations)));
    r2.push_back(cell(fixed(m.result.r_squared, decimals)));
    adj.push_back(cell(fixed(m.result.adj_r_squared, decimals)));
    rse.push_back(cell(fixed(m.result.residual_std_error, decimals)));
    f.push_back(cell(fixed(m.result.f_statistic, decimals), stars(m.result.f_tier)));
  }
  out += row("Observations", obs);
  out += row("R2", r2);
  out += row("Adjusted R2", adj);
  out += row("Residual Std. Error", rse);
  out += row("F Statistic", f);
  out += heavy + '\n';
  std::string note(kSignificanceNote);
  out += fmt::format("{:<{}}{:>{}}\n", "Note:", kLabelWidth, note,
                     std::max(span, static_cast<int>(note.size())));
  return out;
}

void write_regression_csv(std::ostream& out, std::span<const FittedModel> models,
                          const std::string& comment) {
  write_comment(out, comment);
  out << "model,term,estimate,std_error,t_value,p_value,stars\n";
  for (const auto& m : models) {
    for (const auto& c : m.result.coefficients) {
      out << csv::escape(m.spec.label()) << ',' << c.name << ',' << csv::format_double(c.estimate)
          << ',' << csv::format_double(c.std_error) << ',' << csv::format_double(c.t_value) << ','
          << csv::format_double(c.p_value) << ',' << stars(c.tier) << '\n';
    }
  }
}

void write_regression_stats_csv(std::ostream& out, std::span<const FittedModel> models,
                                const std::string& comment) {
  write_comment(out, comment);
  out << "model,observations,r_squared,adj_r_squared,residual_std_error,f_statistic,f_p_value,"
         "f_stars\n";
  for (const auto& m : models) {
    const auto& r = m.result;
    out << csv::escape(m.spec.label()) << ',' << r.observations << ','
        << csv::format_double(r.r_squared) << ',' << csv::format_double(r.adj_r_squared) << ','
        << csv::format_double(r.residual_std_error) << ',' << csv::format_double(r.f_statistic)
        << ',' << csv::format_double(r.f_p_value) << ',' << stars(r.f_tier) << '\n';
  }
}

void write_forecasts_csv(std::ostream& out, std::span<const ForecastSeries> forecasts,
                         const std::string& comment) {
  write_comment(out, comment);
  out << "date,model,nowcast,nowcast_annualized,realized,realized_annualized\n";
  for (const auto& f : forecasts) {
    for (const auto& r : f.rows) {
      out << r.month.to_string() << ',' << csv::escape(f.model) << ','
          << csv::format_double(r.nowcast) << ',' << csv::format_double(r.nowcast_annualized)
          << ',' << csv::format_double(r.realized) << ','
          << csv::format_double(r.realized_annualized) << '\n';
    }
  }
}

std::vector<ForecastSeries> read_forecasts_csv(std::istream& in) {
  auto records = csv::read(in);
  if (records.empty()) throw ParseError("forecast file has no header");
  csv::expect_header(records.front(), {"date", "model", "nowcast", "nowcast_annualized",
                                       "realized", "realized_annualized"});
  std::vector<ForecastSeries> out;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.fields.size() != 6) {
      throw ParseError(fmt::format("expected 6 fields, got {}", r.fields.size()), r.line);
    }
    ForecastRow row;
    try {
      row.month = MonthKey::parse(r.fields[0]);
    } catch (const ParseError&) {
      throw ParseError(fmt::format("invalid date '{}'", r.fields[0]), r.line);
    }
    row.nowcast = csv::parse_double(r.fields[2], r.line, "nowcast");
    row.nowcast_annualized = csv::parse_double(r.fields[3], r.line, "nowcast_annualized");
    row.realized = csv::parse_double(r.fields[4], r.line, "realized");
    row.realized_annualized = csv::parse_double(r.fields[5], r.line, "realized_annualized");

    auto [it, inserted] = slot.emplace(r.fields[1], out.size());
    if (inserted) out.push_back(ForecastSeries{r.fields[1], {}});
    auto& series = out[it->second];
    if (!series.rows.empty() && row.month <= series.rows.back().month) {
      throw ParseError(fmt::format("model '{}': month {} out of order", series.model,
                                   row.month.to_string()),
                       r.line);
    }
    series.rows.push_back(row);
  }
  return out;
}

std::string format_rmse_cell(double rmse, const std::optional<GWResult>& gw) {
  if (!gw) return fmt::format("{:.4f} (--)", rmse);
  return fmt::format("{:.4f}{} ({:.2f})", rmse, stars(significance_tier(gw->p_value)),
                     gw->p_value);
}

std::string format_evaluation_table(const EvaluationReport& report) {
  constexpr int label = 18;
  constexpr int column = 14;
  const std::string heavy(label + column, '=');
  std::string out = heavy + '\n';
  out += fmt::format("{:<{}}{:>{}}\n", "", label, "RMSE", 9);
  out += std::string(label + column, '-') + '\n';
  // With a single model there is nothing to compare, so only RMSE is shown.
  const bool compare = report.models.size() > 1;
  for (const auto& m : report.models) {
    auto tier = m.vs_benchmark ? significance_tier(m.vs_benchmark->p_value) : 0;
    std::string value = fixed(m.rmse, 4);
    out += fmt::format("{:<{}}{:>{}}{}\n", upper(m.model), label, value, 9, stars(tier));
    if (!compare) continue;
    std::string p = m.vs_benchmark ? fmt::format("({:.2f})", m.vs_benchmark->p_value) : "(--)";
    out += fmt::format("{:<{}}{:>{}}\n", "", label, p, 9);
  }
  out += heavy + '\n';
  if (!compare) {
    out += fmt::format("RMSE of {} nowcasts over {} months ({} units).\n",
                       to_string(report.options.target), report.months.size(),
                       to_string(report.options.unit));
    return out;
  }
  out += fmt::format("Note: {}\n", kSignificanceNote);
  out += fmt::format("RMSE of {} nowcasts over {} months ({} units); "
                     "parentheses: {} Giacomini-White p-value vs {}.\n",
                     to_string(report.options.target), report.months.size(),
                     to_string(report.options.unit), to_string(report.options.variant),
                     upper(report.models.front().model));
  return out;
}

void write_evaluation_csv(std::ostream& out, const EvaluationReport& report,
                          const std::string& comment) {
  write_comment(out, comment);
  out << "model,rmse,benchmark,gw_statistic,gw_df,gw_p_value,stars,display\n";
  const std::string benchmark = report.models.empty() ? "" : report.models.front().model;
  for (const auto& m : report.models) {
    out << csv::escape(m.model) << ',' << csv::format_double(m.rmse) << ','
        << csv::escape(benchmark) << ',';
    if (m.vs_benchmark) {
      out << csv::format_double(m.vs_benchmark->statistic) << ',' << m.vs_benchmark->df << ','
          << csv::format_double(m.vs_benchmark->p_value) << ','
          << stars(significance_tier(m.vs_benchmark->p_value));
    } else {
      out << ",,,";
    }
    out << ',' << csv::escape(format_rmse_cell(m.rmse, m.vs_benchmark)) << '\n';
  }
}

void write_gw_pairs_csv(std::ostream& out, const EvaluationReport& report,
                        const std::string& comment) {
  write_comment(out, comment);
  out << "model_a,model_b,variant,statistic,df,p_value,mean_differential,observations\n";
  for (const auto& p : report.pairs) {
    out << csv::escape(p.model_a) << ',' << csv::escape(p.model_b) << ','
        << to_string(p.result.variant) << ',' << csv::format_double(p.result.statistic) << ','
        << p.result.df << ',' << csv::format_double(p.result.p_value) << ','
        << csv::format_double(p.result.mean_differential) << ',' << p.result.observations << '\n';
  }
}

}  // namespace inflanow
