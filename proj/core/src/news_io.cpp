#include "inflanow/news_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "inflanow/csv.hpp"
#include "inflanow/errors.hpp"

namespace inflanow {
namespace {

// Parses the rows after the header, turning per-row exceptions into rejections.
template <typename Row, typename ParseRow>
Loaded<Row> read_rows(std::istream& in, const std::vector<std::string>& header, ParseRow parse) {
  auto records = csv::read(in);
  if (records.empty()) throw ParseError(fmt::format("missing header '{}'", fmt::join(header, ",")));
  csv::expect_header(records.front(), header);

  Loaded<Row> loaded;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    try {
      if (r.fields.size() != header.size()) {
        throw ParseError(fmt::format("expected {} fields, got {}", header.size(), r.fields.size()));
      }
      if (r.fields[0].empty()) throw ParseError("empty id");
      loaded.rows.push_back(parse(r.fields));
    } catch (const DataError& e) {
      std::string reason = e.what();
      loaded.rejected.push_back(Rejection{r.line, std::move(reason)});
    }
  }
  return loaded;
}

double field_double(const std::string& text, const char* what) {
  return csv::parse_double(text, 0, what);
}

int field_int(const std::string& text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(fmt::format("invalid {} '{}'", what, text));
  }
  return value;
}

SentimentProbs field_probs(const std::vector<std::string>& f) {
  return SentimentProbs(field_double(f[2], "p_down"), field_double(f[3], "p_neutral"),
                        field_double(f[4], "p_up"));
}

void write_comment(std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
}

}  // namespace

Loaded<ProbabilityRow> read_probabilities(std::istream& in) {
  return read_rows<ProbabilityRow>(in, {"id", "date", "p_down", "p_neutral", "p_up"},
                                   [](const std::vector<std::string>& f) {
                                     return ProbabilityRow{f[0], ArticleDate::parse(f[1]),
                                                           field_probs(f)};
                                   });
}

Loaded<NewsText> read_news_text(std::istream& in) {
  return read_rows<NewsText>(in, {"id", "date", "text"}, [](const std::vector<std::string>& f) {
    return NewsText{f[0], ArticleDate::parse(f[1]), f[2]};
  });
}

Loaded<LabeledRow> read_labels(std::istream& in, LabelEncoding encoding) {
  return read_rows<LabeledRow>(in, {"id", "date", "label"},
                               [encoding](const std::vector<std::string>& f) {
                                 return LabeledRow{f[0], ArticleDate::parse(f[1]),
                                                   decode_label(field_int(f[2], "label"),
                                                                encoding)};
                               });
}

Loaded<ScoredArticle> read_scored(std::istream& in) {
  return read_rows<ScoredArticle>(
      in, {"id", "date", "p_down", "p_neutral", "p_up", "score"},
      [](const std::vector<std::string>& f) {
        double s = field_double(f[5], "score");
        if (!(s >= -1.0 && s <= 1.0)) throw ValidationError(fmt::format("score {} outside [-1, 1]", s));
        return ScoredArticle{f[0], ArticleDate::parse(f[1]), field_probs(f), s};
      });
}

void write_probabilities(std::ostream& out, std::span<const ScoredArticle> articles,
                         const std::string& comment) {
  write_comment(out, comment);
  out << "id,date,p_down,p_neutral,p_up\n";
  for (const auto& a : articles) {
    out << csv::escape(a.id) << ',' << a.date.to_string() << ','
        << csv::format_double(a.probs.down()) << ',' << csv::format_double(a.probs.neutral())
        << ',' << csv::format_double(a.probs.up()) << '\n';
  }
}

void write_scored(std::ostream& out, std::span<const ScoredArticle> articles,
                  const std::string& comment) {
  write_comment(out, comment);
  out << "id,date,p_down,p_neutral,p_up,score\n";
  for (const auto& a : articles) {
    out << csv::escape(a.id) << ',' << a.date.to_string() << ','
        << csv::format_double(a.probs.down()) << ',' << csv::format_double(a.probs.neutral())
        << ',' << csv::format_double(a.probs.up()) << ',' << csv::format_double(a.score) << '\n';
  }
}

void write_rejections(std::ostream& out, std::span<const Rejection> rejected,
                      const std::string& comment) {
  write_comment(out, comment);
  out << "line,reason\n";
  for (const auto& r : rejected) out << r.line << ',' << csv::escape(r.reason) << '\n';
}

}  // namespace inflanow
