#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "inflanow/series.hpp"

namespace inflanow {

// Series files: header `date,value`, one `YYYY-MM,<real>` row per month.
// Rejects duplicate and non-monotone months with line-numbered ParseErrors.
MonthlySeries read_series(std::istream& in, std::string name, SeriesUnit unit);
MonthlySeries read_series_file(const std::filesystem::path& path, std::string name,
                               SeriesUnit unit);

// `comment`, when non-empty, is written first as a `# ...` line.
void write_series(std::ostream& out, const MonthlySeries& series, const std::string& comment = {});

}  // namespace inflanow
