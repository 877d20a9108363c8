#pragma once

// CSV and JSON artifacts. CSVs are comma-separated with one header row, LF
// line endings and 17 significant digits, so every value round-trips exactly.
// A NaN is written as an empty cell and an empty cell reads back as NaN.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclab/analysis.hpp"
#include "fraclab/mcsolve.hpp"
#include "fraclab/sampled_path.hpp"

namespace fraclab::io {

std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

void write_table(std::ostream& os, const Table& table);
Table read_table(std::istream& is);

/// Columns t,value.
void write_path_csv(std::ostream& os, const SampledPath& path);
void write_path_csv(const std::filesystem::path& file, const SampledPath& path);
/// Reads t,value; the grid is recovered from the t column and must be uniform.
SampledPath read_path_csv(std::istream& is);
SampledPath read_path_csv(const std::filesystem::path& file);

/// Columns t,msd,stderr,n_paths.
void write_msd_csv(std::ostream& os, const analysis::MsdCurve& curve);
void write_msd_csv(const std::filesystem::path& file, const analysis::MsdCurve& curve);
analysis::MsdCurve read_msd_csv(std::istream& is);

nlohmann::ordered_json to_json(const mcsolve::SolveReport& report);
nlohmann::ordered_json to_json(const analysis::SlopeFit& fit);
nlohmann::ordered_json to_json(const analysis::MsdCurve& curve);

/// Writes text with a trailing newline; throws IoError on failure.
void write_text(const std::filesystem::path& file, const std::string& text);
/// Serialises JSON with 2-space indentation.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace fraclab::io
