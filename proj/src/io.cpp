#include "fraclab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace fraclab::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw IoError("csv: not a number: '" + s + "'");
  }
  if (used != s.size()) throw IoError("csv: trailing characters in '" + s + "'");
  return v;
}

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw IoError("cannot open " + file.string() + " for writing");
  return os;
}

void check_written(std::ostream& os, const std::filesystem::path& file) {
  os.flush();
  if (!os) throw IoError("failed writing " + file.string());
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::ordered_json array(const Eigen::VectorXd& v) {
  auto a = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v[i]));
  return a;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::vector<double>& Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw IoError("csv: missing column '" + name + "'");
}

void write_table(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) os << (c ? "," : "") << table.header[c];
  os << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const double v = table.columns[c][r];
      os << (c ? "," : "") << (std::isnan(v) ? std::string() : format_double(v));
    }
    os << '\n';
  }
}

Table read_table(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw IoError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.header = split(line);
  if (t.header.empty()) throw IoError("csv: empty header");
  t.columns.assign(t.header.size(), {});
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != t.header.size()) {
      throw IoError("csv: line " + std::to_string(lineno) + " has " + std::to_string(cells.size()) +
                    " fields, expected " + std::to_string(t.header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) t.columns[c].push_back(parse_double(cells[c]));
  }
  return t;
}

void write_path_csv(std::ostream& os, const SampledPath& path) {
  const Eigen::VectorXd t = path.times();
  Table table{{"t", "value"}, {{t.data(), t.data() + t.size()}, {path.values.data(), path.values.data() + path.size()}}};
  write_table(os, table);
}

void write_path_csv(const std::filesystem::path& file, const SampledPath& path) {
  auto os = open_out(file);
  write_path_csv(os, path);
  check_written(os, file);
}

SampledPath read_path_csv(std::istream& is) {
  const Table table = read_table(is);
  const auto& t = table.column("t");
  const auto& v = table.column("value");
  if (t.size() < 2) throw IoError("csv: a path needs at least 2 rows");
  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) throw IoError("csv: t column must increase");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(t[i] - (t.front() + static_cast<double>(i) * dt)) > 1e-9 * std::max(1.0, std::abs(t.back()))) {
      throw IoError("csv: t column is not uniform");
    }
  }
  return {t.front(), dt, Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))};
}

SampledPath read_path_csv(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw IoError("cannot open " + file.string());
  try {
    return read_path_csv(is);
  } catch (const IoError& e) {
    throw IoError(file.string() + ": " + e.what());
  }
}

void write_msd_csv(std::ostream& os, const analysis::MsdCurve& c) {
  const auto col = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  Table table{{"t", "msd", "stderr", "n_paths"},
              {col(c.t), col(c.msd), col(c.std_error), std::vector<double>(c.t.size(), double(c.n_paths))}};
  write_table(os, table);
}

void write_msd_csv(const std::filesystem::path& file, const analysis::MsdCurve& curve) {
  auto os = open_out(file);
  write_msd_csv(os, curve);
  check_written(os, file);
}

analysis::MsdCurve read_msd_csv(std::istream& is) {
  const Table table = read_table(is);
  const auto vec = [&](const char* name) {
    const auto& c = table.column(name);
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size())));
  };
  analysis::MsdCurve c;
  c.t = vec("t");
  c.msd = vec("msd");
  c.std_error = vec("stderr");
  const auto& np = table.column("n_paths");
  c.n_paths = np.empty() ? 0 : static_cast<Eigen::Index>(np.front());
  return c;
}

nlohmann::ordered_json to_json(const mcsolve::SolveReport& report) {
  nlohmann::ordered_json j;
  j["converged"] = report.converged;
  j["mc_steps_used"] = report.mc_steps_used;
  j["max_residual"] = number(report.max_residual);
  j["solution"] = {{"t", array(report.solution.times())}, {"x", array(report.solution.values)}};
  auto hist = nlohmann::ordered_json::array();
  for (const auto& h : report.residual_history) hist.push_back({{"step", h.step}, {"max_residual", number(h.max_residual)}});
  j["residual_history"] = std::move(hist);
  return j;
}

nlohmann::ordered_json to_json(const analysis::SlopeFit& fit) {
  return {{"t_lo", number(fit.t_lo)},           {"t_hi", number(fit.t_hi)},
          {"slope", number(fit.slope)},         {"intercept", number(fit.intercept)},
          {"r_squared", number(fit.r_squared)}, {"n_samples", fit.n_samples}};
}

nlohmann::ordered_json to_json(const analysis::MsdCurve& c) {
  return {{"n_paths", c.n_paths}, {"t", array(c.t)}, {"msd", array(c.msd)}, {"stderr", array(c.std_error)}};
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  auto os = open_out(file);
  os << text << '\n';
  check_written(os, file);
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2); }

}  // namespace fraclab::io
