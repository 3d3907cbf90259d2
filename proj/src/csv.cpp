#include "mlingam/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mlingam {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (std::isspace(static_cast<unsigned char>(s[b])) != 0)) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) != 0)) --e;
  return s.substr(b, e - b);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      field.push_back(c);
    } else if (c == ',' && !quoted) {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

double parse_cell(const std::string& raw) {
  const std::string s = unquote(trim(raw));
  if (s.empty()) return kNaN;
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + s.size()) return kNaN;
  return v;  // may itself be nan/inf from the text; filtered at extraction
}
}  // namespace

CsvTable ingest_csv(const std::string& path, const std::vector<std::string>& columns) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header;
  for (const auto& f : split_fields(line)) header.push_back(unquote(trim(f)));

  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  if (columns.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c) keep.push_back(c);
    names = header;
  } else {
    for (const auto& want : columns) {
      const auto it = std::find(header.begin(), header.end(), want);
      if (it == header.end())
        throw std::invalid_argument("column not found in " + path + ": " + want);
      keep.push_back(static_cast<std::size_t>(it - header.begin()));
      names.push_back(want);
    }
  }

  CsvTable table;
  table.columns = names;
  table.data.assign(names.size(), {});
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      const double v = keep[j] < fields.size() ? parse_cell(fields[keep[j]]) : kNaN;
      table.data[j].push_back(v);
    }
  }
  if (table.rows() == 0) throw std::invalid_argument("no data rows in " + path);

  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    const auto& col = table.data[j];
    if (std::none_of(col.begin(), col.end(), [](double v) { return std::isfinite(v); }))
      throw std::invalid_argument("column is not numeric: " + table.columns[j]);
  }
  return table;
}

PairExtract extract_pair(const CsvTable& table, const std::string& a, const std::string& b) {
  if (a == b) throw std::invalid_argument("pair needs two distinct columns");
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) throw std::invalid_argument("column not found: " + name);
    return static_cast<std::size_t>(it - table.columns.begin());
  };
  const std::size_t ia = index_of(a);
  const std::size_t ib = index_of(b);

  PairExtract out;
  std::vector<double> c1, c2;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const double va = table.data[ia][i];
    const double vb = table.data[ib][i];
    if (std::isfinite(va) && std::isfinite(vb)) {
      c1.push_back(va);
      c2.push_back(vb);
    } else {
      ++out.rejected;
    }
  }
  if (c1.empty()) throw std::invalid_argument("all rows rejected for pair " + a + "," + b);
  if (c1.size() < 3)
    throw std::invalid_argument("fewer than 3 usable rows for pair " + a + "," + b);
  out.data = make_pair_dataset(std::move(c1), std::move(c2), {a, b});
  if (sample_variance(out.data.x1) <= 0.0)
    throw std::invalid_argument("column is constant: " + a);
  if (sample_variance(out.data.x2) <= 0.0)
    throw std::invalid_argument("column is constant: " + b);
  return out;
}

}  // namespace mlingam
