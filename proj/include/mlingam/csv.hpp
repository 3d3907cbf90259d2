#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mlingam/model.hpp"

namespace mlingam {

// Parsed numeric table. Cells that were missing or non-numeric hold NaN;
// row filtering happens per selected pair, so one bad cell only costs the
// pairs that touch it.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // column-major, ragged-free
  std::size_t rows() const noexcept { return data.empty() ? 0 : data[0].size(); }
};

// Reads a UTF-8, comma-separated file with a header row. `columns` selects a
// subset (empty keeps all); a missing column or a column with no numeric
// entries at all is an error naming it.
CsvTable ingest_csv(const std::string& path, const std::vector<std::string>& columns = {});

struct PairExtract {
  PairDataset data;
  std::size_t rejected = 0;  // rows dropped for a missing/non-numeric entry
};

// Projects two columns, dropping rows with a non-finite entry in either
// (listwise per pair). Requires >= 3 surviving rows and nonconstant columns.
PairExtract extract_pair(const CsvTable& table, const std::string& a, const std::string& b);

}  // namespace mlingam
