#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsfd/trajectory.hpp"

namespace nsfd::harness {

/// One CSV row: k, t, y1..yn, V, dV (dV empty on the last row).
struct RunRow {
  std::size_t k = 0;
  double t = 0.0;
  std::vector<double> y;
  double v = 0.0;
  std::optional<double> dv;

  friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct RunRecord {
  std::size_t dimension = 0;
  std::vector<RunRow> rows;
};

/// 17 significant digits; round-trips every finite double.
std::string format_double(double value);

/// `k,t,y1,...,yn,V,dV`
std::string csv_header(std::size_t dimension);

/// Streams rows as the observer sees them. Lines end in LF.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::size_t dimension);

  void write(const StepRecord& record);
  void write(const RunRow& row);

 private:
  std::ostream& out_;
  std::size_t dimension_;
};

void write_csv(std::ostream& out, const RunRecord& record);

/// Parses a file written by CsvWriter. Throws std::runtime_error on a
/// malformed header or row.
RunRecord read_csv(std::istream& in);

}  // namespace nsfd::harness
