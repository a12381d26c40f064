#include "csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace nsfd::harness {

std::string format_double(double value) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string csv_header(std::size_t dimension) {
  std::string header = "k,t";
  for (std::size_t i = 1; i <= dimension; ++i) header += ",y" + std::to_string(i);
  header += ",V,dV";
  return header;
}

CsvWriter::CsvWriter(std::ostream& out, std::size_t dimension) : out_(out), dimension_(dimension) {
  out_ << csv_header(dimension_) << '\n';
}

void CsvWriter::write(const StepRecord& record) {
  std::string line = std::to_string(record.k);
  line += ',';
  line += format_double(record.t);
  for (double c : record.y) {
    line += ',';
    line += format_double(c);
  }
  line += ',';
  line += format_double(record.v);
  line += ',';
  if (record.dv) line += format_double(*record.dv);
  line += '\n';
  out_ << line;
}

void CsvWriter::write(const RunRow& row) {
  const State y = State::unchecked(row.y);
  write(StepRecord{row.k, row.t, y, row.v, row.dv});
}

void write_csv(std::ostream& out, const RunRecord& record) {
  CsvWriter writer(out, record.dimension);
  for (const auto& row : record.rows) writer.write(row);
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

RunRecord read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  const auto header = split(line);
  if (header.size() < 5) throw std::runtime_error("CSV header too short");
  RunRecord record;
  record.dimension = header.size() - 4;
  if (line != csv_header(record.dimension)) throw std::runtime_error("unexpected CSV header: " + line);

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields");
    }
    RunRow row;
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), k);
    if (ec != std::errc() || ptr != fields[0].data() + fields[0].size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": bad step index");
    }
    row.k = k;
    row.t = parse_double(fields[1], line_no);
    for (std::size_t i = 0; i < record.dimension; ++i) {
      row.y.push_back(parse_double(fields[2 + i], line_no));
    }
    row.v = parse_double(fields[2 + record.dimension], line_no);
    if (!fields.back().empty()) row.dv = parse_double(fields.back(), line_no);
    record.rows.push_back(std::move(row));
  }
  return record;
}

}  // namespace nsfd::harness
