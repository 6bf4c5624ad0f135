#include "rumor/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rumor {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& os, std::vector<std::string> header)
    : os_(os), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os_ << ',';
    os_ << header[i];
  }
  os_ << '\n';
}

void CsvWriter::separator() {
  if (filled_ == columns_) throw std::logic_error("CsvWriter: too many cells in row");
  if (filled_++) os_ << ',';
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  separator();
  os_ << text;
  return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(std::string_view(format_double(v))); }

CsvWriter& CsvWriter::cell(std::uint64_t v) { return cell(std::string_view(std::to_string(v))); }

CsvWriter& CsvWriter::cell(std::int64_t v) { return cell(std::string_view(std::to_string(v))); }

CsvWriter& CsvWriter::cell(bool v) { return cell(std::string_view(v ? "true" : "false")); }

void CsvWriter::end_row() {
  if (filled_ != columns_) throw std::logic_error("CsvWriter: row has too few cells");
  os_ << '\n';
  filled_ = 0;
}

}  // namespace rumor
