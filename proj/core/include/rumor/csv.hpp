#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rumor {

/// "%.17g": round-trips every double and is locale independent.
std::string format_double(double v);

/// Minimal CSV writer with a fixed header. Cells never contain commas, so
/// no quoting is performed.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, std::vector<std::string> header);

  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(double v);
  CsvWriter& cell(std::uint64_t v);
  CsvWriter& cell(std::int64_t v);
  CsvWriter& cell(bool v);
  /// Ends the current row; throws std::logic_error on a column-count mismatch.
  void end_row();

 private:
  void separator();

  std::ostream& os_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

}  // namespace rumor
