#pragma once
// Deterministic CSV emission: every data cell is a 17-significant-digit
// scientific-notation number written with std::to_chars, so output is locale
// independent and bit-stable across runs.

#include <ostream>
#include <string>
#include <vector>

namespace twoslit {

// Shortest round-trip representation; used for parameter echoes in metadata.
std::string format_number(double v);

// Scientific notation with 16 fractional digits (17 significant).
std::string format_scientific17(double v);

struct CsvDocument {
  std::vector<std::string> metadata;  // emitted as leading "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each row.size() == columns.size()

  void write(std::ostream& os) const;
};

// Writes to path, or to fallback_stream when path == "-".
// Throws io_error when the file cannot be created or written.
void write_csv(const CsvDocument& doc, const std::string& path, std::ostream& fallback_stream);

}  // namespace twoslit
