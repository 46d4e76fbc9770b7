#include "twoslit/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "twoslit/errors.hpp"

namespace twoslit {

namespace {
std::string to_chars_string(double v, std::chars_format fmt, int precision) {
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buf[64];
  const auto res = precision < 0 ? std::to_chars(buf, buf + sizeof buf, v, fmt)
                                 : std::to_chars(buf, buf + sizeof buf, v, fmt, precision);
  return std::string(buf, res.ptr);
}
}  // namespace

std::string format_number(double v) {
  return to_chars_string(v, std::chars_format::general, -1);
}

std::string format_scientific17(double v) {
  return to_chars_string(v, std::chars_format::scientific, 16);
}

void CsvDocument::write(std::ostream& os) const {
  for (const std::string& line : metadata) os << "# " << line << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_scientific17(row[i]);
    os << "\n";
  }
}

void write_csv(const CsvDocument& doc, const std::string& path, std::ostream& fallback_stream) {
  if (path == "-") {
    doc.write(fallback_stream);
    if (!fallback_stream) throw io_error("failed writing CSV to stream");
    return;
  }
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes on every platform
  if (!out) throw io_error("cannot create output file '" + path + "'");
  doc.write(out);
  out.flush();
  if (!out) throw io_error("failed writing output file '" + path + "'");
}

}  // namespace twoslit
