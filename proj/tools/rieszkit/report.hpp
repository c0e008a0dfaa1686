#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rieszkit::cli {

// Rows of preformatted cells under a fixed header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

// Comma-separated, header first, '\n' line ends. Cells never contain commas.
void write_csv(std::ostream& os, const Table& t);

// Columns padded to a common width, numbers right-aligned, with a rule under the header.
void write_text(std::ostream& os, const Table& t);

// CSV cell for a real: "%.16e". Throws NumericalError on NaN or infinity.
std::string real_cell(double v);
std::string real_cell(const std::optional<double>& v);
// Short forms for the text tables.
std::string sci_cell(double v, int digits = 6);
std::string sci_cell(const std::optional<double>& v, int digits = 6);
std::string fixed_cell(const std::optional<double>& v, int digits = 4);
inline std::string bool_cell(bool b) { return b ? "true" : "false"; }

}  // namespace rieszkit::cli
