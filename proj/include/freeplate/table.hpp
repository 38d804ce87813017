#pragma once

#include <string>
#include <variant>
#include <vector>

#include "freeplate/ball_spectrum.hpp"
#include "freeplate/report.hpp"
#include "freeplate/rod_spectrum.hpp"

namespace freeplate {

using Cell = std::variant<double, std::string>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns, bool single_record = false);
  const std::vector<std::string>& columns() const { return columns_; }
  size_t rows() const { return cells_.size(); }
  bool single_record() const { return single_record_; }
  void add_row(std::vector<Cell> row);
  const Cell& at(size_t row, size_t col) const { return cells_.at(row).at(col); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> cells_;
  bool single_record_;
};

enum class Format { csv, json };

// 17 significant digits, shortest exponent form from %.17g
std::string format_real(double x);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
std::string render(const Table& t, Format f);

std::string report_to_json(const CheckReport& r);
std::string report_to_csv(const CheckReport& r);

// writes via a temporary file and rename; "-" means standard output
void write_output(const std::string& path, const std::string& content);

Table ball_tone_table(const BallTone& tone);
Table ball_curve_table(const std::vector<CurveRow>& rows);
Table rod_table(const std::vector<BranchRow>& rows);

}  // namespace freeplate
