#include "freeplate/table.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "freeplate/error.hpp"
#include "json.hpp"

namespace freeplate {

using ojson = nlohmann::ordered_json;

Table::Table(std::vector<std::string> columns, bool single_record)
    : columns_(std::move(columns)), single_record_(single_record) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw InvalidArgument("table row has the wrong number of cells");
  if (single_record_ && !cells_.empty()) throw InvalidArgument("single-record table already has a row");
  cells_.push_back(std::move(row));
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_real(*d);
  return std::get<std::string>(c);
}

ojson cell_json(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return std::isfinite(*d) ? ojson(*d) : ojson(nullptr);
  return ojson(std::get<std::string>(c));
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns().size(); ++i) out += (i ? "," : "") + t.columns()[i];
  out += '\n';
  for (size_t r = 0; r < t.rows(); ++r) {
    for (size_t c = 0; c < t.columns().size(); ++c) out += (c ? "," : "") + cell_text(t.at(r, c));
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  auto row = [&](size_t r) {
    ojson o = ojson::object();
    for (size_t c = 0; c < t.columns().size(); ++c) o[t.columns()[c]] = cell_json(t.at(r, c));
    return o;
  };
  ojson j;
  if (t.single_record() && t.rows() == 1) {
    j = row(0);
  } else {
    j = ojson::array();
    for (size_t r = 0; r < t.rows(); ++r) j.push_back(row(r));
  }
  return j.dump(2) + "\n";
}

std::string render(const Table& t, Format f) { return f == Format::csv ? to_csv(t) : to_json(t); }

std::string report_to_json(const CheckReport& r) {
  ojson j = ojson::object();
  j["overall"] = r.passed() ? "pass" : "fail";
  ojson items = ojson::array();
  for (const auto& i : r.items) {
    ojson o = ojson::object();
    o["check"] = i.check;
    o["status"] = to_string(i.status);
    o["value"] = std::isfinite(i.value) ? ojson(i.value) : ojson(nullptr);
    o["tolerance"] = i.tolerance;
    items.push_back(o);
  }
  j["checks"] = items;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const CheckReport& r) {
  std::string out = "check,status,value,tolerance\n";
  for (const auto& i : r.items)
    out += i.check + "," + to_string(i.status) + "," + format_real(i.value) + "," + format_real(i.tolerance) + "\n";
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) throw IoError("empty output path");
  if (path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp + "' for writing");
    f << content;
    f.flush();
    if (!f) {
      std::remove(tmp.c_str());
      throw IoError("write failed for '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

Table ball_tone_table(const BallTone& tone) {
  Table t({"tau", "a", "b", "omega", "gamma"}, true);
  t.add_row({tone.tau, tone.a, tone.b, tone.omega, tone.gamma});
  return t;
}

Table ball_curve_table(const std::vector<CurveRow>& rows) {
  Table t({"tau", "a", "b", "omega", "gamma"});
  for (const auto& r : rows)
    if (r.tone) t.add_row({r.tau, r.tone->a, r.tone->b, r.tone->omega, r.tone->gamma});
  return t;
}

Table rod_table(const std::vector<BranchRow>& rows) {
  Table t({"tau", "omega", "parity", "regime", "a", "b", "coeff_ratio", "residual"});
  for (const auto& r : rows) {
    const RodMode& m = r.mode;
    Cell ratio = m.coeff_ratio ? Cell(*m.coeff_ratio) : Cell(std::string("free"));
    t.add_row({r.tau, m.omega, std::string(to_string(m.parity)), std::string(to_string(m.regime)), m.a, m.b, ratio,
               m.residual});
  }
  return t;
}

}  // namespace freeplate
