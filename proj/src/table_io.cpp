#include "gridthresh/table_io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace gridthresh {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table::add_row: wrong cell count");
  rows.push_back(std::move(row));
}

std::string format_long_double(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12Lg", v);
  return buf;
}

namespace {

constexpr std::int64_t kJsonIntMax = std::int64_t{1} << 53;

void append_csv_cell(const Table::Cell& c, std::string& out) {
  if (std::holds_alternative<std::monostate>(c)) return;
  if (const auto* i = std::get_if<std::int64_t>(&c)) {
    out += std::to_string(*i);
  } else if (const auto* d = std::get_if<long double>(&c)) {
    out += format_long_double(*d);
  } else {
    out += std::get<std::string>(c);
  }
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  std::string line;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) line += ',';
    line += t.columns[i];
  }
  os << line << '\n';
  for (const auto& row : t.rows) {
    line.clear();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      append_csv_cell(row[i], line);
    }
    os << line << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      const std::string& key = t.columns[i];
      if (std::holds_alternative<std::monostate>(c)) {
        obj[key] = nullptr;
      } else if (const auto* v = std::get_if<std::int64_t>(&c)) {
        if (*v > kJsonIntMax || *v < -kJsonIntMax)
          obj[key] = std::to_string(*v);
        else
          obj[key] = *v;
      } else if (const auto* d = std::get_if<long double>(&c)) {
        obj[key] = static_cast<double>(*d);
      } else {
        obj[key] = std::get<std::string>(c);
      }
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace gridthresh
