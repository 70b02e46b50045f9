#ifndef GRIDTHRESH_TABLE_IO_HPP
#define GRIDTHRESH_TABLE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace gridthresh {

// One output table: fixed column names, rows of cells. Column names carry
// the provenance of their numeric cells as a suffix (_exact, _pred,
// _ratio). Absent optional values serialize as an empty CSV cell / JSON
// null. Integers beyond 2^53 are serialized as decimal strings in JSON so
// double-parsing readers cannot corrupt them.
struct Table {
  using Cell = std::variant<std::monostate, std::int64_t, long double, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_long_double(long double v);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

}  // namespace gridthresh

#endif
