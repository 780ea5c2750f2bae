#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace becmirror {

// 17 significant digits: enough to round-trip any double exactly.
std::string format_full(double value);

// Pre-formatted table, rendered as CSV (fixed header) or as a JSON array of
// row objects. Cells hold final text; numbers must already be valid JSON
// number syntax.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

} // namespace becmirror
