#include "becmirror/csv.hpp"

#include <cstdio>
#include <ostream>

namespace becmirror {

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    out << "[\n";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        out << "  {";
        for (size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out << ", ";
            out << '"' << table.columns[c] << "\": " << table.rows[r][c];
        }
        out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
}

} // namespace becmirror
