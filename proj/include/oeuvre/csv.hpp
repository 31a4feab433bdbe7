#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace oeuvre::csv {

using Row = std::vector<std::string>;

// RFC 4180 records: quoted fields may hold commas, doubled quotes and newlines.
// Blank lines are skipped. Throws InputError on an unterminated quote.
std::vector<Row> read(std::istream& in);

std::string escape(std::string_view field);
void write_row(std::ostream& out, const Row& row);

}  // namespace oeuvre::csv
