#include "oeuvre/authorship.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "oeuvre/csv.hpp"
#include "oeuvre/error.hpp"

namespace oeuvre {

AuthorshipSet read_authorships_csv(std::istream& in) {
  auto rows = csv::read(in);
  AuthorshipSet out;
  if (rows.empty()) return out;
  const auto& header = rows.front();
  auto col = [&](const char* name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw InputError(std::string("authorship CSV lacks column '") + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  std::size_t person = col("person_id");
  std::size_t pub = col("pub_id");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() <= std::max(person, pub))
      throw InputError("authorship CSV row " + std::to_string(r + 1) + " is too short");
    out.insert({row[person], row[pub]});
  }
  return out;
}

AuthorshipSet read_authorships_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open authorship file '" + path + "'");
  return read_authorships_csv(in);
}

void write_portfolio_csv(std::ostream& out, const AuthorshipSet& rows, std::string_view scenario) {
  csv::write_row(out, {"person_id", "pub_id", "scenario"});
  for (const auto& a : rows) csv::write_row(out, {a.person_id, a.pub_id, std::string(scenario)});
}

}  // namespace oeuvre
