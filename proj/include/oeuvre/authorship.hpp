#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace oeuvre {

// One (researcher, publication) attribution.
struct Authorship {
  std::string person_id;
  std::string pub_id;

  friend auto operator<=>(const Authorship&, const Authorship&) = default;
};

using AuthorshipSet = std::set<Authorship>;

// CSV with a header naming at least `person_id` and `pub_id`; other columns ignored.
AuthorshipSet read_authorships_csv(std::istream& in);
AuthorshipSet read_authorships_file(const std::string& path);

// Portfolio CSV: person_id,pub_id,scenario
void write_portfolio_csv(std::ostream& out, const AuthorshipSet& rows, std::string_view scenario);

}  // namespace oeuvre
