#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oeuvre/authorship.hpp"
#include "oeuvre/corpus.hpp"
#include "oeuvre/portfolio.hpp"

namespace oeuvre::synth {

struct PopulationOptions {
  std::uint64_t seed = 20161231;
  std::size_t researchers = 200;
  double foreign_homonym_rate = 0.15;  // same name, affiliated abroad
  double city_homonym_rate = 0.15;     // same name, another Italian city
  double mover_rate = 0.10;            // researcher with earlier pubs in another city
  YearWindow window{2010, 2016};
  int first_year = 2006;
  int last_year = 2019;
};

enum class HomonymKind { foreign, other_city };

// A namesake planted next to a roster researcher; none of its
// publications belong to that researcher.
struct PlantedHomonym {
  std::string person_id;
  HomonymKind kind = HomonymKind::foreign;
  std::vector<PacId> pacs;
};

struct Population {
  std::vector<Publication> publications;
  std::vector<RosterEntry> roster;
  AuthorshipSet gold;  // roster researchers' own publications inside the window
  std::vector<PlantedHomonym> planted;
};

// Deterministic for a given seed.
Population generate_population(const PopulationOptions& opts);

// Eight oeuvres retrievable by the variants of "BERNELLI ZAZZERA, Franco":
// bernelli f (2003); bernelli-zazzera f, franco (35 pubs 1989-2016); three
// bernelli-zazzera f singletons (2000, 2002, 2005); zazzera f, francesca (2008);
// zazzera fb, franco bernelli (2014-2015); zazzera fb, f. bernelli (2007).
std::vector<Publication> bernelli_fixture();
RosterEntry bernelli_roster_entry();

}  // namespace oeuvre::synth
