#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oeuvre/authorship.hpp"
#include "oeuvre/clustering.hpp"
#include "oeuvre/corpus.hpp"
#include "oeuvre/decisions.hpp"

namespace oeuvre {

struct CareerStep {
  int year = 0;
  std::string city;
};

// A researcher from the external registry.
struct RosterEntry {
  std::string person_id;
  std::string last_name;  // may hold several parts
  std::string first_name;
  std::string affiliation_city;
  std::string country;
  std::string field_code;
  std::vector<CareerStep> career;
};

// Columns person_id,last_name,first_name,city,country,field_code and an
// optional `career` column of "year:city" items separated by ';'.
std::vector<RosterEntry> read_roster_csv(std::istream& in);
std::vector<RosterEntry> read_roster_file(const std::string& path);
void write_roster_csv(std::ostream& out, std::span<const RosterEntry> roster);

// Closed interval of calendar years.
struct YearWindow {
  int first = 0;
  int last = 0;

  // Throws DomainError when first > last.
  static YearWindow make(int first, int last);
  // "Y0:Y1"
  static YearWindow parse(std::string_view text);

  bool contains(int year) const { return year >= first && year <= last; }
  bool overlaps(int from, int to) const { return from <= last && to >= first; }
  std::string str() const { return std::to_string(first) + ":" + std::to_string(last); }
};

// "surname, i%": matches cluster names whose surname equals `last` exactly and
// whose initials start with `initial`.
struct NamePattern {
  std::string last;
  std::string initial;

  std::string text() const { return last + ", " + initial + "%"; }
  bool matches(std::string_view full_name) const;
  friend bool operator==(const NamePattern&, const NamePattern&) = default;
};

// Each surname part alone, then (for multi-part surnames) the concatenated,
// space-joined and hyphen-joined forms, all with the first-name initial.
std::vector<NamePattern> name_variants(const RosterEntry& entry);

class ClusterTable {
 public:
  ClusterTable() = default;
  // Throws InputError on duplicate cluster ids.
  explicit ClusterTable(std::vector<Cluster> clusters);

  const Cluster* find(std::uint64_t id) const;
  const Cluster& at(std::uint64_t id) const;
  const std::vector<Cluster>& all() const { return clusters_; }

 private:
  std::vector<Cluster> clusters_;
  std::unordered_map<std::uint64_t, std::size_t> by_id_;
};

// Cluster ids (ascending) whose full_name or alternative_full_name matches a variant.
std::vector<std::uint64_t> retrieve_clusters(const RosterEntry& entry, const ClusterTable& clusters);

// Keeps clusters whose [first_year, last_year] intersects the window.
std::vector<std::uint64_t> window_filter(const ClusterTable& clusters, std::span<const std::uint64_t> ids,
                                         YearWindow window);

// Place-name aliases ("rome" -> "roma"). File lines: alias,canonical.
class SynonymMap {
 public:
  static SynonymMap read(std::istream& in);
  static SynonymMap read_file(const std::string& path);
  void add(std::string_view alias, std::string_view canonical);
  // Normalizes, then maps aliases to their canonical form.
  std::string canonical(std::string_view place) const;

 private:
  std::unordered_map<std::string, std::string> map_;
};

struct FilterOptions {
  const SynonymMap* synonyms = nullptr;
  // Also accept any city from the roster career records in Scenario 2.
  bool career_cities = false;
};

// Equal, or one is a single letter equal to the other's initial, or one
// equals the other's first word. Inputs are normalized first.
bool first_names_compatible(std::string_view a, std::string_view b);

enum class Scenario { s1, s2, s3, baseline1, baseline2 };
std::string_view to_string(Scenario s);
// Accepts "1","2","3","S1".."S3","baseline1","baseline2".
Scenario parse_scenario(std::string_view s);

enum class Status { candidate, kept, dropped, pending };
std::string_view to_string(Status s);

struct Assignment {
  std::string person_id;
  std::uint64_t cluster_id = 0;
  Scenario scenario = Scenario::s1;
  Status status = Status::candidate;
  std::string reason;  // set for dropped assignments

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Drops clusters whose country fields are known and never the roster country,
// or whose known first names are all incompatible with the roster first name.
std::vector<Assignment> scenario1_filter(const ClusterTable& clusters, std::span<const std::uint64_t> ids,
                                         const RosterEntry& entry, const FilterOptions& opts = {});

// Scenario 1 plus: drops clusters whose city fields are known and never the roster city.
std::vector<Assignment> scenario2_filter(const ClusterTable& clusters, std::span<const std::uint64_t> ids,
                                         const RosterEntry& entry, const FilterOptions& opts = {});

// person_id -> windowed candidate cluster ids.
using CandidateMap = std::map<std::string, std::vector<std::uint64_t>>;

// Scenario 3: kept iff accepted, dropped iff rejected, otherwise pending.
// Throws InputError for a decision on a pair that is not a candidate.
std::vector<Assignment> apply_decisions(const CandidateMap& candidates, std::span<const ReviewDecision> decisions);

// Throws PendingDecisionsError if any assignment is still pending.
void require_final(std::span<const Assignment> assignments);

enum class BaselineMode { initials, fullname };
BaselineMode parse_baseline_mode(std::string_view s);

// Baseline 1 (initials): every PAC in the roster name's block. Baseline 2
// (fullname): additionally an exact full first-name match. Window-restricted.
AuthorshipSet baseline_assign(BaselineMode mode, std::span<const RosterEntry> roster, const Corpus& corpus,
                              YearWindow window);

// Publications of the given clusters inside the window, attributed to `person_id`.
AuthorshipSet portfolio(const std::string& person_id, std::span<const std::uint64_t> kept,
                        const ClusterTable& clusters, const Corpus& corpus, YearWindow window);

// Union of portfolios over every kept assignment.
AuthorshipSet portfolio_of(std::span<const Assignment> assignments, const ClusterTable& clusters, const Corpus& corpus,
                           YearWindow window);

// Retrieval output: every name-matched cluster with its window verdict.
struct CandidateRecord {
  std::string person_id;
  std::uint64_t cluster_id = 0;
  bool in_window = false;
};

void write_candidates_jsonl(std::ostream& out, std::span<const CandidateRecord> rows, const ClusterTable& clusters);
std::vector<CandidateRecord> read_candidates_jsonl(std::istream& in);
std::vector<CandidateRecord> read_candidates_file(const std::string& path);
// Windowed candidates grouped by person; every roster person gets an entry.
CandidateMap windowed_candidates(std::span<const CandidateRecord> rows, std::span<const RosterEntry> roster);

void write_assignments_jsonl(std::ostream& out, std::span<const Assignment> rows);

}  // namespace oeuvre
