#include "oeuvre/portfolio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "oeuvre/blocking.hpp"
#include "oeuvre/csv.hpp"
#include "oeuvre/error.hpp"
#include "oeuvre/text.hpp"

namespace oeuvre {

namespace {

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError(what + ": not an integer '" + std::string(s) + "'");
  return v;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

NormalizedName roster_name(const RosterEntry& e) { return normalize_name(e.last_name, e.first_name, ""); }

std::string place(std::string_view raw, const FilterOptions& opts) {
  return opts.synonyms ? opts.synonyms->canonical(raw) : normalize_text(raw);
}

// Known values (non-empty) none of which is accepted.
template <typename Pred>
bool known_and_rejected(std::initializer_list<const std::string*> values, Pred accept) {
  bool known = false;
  for (const auto* v : values) {
    if (v->empty()) continue;
    known = true;
    if (accept(*v)) return false;
  }
  return known;
}

Assignment decide(const RosterEntry& entry, std::uint64_t id, Scenario sc, std::string reason) {
  return {entry.person_id, id, sc, reason.empty() ? Status::kept : Status::dropped, std::move(reason)};
}

std::string scenario1_reason(const ClusterMeta& m, const RosterEntry& entry, const FilterOptions& opts) {
  std::string country = place(entry.country, opts);
  if (known_and_rejected({&m.address_country, &m.alternative_address_country},
                         [&](const std::string& c) { return place(c, opts) == country; }))
    return "country";
  std::string first = roster_name(entry).first;
  if (known_and_rejected({&m.first_name, &m.alternative_first_name},
                         [&](const std::string& f) { return first_names_compatible(f, first); }))
    return "first_name";
  return {};
}

}  // namespace

std::vector<RosterEntry> read_roster_csv(std::istream& in) {
  auto rows = csv::read(in);
  if (rows.empty()) throw InputError("roster CSV is empty");
  const auto& header = rows.front();
  auto col = [&](const char* name, bool required) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      if (required) throw InputError(std::string("roster CSV lacks column '") + name + "'");
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  auto c_id = *col("person_id", true);
  auto c_last = *col("last_name", true);
  auto c_first = *col("first_name", true);
  auto c_city = *col("city", true);
  auto c_country = *col("country", true);
  auto c_field = col("field_code", false);
  auto c_career = col("career", false);

  std::vector<RosterEntry> out;
  std::set<std::string> ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto get = [&](std::optional<std::size_t> c) { return c && *c < row.size() ? trim(row[*c]) : std::string{}; };
    std::string where = "roster row " + std::to_string(r + 1);
    RosterEntry e{get(c_id), get(c_last), get(c_first), get(c_city), get(c_country), get(c_field), {}};
    if (e.person_id.empty()) throw InputError(where + ": empty person_id");
    if (e.last_name.empty() || e.first_name.empty()) throw InputError(where + ": last_name and first_name required");
    if (!ids.insert(e.person_id).second) throw InputError(where + ": duplicate person_id '" + e.person_id + "'");
    std::string career = get(c_career);
    std::size_t start = 0;
    while (start < career.size()) {
      auto end = career.find(';', start);
      if (end == std::string::npos) end = career.size();
      std::string item = trim(std::string_view(career).substr(start, end - start));
      if (!item.empty()) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError(where + ": career item must be year:city");
        e.career.push_back({parse_int(item.substr(0, colon), where), trim(item.substr(colon + 1))});
      }
      start = end + 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RosterEntry> read_roster_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open roster '" + path + "'");
  return read_roster_csv(in);
}

void write_roster_csv(std::ostream& out, std::span<const RosterEntry> roster) {
  csv::write_row(out, {"person_id", "last_name", "first_name", "city", "country", "field_code", "career"});
  for (const auto& e : roster) {
    std::string career;
    for (const auto& s : e.career) {
      if (!career.empty()) career += ';';
      career += std::to_string(s.year) + ":" + s.city;
    }
    csv::write_row(out, {e.person_id, e.last_name, e.first_name, e.affiliation_city, e.country, e.field_code, career});
  }
}

YearWindow YearWindow::make(int first, int last) {
  if (first > last)
    throw DomainError("window start " + std::to_string(first) + " is after its end " + std::to_string(last));
  return {first, last};
}

YearWindow YearWindow::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("window must be Y0:Y1, got '" + std::string(text) + "'");
  try {
    return make(parse_int(text.substr(0, colon), "window"), parse_int(text.substr(colon + 1), "window"));
  } catch (const InputError& e) {
    throw DomainError(e.what());
  }
}

bool NamePattern::matches(std::string_view full_name) const {
  std::string prefix = last + ", " + initial;
  return full_name.substr(0, prefix.size()) == prefix;
}

std::vector<NamePattern> name_variants(const RosterEntry& entry) {
  auto name = roster_name(entry);
  std::string initial(first_letter(name.initials));
  auto parts = surname_parts(name.last);
  std::vector<NamePattern> out;
  auto add = [&](std::string last) {
    NamePattern p{std::move(last), initial};
    if (!p.last.empty() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  for (const auto& part : parts) add(part);
  if (parts.size() > 1) {
    std::string concat, spaced, hyphenated;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      concat += parts[i];
      spaced += (i ? " " : "") + parts[i];
      hyphenated += (i ? "-" : "") + parts[i];
    }
    add(concat);
    add(spaced);
    add(hyphenated);
  }
  return out;
}

ClusterTable::ClusterTable(std::vector<Cluster> clusters) : clusters_(std::move(clusters)) {
  for (std::size_t i = 0; i < clusters_.size(); ++i)
    if (!by_id_.emplace(clusters_[i].cluster_id, i).second)
      throw InputError("duplicate cluster_id " + std::to_string(clusters_[i].cluster_id));
}

const Cluster* ClusterTable::find(std::uint64_t id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &clusters_[it->second];
}

const Cluster& ClusterTable::at(std::uint64_t id) const {
  if (auto* c = find(id)) return *c;
  throw InputError("unknown cluster_id " + std::to_string(id));
}

std::vector<std::uint64_t> retrieve_clusters(const RosterEntry& entry, const ClusterTable& clusters) {
  auto patterns = name_variants(entry);
  std::vector<std::uint64_t> out;
  for (const auto& c : clusters.all()) {
    bool hit = std::any_of(patterns.begin(), patterns.end(), [&](const NamePattern& p) {
      return p.matches(c.meta.full_name) || (!c.meta.alternative_full_name.empty() && p.matches(c.meta.alternative_full_name));
    });
    if (hit) out.push_back(c.cluster_id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> window_filter(const ClusterTable& clusters, std::span<const std::uint64_t> ids,
                                         YearWindow window) {
  YearWindow::make(window.first, window.last);
  std::vector<std::uint64_t> out;
  for (auto id : ids) {
    const auto& m = clusters.at(id).meta;
    if (window.overlaps(m.first_year, m.last_year)) out.push_back(id);
  }
  return out;
}

SynonymMap SynonymMap::read(std::istream& in) {
  SynonymMap m;
  for (const auto& row : csv::read(in)) {
    if (row.empty() || (!row[0].empty() && row[0][0] == '#')) continue;
    if (row.size() < 2) throw InputError("synonym line needs alias,canonical");
    m.add(row[0], row[1]);
  }
  return m;
}

SynonymMap SynonymMap::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open synonym file '" + path + "'");
  return read(in);
}

void SynonymMap::add(std::string_view alias, std::string_view canonical) {
  map_[normalize_text(alias)] = normalize_text(canonical);
}

std::string SynonymMap::canonical(std::string_view place) const {
  std::string n = normalize_text(place);
  auto it = map_.find(n);
  return it == map_.end() ? n : it->second;
}

bool first_names_compatible(std::string_view a_raw, std::string_view b_raw) {
  std::string a = normalize_name("x", a_raw, "").first;
  std::string b = normalize_name("x", b_raw, "").first;
  if (a == b) return true;
  if (a.empty() || b.empty()) return false;
  auto single_matches = [](const std::string& x, const std::string& y) { return x.size() == 1 && x[0] == y[0]; };
  if (single_matches(a, b) || single_matches(b, a)) return true;
  return a == first_token(b) || b == first_token(a);
}

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::s1: return "S1";
    case Scenario::s2: return "S2";
    case Scenario::s3: return "S3";
    case Scenario::baseline1: return "baseline1";
    case Scenario::baseline2: return "baseline2";
  }
  return "?";
}

Scenario parse_scenario(std::string_view s) {
  if (s == "1" || s == "S1" || s == "s1") return Scenario::s1;
  if (s == "2" || s == "S2" || s == "s2") return Scenario::s2;
  if (s == "3" || s == "S3" || s == "s3") return Scenario::s3;
  if (s == "baseline1") return Scenario::baseline1;
  if (s == "baseline2") return Scenario::baseline2;
  throw DomainError("unknown scenario '" + std::string(s) + "'");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::candidate: return "candidate";
    case Status::kept: return "kept";
    case Status::dropped: return "dropped";
    case Status::pending: return "pending";
  }
  return "?";
}

std::vector<Assignment> scenario1_filter(const ClusterTable& clusters, std::span<const std::uint64_t> ids,
                                         const RosterEntry& entry, const FilterOptions& opts) {
  std::vector<Assignment> out;
  for (auto id : ids) out.push_back(decide(entry, id, Scenario::s1, scenario1_reason(clusters.at(id).meta, entry, opts)));
  return out;
}

std::vector<Assignment> scenario2_filter(const ClusterTable& clusters, std::span<const std::uint64_t> ids,
                                         const RosterEntry& entry, const FilterOptions& opts) {
  std::set<std::string> cities{place(entry.affiliation_city, opts)};
  if (opts.career_cities)
    for (const auto& step : entry.career) cities.insert(place(step.city, opts));
  cities.erase("");

  std::vector<Assignment> out;
  for (auto id : ids) {
    const auto& m = clusters.at(id).meta;
    std::string reason = scenario1_reason(m, entry, opts);
    if (reason.empty() && known_and_rejected({&m.address_city, &m.alternative_address_city},
                                             [&](const std::string& c) { return cities.count(place(c, opts)) > 0; }))
      reason = "city";
    out.push_back(decide(entry, id, Scenario::s2, std::move(reason)));
  }
  return out;
}

std::vector<Assignment> apply_decisions(const CandidateMap& candidates, std::span<const ReviewDecision> decisions) {
  std::map<std::pair<std::string, std::uint64_t>, Verdict> verdicts;
  for (const auto& d : decisions) {
    auto it = candidates.find(d.person_id);
    if (it == candidates.end() || !std::binary_search(it->second.begin(), it->second.end(), d.cluster_id))
      throw InputError("decision for person '" + d.person_id + "' cluster " + std::to_string(d.cluster_id) +
                       " does not match any candidate");
    if (!verdicts.emplace(std::make_pair(d.person_id, d.cluster_id), d.verdict).second)
      throw InputError("second decision for person '" + d.person_id + "' cluster " + std::to_string(d.cluster_id));
  }
  std::vector<Assignment> out;
  for (const auto& [person, ids] : candidates) {
    for (auto id : ids) {
      Assignment a{person, id, Scenario::s3, Status::pending, {}};
      if (auto v = verdicts.find({person, id}); v != verdicts.end()) {
        a.status = v->second == Verdict::accept ? Status::kept : Status::dropped;
        if (a.status == Status::dropped) a.reason = "rejected";
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

void require_final(std::span<const Assignment> assignments) {
  auto pending = std::count_if(assignments.begin(), assignments.end(),
                               [](const Assignment& a) { return a.status == Status::pending; });
  if (pending > 0) throw PendingDecisionsError(std::to_string(pending) + " candidate(s) still await a review decision");
}

BaselineMode parse_baseline_mode(std::string_view s) {
  if (s == "initials") return BaselineMode::initials;
  if (s == "fullname") return BaselineMode::fullname;
  throw DomainError("baseline mode must be 'initials' or 'fullname'");
}

AuthorshipSet baseline_assign(BaselineMode mode, std::span<const RosterEntry> roster, const Corpus& corpus,
                              YearWindow window) {
  std::map<BlockKey, std::vector<std::size_t>> by_key;
  for (std::size_t p = 0; p < corpus.pacs().size(); ++p) by_key[block_key(corpus.pac(p))].push_back(p);

  AuthorshipSet out;
  for (const auto& entry : roster) {
    auto name = roster_name(entry);
    BlockKey key{compact_surname(name.last), std::string(first_letter(name.initials))};
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    for (std::size_t p : it->second) {
      const Pac& pac = corpus.pac(p);
      const Publication& pub = corpus.publication(pac.pub);
      if (!window.contains(pub.year)) continue;
      if (mode == BaselineMode::fullname && !(has_full_first_name(pac.first, pac.initials) && pac.first == name.first))
        continue;
      out.insert({entry.person_id, pub.pub_id});
    }
  }
  return out;
}

AuthorshipSet portfolio(const std::string& person_id, std::span<const std::uint64_t> kept,
                        const ClusterTable& clusters, const Corpus& corpus, YearWindow window) {
  AuthorshipSet out;
  for (auto id : kept) {
    for (const auto& pub_id : clusters.at(id).pub_ids()) {
      auto pub = corpus.find(pub_id);
      if (!pub) throw InputError("cluster " + std::to_string(id) + " references unknown publication '" + pub_id + "'");
      if (window.contains(corpus.publication(*pub).year)) out.insert({person_id, pub_id});
    }
  }
  return out;
}

AuthorshipSet portfolio_of(std::span<const Assignment> assignments, const ClusterTable& clusters, const Corpus& corpus,
                           YearWindow window) {
  std::map<std::string, std::vector<std::uint64_t>> kept;
  for (const auto& a : assignments)
    if (a.status == Status::kept) kept[a.person_id].push_back(a.cluster_id);
  AuthorshipSet out;
  for (const auto& [person, ids] : kept) out.merge(portfolio(person, ids, clusters, corpus, window));
  return out;
}

void write_candidates_jsonl(std::ostream& out, std::span<const CandidateRecord> rows, const ClusterTable& clusters) {
  for (const auto& r : rows) {
    const auto& m = clusters.at(r.cluster_id).meta;
    nlohmann::ordered_json j;
    j["person_id"] = r.person_id;
    j["cluster_id"] = r.cluster_id;
    j["full_name"] = m.full_name;
    j["n_pubs"] = m.n_pubs;
    j["first_year"] = m.first_year;
    j["last_year"] = m.last_year;
    j["in_window"] = r.in_window;
    out << j.dump() << '\n';
  }
}

std::vector<CandidateRecord> read_candidates_jsonl(std::istream& in) {
  std::vector<CandidateRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(text);
      out.push_back({j.at("person_id").get<std::string>(), j.at("cluster_id").get<std::uint64_t>(),
                     j.at("in_window").get<bool>()});
    } catch (const nlohmann::json::exception& e) {
      throw InputError("candidates line " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CandidateRecord> read_candidates_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open candidates file '" + path + "'");
  return read_candidates_jsonl(in);
}

CandidateMap windowed_candidates(std::span<const CandidateRecord> rows, std::span<const RosterEntry> roster) {
  CandidateMap out;
  for (const auto& e : roster) out[e.person_id];
  for (const auto& r : rows)
    if (r.in_window) out[r.person_id].push_back(r.cluster_id);
  for (auto& [person, ids] : out) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return out;
}

void write_assignments_jsonl(std::ostream& out, std::span<const Assignment> rows) {
  for (const auto& a : rows) {
    nlohmann::ordered_json j;
    j["person_id"] = a.person_id;
    j["cluster_id"] = a.cluster_id;
    j["scenario"] = to_string(a.scenario);
    j["status"] = to_string(a.status);
    if (!a.reason.empty()) j["reason"] = a.reason;
    out << j.dump() << '\n';
  }
}

}  // namespace oeuvre
