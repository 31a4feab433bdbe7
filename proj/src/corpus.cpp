#include "oeuvre/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "oeuvre/error.hpp"

namespace oeuvre {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("corpus line " + std::to_string(line) + ": " + what);
}

std::string opt_string(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) fail(line, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::vector<std::string> opt_strings(const json& obj, const char* key, std::size_t line) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) fail(line, std::string("field '") + key + "' must be an array");
  for (const auto& v : *it) {
    if (!v.is_string()) fail(line, std::string("field '") + key + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Publication decode(const json& j, std::size_t line) {
  if (!j.is_object()) fail(line, "record is not a JSON object");
  Publication p;

  auto id = j.find("pub_id");
  if (id == j.end() || !id->is_string() || id->get<std::string>().empty())
    fail(line, "missing required field 'pub_id'");
  p.pub_id = id->get<std::string>();

  auto year = j.find("year");
  if (year == j.end() || !year->is_number_integer()) fail(line, "missing required field 'year'");
  p.year = year->get<int>();

  auto authors = j.find("authors");
  if (authors == j.end() || !authors->is_array()) fail(line, "missing required field 'authors'");
  for (const auto& a : *authors) {
    if (!a.is_object()) fail(line, "author entry is not an object");
    AuthorMention m;
    auto pos = a.find("position");
    if (pos == a.end() || !pos->is_number_integer()) fail(line, "author entry lacks integer 'position'");
    m.position = pos->get<int>();
    m.last_name = opt_string(a, "last_name", line);
    m.first_name = opt_string(a, "first_name", line);
    m.initials = opt_string(a, "initials", line);
    m.email = opt_string(a, "email", line);
    if (auto idx = a.find("affiliation_idx"); idx != a.end() && !idx->is_null()) {
      if (!idx->is_array()) fail(line, "'affiliation_idx' must be an array");
      for (const auto& v : *idx) {
        if (!v.is_number_integer()) fail(line, "'affiliation_idx' must hold integers");
        m.affiliation_idx.push_back(v.get<int>());
      }
    }
    p.authors.push_back(std::move(m));
  }

  p.title = opt_string(j, "title", line);
  p.source_title = opt_string(j, "source_title", line);
  p.subject_categories = opt_strings(j, "subject_categories", line);
  p.grants = opt_strings(j, "grants", line);

  if (auto affs = j.find("affiliations"); affs != j.end() && !affs->is_null()) {
    if (!affs->is_array()) fail(line, "'affiliations' must be an array");
    for (const auto& a : *affs) {
      if (!a.is_object()) fail(line, "affiliation entry is not an object");
      p.affiliations.push_back({opt_string(a, "org", line), opt_string(a, "dept", line),
                                opt_string(a, "city", line), opt_string(a, "country", line)});
    }
  }

  if (auto refs = j.find("references"); refs != j.end() && !refs->is_null()) {
    if (!refs->is_array()) fail(line, "'references' must be an array");
    for (const auto& r : *refs) {
      if (!r.is_object()) fail(line, "reference entry is not an object");
      Reference ref{opt_string(r, "pub_id", line), opt_string(r, "key", line)};
      p.references.push_back(std::move(ref));
    }
  }
  return p;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Corpus Corpus::parse(std::istream& in, const NormalizeOptions& opts) {
  Corpus c;
  c.opts_ = opts;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(line, std::string("malformed JSON: ") + e.what());
    }
    c.add(decode(j, line), line);
  }
  return c;
}

Corpus Corpus::parse_file(const std::string& path, const NormalizeOptions& opts) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus '" + path + "'");
  return parse(in, opts);
}

Corpus Corpus::from_publications(std::vector<Publication> pubs, const NormalizeOptions& opts) {
  Corpus c;
  c.opts_ = opts;
  std::size_t line = 0;
  for (auto& p : pubs) c.add(std::move(p), ++line);
  return c;
}

void Corpus::add(Publication pub, std::size_t line) {
  if (pub.pub_id.empty()) fail(line, "missing required field 'pub_id'");
  if (pub.year <= 0) fail(line, "year must be positive");
  if (by_id_.count(pub.pub_id)) fail(line, "duplicate pub_id '" + pub.pub_id + "'");
  for (const auto& r : pub.references)
    if (r.pub_id.empty() == r.key.empty()) fail(line, "reference needs exactly one of 'pub_id' or 'key'");

  PublicationInfo info;
  info.source = normalize_text(pub.source_title, opts_);
  for (const auto& s : pub.subject_categories)
    if (auto n = normalize_text(s, opts_); !n.empty()) info.categories.push_back(std::move(n));
  sort_unique(info.categories);
  for (const auto& g : pub.grants)
    if (auto n = normalize_text(g, opts_); !n.empty()) info.grants.push_back(std::move(n));
  sort_unique(info.grants);

  std::set<std::string> institutes;
  for (const auto& a : pub.affiliations) {
    Affiliation n{normalize_text(a.org, opts_), normalize_text(a.dept, opts_), normalize_text(a.city, opts_),
                  normalize_text(a.country, opts_)};
    if (!n.org.empty()) institutes.insert(n.org);
    else if (!n.city.empty() || !n.country.empty()) institutes.insert("\x01" + n.city + "\x01" + n.country);
    info.affiliations.push_back(std::move(n));
  }
  info.institute_count = institutes.size();
  info.hyper_author = pub.authors.size() >= kHyperAuthorMin;
  info.hyper_institute = info.institute_count >= kHyperInstituteMin;

  std::size_t pub_index = pubs_.size();
  std::vector<Pac> pacs;
  std::set<int> positions;
  for (const auto& m : pub.authors) {
    if (m.position < 1) fail(line, "author position must be >= 1");
    if (!positions.insert(m.position).second)
      fail(line, "duplicate author position " + std::to_string(m.position));
    NormalizedName name;
    try {
      name = normalize_name(m.last_name, m.first_name, m.initials, opts_);
    } catch (const DomainError& e) {
      fail(line, std::string(e.what()) + " at position " + std::to_string(m.position));
    }
    if (name.last.empty()) fail(line, "mention at position " + std::to_string(m.position) + " has no last name");
    if (name.initials.empty())
      fail(line, "mention at position " + std::to_string(m.position) + " has neither first name nor initials");

    Pac pac;
    pac.pub = pub_index;
    pac.position = m.position;
    pac.last = std::move(name.last);
    pac.first = std::move(name.first);
    pac.initials = std::move(name.initials);
    pac.email = normalize_email(m.email);
    std::vector<int> links = m.affiliation_idx;
    sort_unique(links);
    for (int idx : links) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= info.affiliations.size())
        fail(line, "affiliation_idx " + std::to_string(idx) + " out of range at position " +
                       std::to_string(m.position));
      pac.linked_affiliations.push_back(info.affiliations[static_cast<std::size_t>(idx)]);
    }
    pacs.push_back(std::move(pac));
  }
  std::sort(pacs.begin(), pacs.end(), [](const Pac& a, const Pac& b) { return a.position < b.position; });

  by_id_.emplace(pub.pub_id, pub_index);
  first_pac_.push_back(pacs_.size());
  for (auto& p : pacs) pacs_.push_back(std::move(p));
  pubs_.push_back(std::move(pub));
  infos_.push_back(std::move(info));
}

std::optional<std::size_t> Corpus::find(std::string_view pub_id) const {
  auto it = by_id_.find(std::string(pub_id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Corpus::find_pac(const PacId& id) const {
  auto pub = find(id.pub_id);
  if (!pub) return std::nullopt;
  for (std::size_t i : pacs_of(*pub))
    if (pacs_[i].position == id.position) return i;
  return std::nullopt;
}

std::vector<std::size_t> Corpus::pacs_of(std::size_t pub) const {
  std::size_t begin = first_pac_[pub];
  std::size_t end = pub + 1 < first_pac_.size() ? first_pac_[pub + 1] : pacs_.size();
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

void Corpus::write_jsonl(std::ostream& out) const {
  for (const auto& p : pubs_) {
    ordered_json j;
    j["pub_id"] = p.pub_id;
    j["year"] = p.year;
    if (!p.title.empty()) j["title"] = p.title;
    j["source_title"] = p.source_title;
    j["subject_categories"] = p.subject_categories;
    ordered_json authors = ordered_json::array();
    for (const auto& a : p.authors) {
      authors.push_back({{"position", a.position},
                         {"last_name", a.last_name},
                         {"first_name", a.first_name},
                         {"initials", a.initials},
                         {"email", a.email},
                         {"affiliation_idx", a.affiliation_idx}});
    }
    j["authors"] = std::move(authors);
    ordered_json affs = ordered_json::array();
    for (const auto& a : p.affiliations)
      affs.push_back({{"org", a.org}, {"dept", a.dept}, {"city", a.city}, {"country", a.country}});
    j["affiliations"] = std::move(affs);
    j["grants"] = p.grants;
    ordered_json refs = ordered_json::array();
    for (const auto& r : p.references) {
      if (!r.pub_id.empty()) refs.push_back({{"pub_id", r.pub_id}});
      else refs.push_back({{"key", r.key}});
    }
    j["references"] = std::move(refs);
    out << j.dump() << '\n';
  }
}

}  // namespace oeuvre
