#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oeuvre/text.hpp"

namespace oeuvre {

inline constexpr std::size_t kHyperAuthorMin = 50;
inline constexpr std::size_t kHyperInstituteMin = 20;

struct Affiliation {
  std::string org;
  std::string dept;
  std::string city;
  std::string country;

  friend auto operator<=>(const Affiliation&, const Affiliation&) = default;
};

struct AuthorMention {
  int position = 0;
  std::string last_name;
  std::string first_name;
  std::string initials;
  std::string email;
  std::vector<int> affiliation_idx;
};

// Exactly one of the two is set: a cited pub_id, or a free-text key
// (first-author last name + year + source, normalized when indexed).
struct Reference {
  std::string pub_id;
  std::string key;
};

// One input record, kept as read so that re-serialization is lossless.
struct Publication {
  std::string pub_id;
  int year = 0;
  std::string title;
  std::string source_title;
  std::vector<std::string> subject_categories;
  std::vector<AuthorMention> authors;
  std::vector<Affiliation> affiliations;
  std::vector<std::string> grants;
  std::vector<Reference> references;
};

// Normalized per-publication attributes used by the scoring rules.
struct PublicationInfo {
  std::string source;                      // normalized source title
  std::vector<std::string> categories;     // sorted, unique
  std::vector<std::string> grants;         // sorted, unique
  std::vector<Affiliation> affiliations;   // normalized, index-aligned with the record
  std::size_t institute_count = 0;
  bool hyper_author = false;
  bool hyper_institute = false;
};

struct PacId {
  std::string pub_id;
  int position = 0;

  friend auto operator<=>(const PacId&, const PacId&) = default;
};

// Publication-author combination: one author mention on one publication.
struct Pac {
  std::size_t pub = 0;  // index into Corpus::publications()
  int position = 0;
  std::string last;
  std::string first;
  std::string initials;
  std::string email;
  std::vector<Affiliation> linked_affiliations;  // normalized
};

class Corpus {
 public:
  Corpus() = default;

  // Reads publications JSONL. Throws InputError with the 1-based line number
  // on malformed lines, missing required fields, or a duplicate pub_id.
  static Corpus parse(std::istream& in, const NormalizeOptions& opts = {});
  static Corpus parse_file(const std::string& path, const NormalizeOptions& opts = {});

  // Validates and indexes already-built records (same checks as parse).
  static Corpus from_publications(std::vector<Publication> pubs, const NormalizeOptions& opts = {});

  void write_jsonl(std::ostream& out) const;

  const std::vector<Publication>& publications() const { return pubs_; }
  const std::vector<PublicationInfo>& infos() const { return infos_; }
  const std::vector<Pac>& pacs() const { return pacs_; }
  const Publication& publication(std::size_t i) const { return pubs_[i]; }
  const PublicationInfo& info(std::size_t i) const { return infos_[i]; }
  const Pac& pac(std::size_t i) const { return pacs_[i]; }

  std::optional<std::size_t> find(std::string_view pub_id) const;
  std::optional<std::size_t> find_pac(const PacId& id) const;
  PacId pac_id(std::size_t pac) const { return {pubs_[pacs_[pac].pub].pub_id, pacs_[pac].position}; }

  // PAC indices of publication `pub`, in author order.
  std::vector<std::size_t> pacs_of(std::size_t pub) const;

  const NormalizeOptions& options() const { return opts_; }

 private:
  void add(Publication pub, std::size_t line);

  NormalizeOptions opts_;
  std::vector<Publication> pubs_;
  std::vector<PublicationInfo> infos_;
  std::vector<Pac> pacs_;
  std::vector<std::size_t> first_pac_;  // first PAC index per publication
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace oeuvre
