#pragma once

// Straight-line re-implementation of the pair scoring table, written from
// the rule list rather than from the production code. Works from the
// corpus records only: no blocks, no citation index, no shared helpers
// beyond name normalization and the full-first-name predicate.

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "oeuvre/corpus.hpp"
#include "oeuvre/scoring.hpp"
#include "oeuvre/text.hpp"

namespace score_oracle {

inline std::string name_key(const oeuvre::Pac& p) {
  std::string last;
  for (char c : p.last)
    if (c != ' ' && c != '-') last += c;
  const std::string& src = p.initials.empty() ? p.first : p.initials;
  unsigned char c0 = static_cast<unsigned char>(src[0]);
  std::size_t len = c0 >= 0xF0 ? 4 : c0 >= 0xE0 ? 3 : c0 >= 0xC0 ? 2 : 1;
  return last + "|" + src.substr(0, len);
}

inline int tier(const oeuvre::Affiliation& a, const oeuvre::Affiliation& b) {
  int t = 0;
  if (!a.country.empty() && !a.city.empty() && a.country == b.country && a.city == b.city) {
    t = 1;
    if (!a.org.empty() && a.org == b.org) {
      t = 2;
      if (!a.dept.empty() && a.dept == b.dept) t = 3;
    }
  }
  return t;
}

inline int best(const std::vector<oeuvre::Affiliation>& a, const std::vector<oeuvre::Affiliation>& b) {
  int t = 0;
  for (const auto& x : a)
    for (const auto& y : b)
      if (tier(x, y) > t) t = tier(x, y);
  return t;
}

inline std::size_t institutes(const oeuvre::PublicationInfo& info) {
  std::set<std::string> s;
  for (const auto& a : info.affiliations) {
    if (!a.org.empty()) s.insert("org:" + a.org);
    else if (!a.city.empty() || !a.country.empty()) s.insert("place:" + a.city + "/" + a.country);
  }
  return s.size();
}

inline std::set<std::string> refs(const oeuvre::Corpus& c, std::size_t pub) {
  std::set<std::string> out;
  const auto& p = c.publication(pub);
  for (const auto& r : p.references) {
    if (!r.pub_id.empty()) {
      if (r.pub_id != p.pub_id) out.insert("P:" + r.pub_id);
    } else {
      std::string k = oeuvre::normalize_key(r.key, c.options());
      if (!k.empty()) out.insert("T:" + k);
    }
  }
  return out;
}

// Scores PACs a and b, which the caller guarantees share a name block.
inline oeuvre::ScoreBreakdown score(const oeuvre::Corpus& c, const std::unordered_set<std::string>& general,
                                    std::size_t pac_a, std::size_t pac_b) {
  oeuvre::ScoreBreakdown s;
  const oeuvre::Pac& a = c.pac(pac_a);
  const oeuvre::Pac& b = c.pac(pac_b);

  // 1 email
  if (a.email != "" && b.email != "" && a.email == b.email) s.email = 100;

  // 2 initials
  bool conflict = false;
  if (a.initials.size() >= 2 && b.initials.size() >= 2) {
    for (std::size_t i = 1; i < a.initials.size() && i < b.initials.size(); ++i)
      if (a.initials[i] != b.initials[i]) conflict = true;
  }
  if (conflict) s.initials = -10;
  else if (a.initials == b.initials && a.initials.size() == 2) s.initials = 5;
  else if (a.initials == b.initials && a.initials.size() > 2) s.initials = 10;

  // 3 first name
  if (oeuvre::has_full_first_name(a.first, a.initials) && oeuvre::has_full_first_name(b.first, b.initials) &&
      a.first == b.first)
    s.first_name = general.count(a.first) ? 3 : 6;

  // 4 linked affiliation
  int lt = best(a.linked_affiliations, b.linked_affiliations);
  if (lt == 1) s.linked_affiliation = 4;
  if (lt == 2) s.linked_affiliation = 7;
  if (lt == 3) s.linked_affiliation = 10;

  if (a.pub == b.pub) return s;

  const auto& pa = c.publication(a.pub);
  const auto& pb = c.publication(b.pub);
  const auto& ia = c.info(a.pub);
  const auto& ib = c.info(b.pub);
  bool hyper_author = pa.authors.size() >= 50 || pb.authors.size() >= 50;
  bool hyper_institute = institutes(ia) >= 20 || institutes(ib) >= 20;

  // 5 shared co-authors
  std::string focal = name_key(a);
  std::set<std::string> ka, kb;
  for (const auto& p : c.pacs())
    if (p.pub == a.pub) ka.insert(name_key(p));
  for (const auto& p : c.pacs())
    if (p.pub == b.pub) kb.insert(name_key(p));
  int shared = 0;
  for (const auto& k : ka)
    if (k != focal && kb.count(k)) ++shared;
  if (!hyper_author) {
    if (shared == 1) s.shared_coauthors = 4;
    if (shared == 2) s.shared_coauthors = 7;
    if (shared > 2) s.shared_coauthors = 10;
  } else {
    if (shared == 1) s.shared_coauthors = 2;
    if (shared == 2) s.shared_coauthors = 4;
    if (shared > 2) s.shared_coauthors = 5;
  }

  // 6 grant
  for (const auto& g : ia.grants)
    for (const auto& h : ib.grants)
      if (g == h) s.grant = 10;

  // 7 unlinked affiliation
  int ut = best(ia.affiliations, ib.affiliations);
  if (!hyper_institute) {
    if (ut == 1) s.unlinked_affiliation = 2;
    if (ut == 2) s.unlinked_affiliation = 5;
    if (ut == 3) s.unlinked_affiliation = 8;
  } else {
    if (ut == 1) s.unlinked_affiliation = 1;
    if (ut == 2) s.unlinked_affiliation = 3;
    if (ut == 3) s.unlinked_affiliation = 4;
  }

  // 8 journal, else subject category
  if (ia.source != "" && ia.source == ib.source) {
    s.journal = 6;
  } else {
    for (const auto& x : ia.categories)
      for (const auto& y : ib.categories)
        if (x == y) s.subject_category = 3;
  }

  // 9 self-citation
  auto ra = refs(c, a.pub);
  auto rb = refs(c, b.pub);
  if (ra.count("P:" + pb.pub_id) || rb.count("P:" + pa.pub_id)) s.self_citation = hyper_author ? 5 : 10;

  // 10 bibliographic coupling
  int coupled = 0;
  for (const auto& r : ra)
    if (rb.count(r)) ++coupled;
  if (coupled == 1) s.bib_coupling = 2;
  if (coupled == 2) s.bib_coupling = 4;
  if (coupled == 3) s.bib_coupling = 6;
  if (coupled == 4) s.bib_coupling = 8;
  if (coupled > 4) s.bib_coupling = 10;

  // 11 co-citation
  int co = 0;
  for (std::size_t k = 0; k < c.publications().size(); ++k) {
    auto rk = refs(c, k);
    if (rk.count("P:" + pa.pub_id) && rk.count("P:" + pb.pub_id)) ++co;
  }
  if (co == 1) s.co_citation = 2;
  if (co == 2) s.co_citation = 3;
  if (co == 3) s.co_citation = 4;
  if (co == 4) s.co_citation = 5;
  if (co > 4) s.co_citation = 6;

  return s;
}

// Legal values per component, straight from the table (dampened values included).
inline const std::vector<std::pair<const char*, std::vector<int>>>& legal_values() {
  static const std::vector<std::pair<const char*, std::vector<int>>> v{
      {"email", {0, 100}},
      {"initials", {-10, 0, 5, 10}},
      {"first_name", {0, 3, 6}},
      {"linked_affiliation", {0, 4, 7, 10}},
      {"shared_coauthors", {0, 2, 4, 5, 7, 10}},
      {"grant", {0, 10}},
      {"unlinked_affiliation", {0, 1, 2, 3, 4, 5, 8}},
      {"subject_category", {0, 3}},
      {"journal", {0, 6}},
      {"self_citation", {0, 5, 10}},
      {"bib_coupling", {0, 2, 4, 6, 8, 10}},
      {"co_citation", {0, 2, 3, 4, 5, 6}},
  };
  return v;
}

// Components in legal_values() order.
inline std::vector<int> components(const oeuvre::ScoreBreakdown& s) {
  return {s.email,   s.initials,      s.first_name,           s.linked_affiliation,
          s.shared_coauthors, s.grant, s.unlinked_affiliation, s.subject_category,
          s.journal, s.self_citation, s.bib_coupling,         s.co_citation};
}

inline bool legal(const oeuvre::ScoreBreakdown& s) {
  auto values = components(s);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& set = legal_values()[k].second;
    if (std::find(set.begin(), set.end(), values[k]) == set.end()) return false;
  }
  return !(s.journal && s.subject_category);
}

}  // namespace score_oracle
