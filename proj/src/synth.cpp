#include "oeuvre/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

namespace oeuvre::synth {

namespace {

using Rng = std::mt19937_64;

// Plain modulo keeps the stream identical across standard libraries.
std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool chance(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

template <typename T, std::size_t N>
const T& pick_from(Rng& rng, const T (&arr)[N]) {
  return arr[pick(rng, N)];
}

constexpr const char* kSyllables[] = {"ba", "be", "bi", "bo", "ca", "ce", "ci", "co", "da", "de", "di", "do", "fa", "fe",
                                      "fi", "fo", "ga", "gi", "go", "la", "le", "li", "lo", "lu", "ma", "me", "mi", "mo",
                                      "na", "ne", "ni", "no", "pa", "pe", "pi", "po", "ra", "re", "ri", "ro", "sa", "se",
                                      "si", "so", "ta", "te", "ti", "to", "va", "ve", "vi", "vo", "za", "zo"};
constexpr const char* kEndings[] = {"ni", "ri", "lli", "tti", "ssi", "no", "to", "la", "ra", "sco"};

constexpr const char* kFirstNames[] = {
    "Marco",  "Luca",      "Giovanni", "Andrea",    "Francesco", "Paolo",   "Stefano",  "Alessandro", "Roberto",
    "Giuseppe", "Antonio", "Matteo",   "Davide",    "Simone",    "Fabio",   "Massimo",  "Franco",     "Giorgio",
    "Enrico", "Claudio",   "Maria",    "Anna",      "Giulia",    "Francesca", "Laura",  "Elena",      "Chiara",
    "Sara",   "Paola",     "Silvia",   "Valentina", "Federica",  "Alessandra", "Roberta", "Cristina", "Barbara",
    "Monica", "Elisa",     "Marta",    "Lucia"};

constexpr const char* kItalianCities[] = {"Milano", "Roma",  "Torino",  "Napoli",  "Bologna", "Firenze",
                                          "Padova", "Pisa",  "Genova",  "Bari",    "Palermo", "Trieste",
                                          "Pavia",  "Siena", "Catania", "Perugia"};

struct ForeignPlace {
  const char* city;
  const char* country;
};
constexpr ForeignPlace kForeign[] = {{"Paris", "France"},         {"Berlin", "Germany"}, {"Madrid", "Spain"},
                                     {"London", "United Kingdom"}, {"Boston", "USA"},     {"Zurich", "Switzerland"},
                                     {"Vienna", "Austria"}};

constexpr const char* kFields[] = {"Physics",  "Chemistry", "Engineering", "Mathematics",
                                   "Medicine", "Economics", "Biology",     "Computer Science"};

std::string lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}

std::string upper(std::string s) {
  for (char& c : s)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return s;
}

std::string letters_code(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k > 0);
  return s;
}

class NameFactory {
 public:
  explicit NameFactory(Rng& rng) : rng_(rng) {}

  std::string surname() {
    for (;;) {
      std::string s = std::string(pick_from(rng_, kSyllables)) + pick_from(rng_, kSyllables) + pick_from(rng_, kEndings);
      if (used_.insert(s).second) {
        s[0] = static_cast<char>(s[0] - 'a' + 'A');
        return s;
      }
    }
  }

 private:
  Rng& rng_;
  std::set<std::string> used_;
};

struct Person {
  std::string last;
  std::string first;
  std::string email;
  Affiliation affiliation;
  std::string field;
  std::vector<std::string> journals;
  std::vector<std::pair<std::string, std::string>> coauthors;  // last, first
};

class Builder {
 public:
  explicit Builder(Rng& rng) : rng_(rng), names_(rng) {}

  NameFactory& names() { return names_; }

  std::string next_pub_id() {
    char buf[16];
    std::snprintf(buf, sizeof buf, "S%06zu", ++pub_counter_);
    return buf;
  }

  std::string journal(const std::string& field) { return "Annals of " + field + " " + letters_code(journal_counter_++); }

  Person person(std::string last, std::string first, Affiliation aff, std::string field) {
    Person p;
    p.last = std::move(last);
    p.first = std::move(first);
    p.affiliation = std::move(aff);
    p.field = std::move(field);
    std::string compact;
    for (char c : lower(p.last))
      if (c >= 'a' && c <= 'z') compact += c;
    p.email = lower(p.first) + "." + compact + "@" + compact_place(p.affiliation.city) + ".example.org";
    p.journals = {journal(p.field), journal(p.field)};
    for (int k = 0; k < 4; ++k) p.coauthors.emplace_back(names_.surname(), pick_from(rng_, kFirstNames));
    return p;
  }

  // One publication by `who` at `aff`. Returns the focal mention's position.
  int publication(std::vector<Publication>& out, const Person& who, const Affiliation& aff, int year, bool link_aff,
                  bool with_email, bool full_first, const std::vector<std::string>& cite) {
    Publication pub;
    pub.pub_id = next_pub_id();
    pub.year = year;
    pub.title = "On " + lower(who.field) + " topic " + pub.pub_id;
    pub.source_title = who.journals[pick(rng_, who.journals.size())];
    pub.subject_categories = {who.field, who.field + " Applied"};
    pub.affiliations = {aff};

    std::vector<std::pair<std::string, std::string>> others;
    std::size_t a = pick(rng_, who.coauthors.size());
    std::size_t b = (a + 1 + pick(rng_, who.coauthors.size() - 1)) % who.coauthors.size();
    others.push_back(who.coauthors[a]);
    others.push_back(who.coauthors[b]);
    if (chance(rng_, 0.3)) others.emplace_back(names_.surname(), pick_from(rng_, kFirstNames));

    int focal = static_cast<int>(pick(rng_, others.size() + 1)) + 1;
    int pos = 1;
    for (std::size_t k = 0; k <= others.size(); ++k) {
      AuthorMention m;
      m.position = pos;
      if (pos == focal) {
        m.last_name = who.last;
        if (full_first) m.first_name = who.first;
        else m.initials = who.first.substr(0, 1);
        if (with_email) m.email = who.email;
        if (link_aff) m.affiliation_idx = {0};
      } else {
        const auto& [last, first] = others[pos < focal ? pos - 1 : pos - 2];
        m.last_name = last;
        m.first_name = first;
        m.affiliation_idx = {0};
      }
      pub.authors.push_back(std::move(m));
      ++pos;
    }
    for (const auto& c : cite) pub.references.push_back({c, {}});
    out.push_back(std::move(pub));
    return focal;
  }

 private:
  static std::string compact_place(const std::string& s) {
    std::string out;
    for (char c : lower(s))
      if (c >= 'a' && c <= 'z') out += c;
    return out;
  }

  Rng& rng_;
  NameFactory names_;
  std::size_t pub_counter_ = 0;
  std::size_t journal_counter_ = 0;
};

Affiliation italian(const std::string& city, const std::string& field) {
  return {"Universita di " + city, "Dipartimento di " + field, city, "Italy"};
}

std::string other_italian_city(Rng& rng, const std::set<std::string>& avoid) {
  for (;;) {
    std::string c = pick_from(rng, kItalianCities);
    if (!avoid.count(c)) return c;
  }
}

std::string other_field(Rng& rng, const std::string& avoid) {
  for (;;) {
    std::string f = pick_from(rng, kFields);
    if (f != avoid) return f;
  }
}

}  // namespace

Population generate_population(const PopulationOptions& opts) {
  Rng rng(opts.seed);
  Builder builder(rng);
  Population pop;
  const int span = opts.last_year - opts.first_year + 1;

  for (std::size_t r = 0; r < opts.researchers; ++r) {
    char id[16];
    std::snprintf(id, sizeof id, "P%04zu", r + 1);

    std::string last = builder.names().surname();
    std::string roster_last = upper(last);
    if (chance(rng, 0.08)) {
      std::string second = builder.names().surname();
      roster_last += " " + upper(second);
      last += (chance(rng, 0.5) ? "-" : " ") + second;
    }
    std::string first = pick_from(rng, kFirstNames);
    std::string field = pick_from(rng, kFields);
    std::string city = pick_from(rng, kItalianCities);

    RosterEntry entry{id, roster_last, first, city, "Italy", field, {}};
    Person self = builder.person(last, first, italian(city, field), field);

    int move_year = 0;
    std::string previous_city;
    if (chance(rng, opts.mover_rate)) {
      previous_city = other_italian_city(rng, {city});
      move_year = opts.first_year + 2 + static_cast<int>(pick(rng, static_cast<std::size_t>(span - 4)));
      entry.career = {{opts.first_year, previous_city}, {move_year, city}};
    }

    std::vector<std::string> own_pubs;
    std::size_t n = 3 + pick(rng, 8);
    for (std::size_t k = 0; k < n; ++k) {
      int year = opts.first_year + static_cast<int>(pick(rng, static_cast<std::size_t>(span)));
      Affiliation aff = move_year && year < move_year ? italian(previous_city, field) : self.affiliation;
      std::vector<std::string> cite;
      for (const auto& prev : own_pubs)
        if (chance(rng, 0.25)) cite.push_back(prev);
      builder.publication(pop.publications, self, aff, year, chance(rng, 0.9), chance(rng, 0.7), chance(rng, 0.85), cite);
      own_pubs.push_back(pop.publications.back().pub_id);
      if (opts.window.contains(year)) pop.gold.insert({entry.person_id, pop.publications.back().pub_id});
    }

    auto plant = [&](HomonymKind kind, Affiliation aff) {
      Person twin = builder.person(last, first, aff, other_field(rng, field));
      PlantedHomonym planted{entry.person_id, kind, {}};
      std::size_t m = 2 + pick(rng, 3);
      for (std::size_t k = 0; k < m; ++k) {
        int year = opts.window.first + static_cast<int>(pick(rng, static_cast<std::size_t>(opts.window.last - opts.window.first + 1)));
        int pos = builder.publication(pop.publications, twin, aff, year, true, chance(rng, 0.7), true, {});
        planted.pacs.push_back({pop.publications.back().pub_id, pos});
      }
      pop.planted.push_back(std::move(planted));
    };
    if (chance(rng, opts.foreign_homonym_rate)) {
      const auto& place = pick_from(rng, kForeign);
      plant(HomonymKind::foreign, {std::string("University of ") + place.city, "Department of Science", place.city,
                                   place.country});
    }
    if (chance(rng, opts.city_homonym_rate)) {
      std::set<std::string> avoid{city};
      if (!previous_city.empty()) avoid.insert(previous_city);
      std::string other = other_italian_city(rng, avoid);
      plant(HomonymKind::other_city, italian(other, "Scienze"));
    }
    pop.roster.push_back(std::move(entry));
  }
  return pop;
}

std::vector<Publication> bernelli_fixture() {
  std::vector<Publication> pubs;
  std::size_t collaborator = 0;
  const Affiliation polimi{"Politecnico di Milano", "Dipartimento di Scienze e Tecnologie Aerospaziali", "Milano",
                           "Italy"};

  auto add = [&](std::string id, int year, AuthorMention focal, std::vector<Affiliation> affs) {
    Publication p;
    p.pub_id = std::move(id);
    p.year = year;
    p.title = "Spacecraft dynamics study " + p.pub_id;
    p.source_title = "Journal " + upper(letters_code(pubs.size()));
    p.subject_categories = {"Category " + upper(letters_code(pubs.size()))};
    p.affiliations = std::move(affs);
    focal.position = 1;
    p.authors.push_back(std::move(focal));
    AuthorMention other;
    other.position = 2;
    other.last_name = "Collab" + letters_code(collaborator++);
    other.first_name = "Ugo";
    p.authors.push_back(std::move(other));
    pubs.push_back(std::move(p));
  };

  AuthorMention bernelli;
  bernelli.last_name = "Bernelli";
  bernelli.initials = "F";
  add("BZ0001", 2003, bernelli, {});

  // 35 publications over 1989-2016 tied together by one e-mail address.
  for (int k = 0; k < 35; ++k) {
    AuthorMention m;
    m.last_name = "Bernelli-Zazzera";
    m.first_name = "Franco";
    m.initials = "F";
    m.email = "franco.bernelli@polimi.it";
    m.affiliation_idx = {0};
    int year = 1989 + (k * 27) / 34;
    char id[16];
    std::snprintf(id, sizeof id, "BZ%04d", 100 + k);
    add(id, year, m, {polimi});
  }

  for (int year : {2000, 2002, 2005}) {
    AuthorMention m;
    m.last_name = "Bernelli-Zazzera";
    m.initials = "F";
    add("BZ" + std::to_string(year), year, m, {});
  }

  AuthorMention francesca;
  francesca.last_name = "Zazzera";
  francesca.first_name = "Francesca";
  add("BZ0200", 2008, francesca, {});

  for (int year : {2014, 2015}) {
    AuthorMention m;
    m.last_name = "Zazzera";
    m.first_name = "Franco Bernelli";
    m.initials = "FB";
    add("BZ03" + std::to_string(year % 100), year, m, {});
  }

  AuthorMention fb;
  fb.last_name = "Zazzera";
  fb.first_name = "F. Bernelli";
  fb.initials = "FB";
  add("BZ0400", 2007, fb, {});
  return pubs;
}

RosterEntry bernelli_roster_entry() {
  return {"BZ-0001", "BERNELLI ZAZZERA", "Franco", "Milano", "Italy", "ING-IND/03", {}};
}

}  // namespace oeuvre::synth
