#pragma once

// Small random corpora with crowded name blocks, for property tests.

#include <random>
#include <string>
#include <vector>

#include "oeuvre/corpus.hpp"

namespace testsupport {

struct RandomCorpusOptions {
  std::size_t publications = 40;
  double hyper_author_rate = 0.05;
  double hyper_institute_rate = 0.05;
};

class RandomCorpus {
 public:
  explicit RandomCorpus(std::uint64_t seed) : rng_(seed) {}

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  oeuvre::AuthorMention mention(int position, std::size_t n_affiliations) {
    static const std::vector<std::string> lasts{"Rossi", "Rossi", "Russo", "De Luca", "Bernelli-Zazzera", "Müller"};
    static const std::vector<std::string> firsts{"Maria", "Marco", "M.", "Mario", "", "Anna", "Andrea Cesare",
                                                 "Franco", "F. B."};
    static const std::vector<std::string> initials{"", "", "M", "MA", "MB", "AC", "ACD", "MAB", "FB"};
    static const std::vector<std::string> emails{"", "", "", "m.rossi@polimi.it", "maria@uniroma.it",
                                                 "M.Rossi@polimi.it "};
    oeuvre::AuthorMention m;
    m.position = position;
    m.last_name = pick(lasts);
    m.first_name = pick(firsts);
    m.initials = pick(initials);
    if (m.first_name.empty() && m.initials.empty()) m.initials = "M";
    m.email = pick(emails);
    for (std::size_t k = 0; k < n_affiliations; ++k)
      if (coin(0.4)) m.affiliation_idx.push_back(static_cast<int>(k));
    return m;
  }

  oeuvre::Affiliation affiliation() {
    static const std::vector<std::string> orgs{"Politecnico di Milano", "Universita di Roma", "", "CNRS"};
    static const std::vector<std::string> depts{"Dip. Aerospaziale", "Fisica", ""};
    static const std::vector<std::string> cities{"Milano", "Roma", "Paris", ""};
    static const std::vector<std::string> countries{"Italy", "Italy", "France", ""};
    return {pick(orgs), pick(depts), pick(cities), pick(countries)};
  }

  std::vector<oeuvre::Publication> publications(const RandomCorpusOptions& opts = {}) {
    static const std::vector<std::string> sources{"Acta Astronautica", "J. Guid. Control Dyn.", "Phys Rev B",
                                                  "ACTA ASTRONAUTICA", ""};
    static const std::vector<std::string> categories{"Engineering, Aerospace", "Physics", "Mathematics",
                                                     "Astronomy"};
    static const std::vector<std::string> grants{"PRIN-2012", "ERC-123", "FIRB 7", "prin 2012"};
    static const std::vector<std::string> coauthors{"Bianchi", "Verdi", "Neri", "Gialli", "Blu", "Rosa"};
    static const std::vector<std::string> text_refs{"smith 2001 nature", "Smith 2001, Nature", "doe 1999 science",
                                                    "lee 2005 cell", "--"};

    std::vector<oeuvre::Publication> pubs(opts.publications);
    for (std::size_t i = 0; i < pubs.size(); ++i) pubs[i].pub_id = "R" + std::to_string(i);
    for (std::size_t i = 0; i < pubs.size(); ++i) {
      auto& p = pubs[i];
      p.year = between(2005, 2018);
      p.title = "Paper " + std::to_string(i);
      p.source_title = pick(sources);
      for (int k = between(0, 2); k > 0; --k) p.subject_categories.push_back(pick(categories));
      for (int k = between(0, 1); k > 0; --k) p.grants.push_back(pick(grants));

      std::size_t n_aff = static_cast<std::size_t>(between(0, 3));
      for (std::size_t k = 0; k < n_aff; ++k) p.affiliations.push_back(affiliation());
      if (coin(opts.hyper_institute_rate))
        for (int k = 0, n = between(20, 24); k < n; ++k)
          p.affiliations.push_back({"Institute " + std::to_string(k), "", "City " + std::to_string(k), "Italy"});

      int pos = 1;
      for (int k = between(1, 3); k > 0; --k) p.authors.push_back(mention(pos++, p.affiliations.size()));
      for (int k = between(0, 3); k > 0; --k) {
        oeuvre::AuthorMention c;
        c.position = pos++;
        c.last_name = pick(coauthors);
        c.initials = coin(0.5) ? "G" : "L";
        p.authors.push_back(c);
      }
      if (coin(opts.hyper_author_rate))
        for (int k = between(50, 55); pos <= k;) {
          oeuvre::AuthorMention c;
          c.position = pos++;
          c.last_name = std::string("Filler") + char('a' + pos % 26) + char('a' + pos / 26);
          c.initials = "Z";
          p.authors.push_back(c);
        }

      // a few hub publications collect most citations, so coupling and
      // co-citation counts reach their top tiers
      for (int k = between(0, 9); k > 0; --k) {
        oeuvre::Reference r;
        int kind = between(0, 3);
        if (kind == 0) r.pub_id = "R" + std::to_string(between(0, 4));
        else if (kind == 1) r.pub_id = "R" + std::to_string(between(0, static_cast<int>(pubs.size()) - 1));
        else if (kind == 2) r.pub_id = "EXT" + std::to_string(between(1, 3));
        else r.key = pick(text_refs);
        p.references.push_back(r);
      }
    }
    return pubs;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testsupport
