#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oeuvre/error.hpp"
#include "oeuvre/portfolio.hpp"
#include "oeuvre/synth.hpp"

#include "../support/fixtures.hpp"

using namespace oeuvre;
using testsupport::author;
using testsupport::pub;

namespace {

RosterEntry person(std::string id, std::string last, std::string first, std::string city = "Roma",
                   std::string country = "Italy") {
  RosterEntry e;
  e.person_id = std::move(id);
  e.last_name = std::move(last);
  e.first_name = std::move(first);
  e.affiliation_city = std::move(city);
  e.country = std::move(country);
  return e;
}

Cluster cluster(std::uint64_t id, std::string full_name, int first_year = 2010, int last_year = 2012) {
  Cluster c;
  c.cluster_id = id;
  c.meta.full_name = std::move(full_name);
  c.meta.first_year = first_year;
  c.meta.last_year = last_year;
  return c;
}

std::vector<std::string> texts(const std::vector<NamePattern>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.text());
  return out;
}

Status only(const std::vector<Assignment>& a) {
  REQUIRE(a.size() == 1);
  return a[0].status;
}

}  // namespace

TEST_CASE("name variants") {
  CHECK(texts(name_variants(person("1", "BERNELLI ZAZZERA", "Franco"))) ==
        std::vector<std::string>{"bernelli, f%", "zazzera, f%", "bernellizazzera, f%", "bernelli zazzera, f%",
                                 "bernelli-zazzera, f%"});
  CHECK(texts(name_variants(person("2", "ROSSI", "Fausto"))) == std::vector<std::string>{"rossi, f%"});
  CHECK(texts(name_variants(person("3", "De La Cruz", "Ana"))) ==
        std::vector<std::string>{"de, a%", "la, a%", "cruz, a%", "delacruz, a%", "de la cruz, a%", "de-la-cruz, a%"});
  CHECK(name_variants(person("4", "Bernelli-Zazzera", "Franco")).size() == 5);
}

TEST_CASE("pattern matching respects the surname boundary") {
  NamePattern p{"rossi", "f"};
  CHECK(p.matches("rossi, f"));
  CHECK(p.matches("rossi, fa"));
  CHECK_FALSE(p.matches("rossini, f"));
  CHECK_FALSE(p.matches("rossi, m"));
  CHECK_FALSE(p.matches("de rossi, f"));
  CHECK_FALSE(p.matches(""));
}

TEST_CASE("retrieval") {
  ClusterTable table({cluster(1, "rossi, f"), cluster(2, "rossini, f"), cluster(3, "rossi, fa"), cluster(4, "rossi, m"),
                      [] {
                        auto c = cluster(5, "russo, f");
                        c.meta.alternative_full_name = "rossi, fb";
                        return c;
                      }()});
  CHECK(retrieve_clusters(person("1", "Rossi", "Fausto"), table) == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(retrieve_clusters(person("2", "Verdi", "Fausto"), table).empty());
  CHECK_THROWS_AS(ClusterTable({cluster(1, "a, b"), cluster(1, "c, d")}), InputError);
  CHECK_THROWS_AS(table.at(99), InputError);
  CHECK(table.find(99) == nullptr);
}

TEST_CASE("window filter") {
  ClusterTable table({cluster(1, "x, y", 2003, 2003), cluster(2, "x, y", 2005, 2010), cluster(3, "x, y", 2016, 2019),
                      cluster(4, "x, y", 2017, 2018), cluster(5, "x, y", 1989, 2020)});
  std::vector<std::uint64_t> ids{1, 2, 3, 4, 5};
  CHECK(window_filter(table, ids, {2010, 2016}) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS_AS(window_filter(table, ids, {2016, 2010}), DomainError);
  CHECK_THROWS_AS(YearWindow::make(2016, 2010), DomainError);
  CHECK(YearWindow::parse("2010:2016").str() == "2010:2016");
  CHECK_THROWS_AS(YearWindow::parse("2010-2016"), DomainError);
  CHECK_THROWS_AS(YearWindow::parse("abc:2016"), DomainError);
}

TEST_CASE("first-name compatibility") {
  CHECK(first_names_compatible("Franco", "franco"));
  CHECK(first_names_compatible("f", "Franco"));
  CHECK(first_names_compatible("Franco", "F."));
  CHECK(first_names_compatible("franco", "franco bernelli"));
  CHECK_FALSE(first_names_compatible("Franco", "Federico"));
  CHECK_FALSE(first_names_compatible("g", "Franco"));
  CHECK_FALSE(first_names_compatible("", "Franco"));
  CHECK_FALSE(first_names_compatible("bernelli", "franco bernelli"));
}

TEST_CASE("scenario 1") {
  auto roster = person("p", "Rossi", "Franco", "Roma", "Italy");
  auto run = [&](Cluster c) {
    ClusterTable t({c});
    std::vector<std::uint64_t> ids{c.cluster_id};
    return scenario1_filter(t, ids, roster);
  };
  auto c = cluster(1, "rossi, f");
  SUBCASE("foreign countries") {
    c.meta.address_country = "france";
    c.meta.alternative_address_country = "germany";
    auto a = run(c);
    CHECK(only(a) == Status::dropped);
    CHECK(a[0].reason == "country");
    CHECK(a[0].scenario == Scenario::s1);
  }
  SUBCASE("no country information") { CHECK(only(run(c)) == Status::kept); }
  SUBCASE("second country matches") {
    c.meta.address_country = "france";
    c.meta.alternative_address_country = "italy";
    CHECK(only(run(c)) == Status::kept);
  }
  SUBCASE("one known foreign country") {
    c.meta.address_country = "france";
    CHECK(only(run(c)) == Status::dropped);
  }
  SUBCASE("incompatible first name") {
    c.meta.first_name = "federico";
    auto a = run(c);
    CHECK(only(a) == Status::dropped);
    CHECK(a[0].reason == "first_name");
  }
  SUBCASE("compatible alternative first name") {
    c.meta.first_name = "federico";
    c.meta.alternative_first_name = "franco";
    CHECK(only(run(c)) == Status::kept);
  }
  SUBCASE("city is not checked") {
    c.meta.address_city = "milano";
    CHECK(only(run(c)) == Status::kept);
  }
}

TEST_CASE("scenario 2") {
  auto roster = person("p", "Rossi", "Franco", "Roma", "Italy");
  roster.career = {{2008, "Torino"}};
  auto run = [&](Cluster c, FilterOptions opts = {}) {
    ClusterTable t({c});
    std::vector<std::uint64_t> ids{c.cluster_id};
    return scenario2_filter(t, ids, roster, opts);
  };
  auto c = cluster(1, "rossi, f");
  SUBCASE("other city") {
    c.meta.address_city = "milano";
    auto a = run(c);
    CHECK(only(a) == Status::dropped);
    CHECK(a[0].reason == "city");
    CHECK(a[0].scenario == Scenario::s2);
  }
  SUBCASE("no city information") { CHECK(only(run(c)) == Status::kept); }
  SUBCASE("same city") {
    c.meta.address_city = "roma";
    CHECK(only(run(c)) == Status::kept);
  }
  SUBCASE("scenario 1 still applies") {
    c.meta.address_city = "roma";
    c.meta.address_country = "france";
    CHECK(run(c)[0].reason == "country");
  }
  SUBCASE("synonyms") {
    c.meta.address_city = "rome";
    CHECK(only(run(c)) == Status::dropped);
    std::istringstream file("# alias,canonical\nrome,roma\nRom,Roma\n");
    auto syn = SynonymMap::read(file);
    CHECK(syn.canonical("ROME") == "roma");
    CHECK(syn.canonical("Napoli") == "napoli");
    CHECK(only(run(c, {&syn, false})) == Status::kept);
  }
  SUBCASE("career cities are opt-in") {
    c.meta.address_city = "torino";
    CHECK(only(run(c)) == Status::dropped);
    CHECK(only(run(c, {nullptr, true})) == Status::kept);
  }
}

TEST_CASE("filters are monotone and lenient to empty fields") {
  auto roster = person("p", "Rossi", "Franco", "Roma", "Italy");
  const std::vector<std::string> countries{"", "italy", "france"};
  const std::vector<std::string> cities{"", "roma", "milano"};
  const std::vector<std::string> firsts{"", "franco", "federico", "f"};
  std::vector<Cluster> all;
  std::uint64_t id = 0;
  for (const auto& c1 : countries)
    for (const auto& c2 : countries)
      for (const auto& t1 : cities)
        for (const auto& t2 : cities)
          for (const auto& f : firsts) {
            auto c = cluster(++id, "rossi, f");
            c.meta.address_country = c1;
            c.meta.alternative_address_country = c2;
            c.meta.address_city = t1;
            c.meta.alternative_address_city = t2;
            c.meta.first_name = f;
            all.push_back(c);
          }
  ClusterTable table(all);
  std::vector<std::uint64_t> ids;
  for (const auto& c : all) ids.push_back(c.cluster_id);
  auto s1 = scenario1_filter(table, ids, roster);
  auto s2 = scenario2_filter(table, ids, roster);
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (s2[i].status == Status::kept) CHECK(s1[i].status == Status::kept);

  for (std::size_t i = 0; i < all.size(); ++i) {
    if (s2[i].status != Status::kept) continue;
    auto blank = all[i];
    blank.meta.address_city = blank.meta.alternative_address_city = "";
    blank.meta.address_country = blank.meta.alternative_address_country = "";
    ClusterTable one({blank});
    std::vector<std::uint64_t> single{blank.cluster_id};
    CHECK(only(scenario2_filter(one, single, roster)) == Status::kept);
  }
}

TEST_CASE("review decisions") {
  CandidateMap cands{{"p1", {1, 2, 3}}, {"p2", {3}}, {"p3", {}}};
  auto d = [](std::string p, std::uint64_t c, Verdict v) { return ReviewDecision{p, c, v, "rev", "2017-01-01T00:00:00Z"}; };

  SUBCASE("no decisions: all pending") {
    auto a = apply_decisions(cands, {});
    CHECK(a.size() == 4);
    CHECK(std::all_of(a.begin(), a.end(), [](const Assignment& x) { return x.status == Status::pending; }));
    CHECK_THROWS_AS(require_final(a), PendingDecisionsError);
  }
  SUBCASE("all rejected") {
    std::vector<ReviewDecision> ds{d("p1", 1, Verdict::reject), d("p1", 2, Verdict::reject), d("p1", 3, Verdict::reject),
                                   d("p2", 3, Verdict::reject)};
    auto a = apply_decisions(cands, ds);
    CHECK_NOTHROW(require_final(a));
    CHECK(std::all_of(a.begin(), a.end(), [](const Assignment& x) { return x.status == Status::dropped && x.reason == "rejected"; }));
  }
  SUBCASE("mixed") {
    std::vector<ReviewDecision> ds{d("p1", 2, Verdict::accept), d("p2", 3, Verdict::accept)};
    auto a = apply_decisions(cands, ds);
    CHECK(a[0] == Assignment{"p1", 1, Scenario::s3, Status::pending, ""});
    CHECK(a[1] == Assignment{"p1", 2, Scenario::s3, Status::kept, ""});
    CHECK(a[3] == Assignment{"p2", 3, Scenario::s3, Status::kept, ""});
  }
  SUBCASE("errors") {
    std::vector<ReviewDecision> unknown{d("p1", 9, Verdict::accept)};
    CHECK_THROWS_AS(apply_decisions(cands, unknown), InputError);
    std::vector<ReviewDecision> stranger{d("zz", 1, Verdict::accept)};
    CHECK_THROWS_AS(apply_decisions(cands, stranger), InputError);
    std::vector<ReviewDecision> twice{d("p1", 1, Verdict::accept), d("p1", 1, Verdict::reject)};
    CHECK_THROWS_AS(apply_decisions(cands, twice), InputError);
  }
}

TEST_CASE("scenario names") {
  CHECK(parse_scenario("2") == Scenario::s2);
  CHECK(parse_scenario("S3") == Scenario::s3);
  CHECK(parse_scenario("baseline1") == Scenario::baseline1);
  CHECK(to_string(Scenario::s1) == "S1");
  CHECK_THROWS_AS(parse_scenario("4"), DomainError);
  CHECK(parse_baseline_mode("fullname") == BaselineMode::fullname);
  CHECK_THROWS_AS(parse_baseline_mode("x"), DomainError);
}

TEST_CASE("baselines") {
  Corpus c = Corpus::from_publications({
      pub("A", 2011, {author(1, "Rossi", "Fausto")}),
      pub("B", 2012, {author(1, "Rossi", "Federica")}),
      pub("C", 2013, {author(1, "Rossi", "", "F")}),
      pub("D", 2008, {author(1, "Rossi", "Fausto")}),
      pub("E", 2012, {author(1, "Verdi", "Luca")}),
  });
  std::vector<RosterEntry> roster{person("fa", "ROSSI", "Fausto"), person("fe", "ROSSI", "Federica"),
                                  person("lv", "VERDI", "Luca")};
  YearWindow w{2010, 2016};
  auto b1 = baseline_assign(BaselineMode::initials, roster, c, w);
  auto b2 = baseline_assign(BaselineMode::fullname, roster, c, w);
  CHECK(b1 == AuthorshipSet{{"fa", "A"}, {"fa", "B"}, {"fa", "C"}, {"fe", "A"}, {"fe", "B"}, {"fe", "C"}, {"lv", "E"}});
  CHECK(b2 == AuthorshipSet{{"fa", "A"}, {"fe", "B"}, {"lv", "E"}});
  CHECK(std::includes(b1.begin(), b1.end(), b2.begin(), b2.end()));

  std::vector<RosterEntry> unique{person("lv", "VERDI", "Luca")};
  CHECK(baseline_assign(BaselineMode::initials, unique, c, w) == baseline_assign(BaselineMode::fullname, unique, c, w));
}

TEST_CASE("portfolios") {
  Corpus c = Corpus::from_publications({
      pub("A", 2009, {author(1, "Mancini", "", "M")}),
      pub("B", 2011, {author(1, "Mancini", "", "M")}),
      pub("C", 2016, {author(1, "Mancini", "", "M")}),
      pub("D", 2017, {author(1, "Mancini", "", "M")}),
  });
  auto cl = [](std::uint64_t id, std::vector<PacId> pacs) {
    Cluster k = cluster(id, "mancini, m");
    k.pacs = std::move(pacs);
    return k;
  };
  ClusterTable table({cl(1, {{"A", 1}, {"B", 1}, {"D", 1}}), cl(2, {{"B", 1}, {"C", 1}})});
  YearWindow w{2010, 2016};

  std::vector<std::uint64_t> both{1, 2};
  CHECK(portfolio("p", both, table, c, w) == AuthorshipSet{{"p", "B"}, {"p", "C"}});

  // two homonyms who both accepted cluster 1
  std::vector<Assignment> as{{"m1", 1, Scenario::s3, Status::kept, ""}, {"m2", 1, Scenario::s3, Status::kept, ""},
                             {"m2", 2, Scenario::s3, Status::dropped, "rejected"}};
  CHECK(portfolio_of(as, table, c, w) == AuthorshipSet{{"m1", "B"}, {"m2", "B"}});

  ClusterTable broken({cl(3, {{"Z", 1}})});
  std::vector<std::uint64_t> three{3};
  CHECK_THROWS_AS(portfolio("p", three, broken, c, w), InputError);
}

TEST_CASE("roster CSV") {
  std::istringstream in(
      "person_id,last_name,first_name,city,country,field_code,career\n"
      "P1,BERNELLI ZAZZERA,Franco,Milano,Italy,ING-IND/03,2005:Torino;2010:Milano\n"
      "P2,\"ROSSI, JR\",Maria,Roma,Italy,,\n");
  auto roster = read_roster_csv(in);
  REQUIRE(roster.size() == 2);
  CHECK(roster[0].career.size() == 2);
  CHECK(roster[0].career[0].year == 2005);
  CHECK(roster[0].career[0].city == "Torino");
  CHECK(roster[1].last_name == "ROSSI, JR");

  std::ostringstream out;
  write_roster_csv(out, roster);
  std::istringstream again(out.str());
  auto back = read_roster_csv(again);
  CHECK(back[0].career.size() == 2);
  CHECK(back[1].last_name == roster[1].last_name);

  std::istringstream missing("person_id,last_name,first_name\nP1,A,B\n");
  CHECK_THROWS_AS(read_roster_csv(missing), InputError);
  std::istringstream dup("person_id,last_name,first_name,city,country\nP1,A,B,C,D\nP1,E,F,G,H\n");
  CHECK_THROWS_AS(read_roster_csv(dup), InputError);
  std::istringstream career("person_id,last_name,first_name,city,country,career\nP1,A,B,C,D,Torino\n");
  CHECK_THROWS_AS(read_roster_csv(career), InputError);
  CHECK_THROWS_AS(read_roster_file("/nonexistent/roster.csv"), InputError);
}

TEST_CASE("candidate records") {
  ClusterTable table({cluster(7, "rossi, f", 2003, 2003), cluster(9, "rossi, fa", 2011, 2014)});
  std::vector<CandidateRecord> rows{{"p1", 7, false}, {"p1", 9, true}, {"p2", 9, true}};
  std::stringstream io;
  write_candidates_jsonl(io, rows, table);
  auto back = read_candidates_jsonl(io);
  REQUIRE(back.size() == 3);
  CHECK(back[1].cluster_id == 9);
  CHECK(back[1].in_window);

  std::vector<RosterEntry> roster{person("p1", "Rossi", "F"), person("p2", "Rossi", "F"), person("p3", "X", "Y")};
  auto map = windowed_candidates(back, roster);
  CHECK(map == CandidateMap{{"p1", {9}}, {"p2", {9}}, {"p3", {}}});
}

TEST_CASE("Bernelli fixture retrieval") {
  Corpus c = Corpus::from_publications(synth::bernelli_fixture());
  auto idx = CitationIndex::build(c);
  ScoringContext ctx(c, idx);
  ClusterTable table(cluster_corpus(ctx, {}));
  auto entry = synth::bernelli_roster_entry();
  auto found = retrieve_clusters(entry, table);
  CHECK(found.size() == 8);
  auto windowed = window_filter(table, found, {2010, 2016});
  REQUIRE(windowed.size() == 2);
  std::vector<std::size_t> sizes;
  for (auto id : windowed) sizes.push_back(table.at(id).meta.n_pubs);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 35});

  // accept both windowed clusters: only their in-window publications remain
  AuthorshipSet expected;
  for (auto id : windowed)
    for (const auto& pac : table.at(id).pacs)
      if (YearWindow{2010, 2016}.contains(c.publication(*c.find(pac.pub_id)).year))
        expected.insert({entry.person_id, pac.pub_id});
  auto p = portfolio(entry.person_id, windowed, table, c, {2010, 2016});
  CHECK(p == expected);
  CHECK(p.size() < 37);
}
