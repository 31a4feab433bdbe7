#pragma once

#include <string>
#include <vector>

#include "oeuvre/corpus.hpp"

namespace testsupport {

inline oeuvre::AuthorMention author(int pos, std::string last, std::string first = "", std::string initials = "",
                                    std::string email = "") {
  oeuvre::AuthorMention m;
  m.position = pos;
  m.last_name = std::move(last);
  m.first_name = std::move(first);
  m.initials = std::move(initials);
  m.email = std::move(email);
  return m;
}

inline oeuvre::Publication pub(std::string id, int year, std::vector<oeuvre::AuthorMention> authors) {
  oeuvre::Publication p;
  p.pub_id = std::move(id);
  p.year = year;
  p.authors = std::move(authors);
  return p;
}

// Six "Grosso, A" mentions whose only evidence is chosen so that the real
// rules give 13 on (1,2), (2,3), (3,4), (5,6), 3 on (3,5), and 0 elsewhere:
//   (1,2) two shared co-authors 7 + same journal 6
//   (2,3) shared grant 10 + shared category 3
//   (3,4) two shared co-authors 7 + same journal 6
//   (5,6) two shared co-authors 7 + same journal 6
//   (3,5) shared category 3
inline std::vector<oeuvre::Publication> six_mention_publications() {
  auto g = [] { return author(1, "Grosso", "", "A"); };
  auto co = [](int pos, const char* last) { return author(pos, last, "", "K"); };
  std::vector<oeuvre::Publication> out;

  auto p1 = pub("F1", 2010, {g(), co(2, "Xa"), co(3, "Xb")});
  p1.source_title = "Journal A";
  p1.subject_categories = {"Cat 1"};

  auto p2 = pub("F2", 2011, {g(), co(2, "Xa"), co(3, "Xb")});
  p2.source_title = "Journal A";
  p2.subject_categories = {"Cat 2"};
  p2.grants = {"G-1"};

  auto p3 = pub("F3", 2012, {g(), co(2, "Za"), co(3, "Zb")});
  p3.source_title = "Journal B";
  p3.subject_categories = {"Cat 2", "Cat 4"};
  p3.grants = {"G-1"};

  auto p4 = pub("F4", 2013, {g(), co(2, "Za"), co(3, "Zb")});
  p4.source_title = "Journal B";
  p4.subject_categories = {"Cat 3"};

  auto p5 = pub("F5", 2014, {g(), co(2, "Wa"), co(3, "Wb")});
  p5.source_title = "Journal C";
  p5.subject_categories = {"Cat 4"};

  auto p6 = pub("F6", 2015, {g(), co(2, "Wa"), co(3, "Wb")});
  p6.source_title = "Journal C";
  p6.subject_categories = {"Cat 5"};

  for (auto* p : {&p1, &p2, &p3, &p4, &p5, &p6}) out.push_back(std::move(*p));
  return out;
}

}  // namespace testsupport
