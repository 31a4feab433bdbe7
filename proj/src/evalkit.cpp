#include "oeuvre/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "oeuvre/csv.hpp"
#include "oeuvre/error.hpp"

namespace oeuvre {

Metrics metrics_from_counts(std::size_t retrieved, std::size_t false_positives, std::size_t false_negatives) {
  if (false_positives > retrieved) throw DomainError("false positives exceed retrieved authorships");
  Metrics m;
  m.retrieved = retrieved;
  m.false_positives = false_positives;
  m.false_negatives = false_negatives;
  m.relevant = retrieved + false_negatives - false_positives;
  const double hits = static_cast<double>(retrieved - false_positives);
  if (retrieved == 0 && m.relevant == 0) {
    m.precision = m.recall = m.f_measure = 1.0;
    m.vacuous = true;
    return m;
  }
  m.precision = retrieved > 0 ? hits / static_cast<double>(retrieved) : 0.0;
  m.recall = m.relevant > 0 ? hits / static_cast<double>(m.relevant) : 0.0;
  double sum = m.precision + m.recall;
  m.f_measure = sum > 0.0 ? 2.0 * m.precision * m.recall / sum : 0.0;
  return m;
}

Metrics compare(const AuthorshipSet& gold, const AuthorshipSet& retrieved) {
  std::size_t fp = 0;
  for (const auto& a : retrieved)
    if (!gold.count(a)) ++fp;
  std::size_t hits = retrieved.size() - fp;
  return metrics_from_counts(retrieved.size(), fp, gold.size() - hits);
}

std::string histogram_bin(double f) {
  if (f >= 1.0) return "100";
  int lo = std::clamp(static_cast<int>(std::floor(f * 10.0)), 0, 9) * 10;
  return "[" + std::to_string(lo) + "," + std::to_string(lo + 10) + ")";
}

std::vector<std::string> histogram_bins() {
  std::vector<std::string> out;
  for (int lo = 0; lo < 100; lo += 10) out.push_back("[" + std::to_string(lo) + "," + std::to_string(lo + 10) + ")");
  out.push_back("100");
  return out;
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", fraction * 100.0);
  return buf;
}

EvaluationReport evaluate(const AuthorshipSet& gold, const AuthorshipSet& retrieved,
                          std::span<const std::string> person_ids) {
  EvaluationReport r;
  r.aggregate = compare(gold, retrieved);

  std::map<std::string, std::pair<AuthorshipSet, AuthorshipSet>> split;
  for (const auto& p : person_ids) split[p];
  for (const auto& a : gold)
    if (auto it = split.find(a.person_id); it != split.end()) it->second.first.insert(a);
  for (const auto& a : retrieved)
    if (auto it = split.find(a.person_id); it != split.end()) it->second.second.insert(a);

  std::map<std::string, std::size_t> counts;
  for (const auto& [person, sets] : split) {
    Metrics m = compare(sets.first, sets.second);
    ++counts[histogram_bin(m.f_measure)];
    r.per_person.emplace(person, m);
  }
  for (const auto& bin : histogram_bins()) r.histogram.emplace_back(bin, counts[bin]);
  return r;
}

namespace {

nlohmann::ordered_json to_json(const Metrics& m) {
  nlohmann::ordered_json j;
  j["retrieved"] = m.retrieved;
  j["false_positives"] = m.false_positives;
  j["false_negatives"] = m.false_negatives;
  j["relevant"] = m.relevant;
  j["precision"] = percent(m.precision);
  j["recall"] = percent(m.recall);
  j["f_measure"] = percent(m.f_measure);
  if (m.vacuous) j["vacuous"] = true;
  return j;
}

}  // namespace

void write_report_json(std::ostream& out, const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["aggregate"] = to_json(report.aggregate);
  nlohmann::ordered_json people = nlohmann::ordered_json::object();
  for (const auto& [person, m] : report.per_person) people[person] = to_json(m);
  j["per_person"] = std::move(people);
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [bin, n] : report.histogram) hist[bin] = n;
  j["histogram"] = std::move(hist);
  out << j.dump(2) << '\n';
}

void write_per_person_csv(std::ostream& out, const EvaluationReport& report) {
  csv::write_row(out, {"person_id", "retrieved", "false_positives", "false_negatives", "precision", "recall",
                       "f_measure", "vacuous"});
  for (const auto& [person, m] : report.per_person)
    csv::write_row(out, {person, std::to_string(m.retrieved), std::to_string(m.false_positives),
                         std::to_string(m.false_negatives), percent(m.precision), percent(m.recall),
                         percent(m.f_measure), m.vacuous ? "1" : "0"});
}

void write_histogram_csv(std::ostream& out, const EvaluationReport& report) {
  csv::write_row(out, {"bin", "count"});
  for (const auto& [bin, n] : report.histogram) csv::write_row(out, {bin, std::to_string(n)});
}

}  // namespace oeuvre
