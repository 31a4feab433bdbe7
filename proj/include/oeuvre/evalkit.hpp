#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oeuvre/authorship.hpp"

namespace oeuvre {

struct Metrics {
  std::size_t retrieved = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t relevant = 0;  // retrieved + false_negatives - false_positives
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  bool vacuous = false;  // nothing relevant and nothing retrieved: scored 1/1/1
};

// Builds metrics from counts. With nothing retrieved precision is reported as 0,
// unless nothing is relevant either (vacuous: all three metrics are 1).
Metrics metrics_from_counts(std::size_t retrieved, std::size_t false_positives, std::size_t false_negatives);

// FP = retrieved \ gold, FN = gold \ retrieved.
Metrics compare(const AuthorshipSet& gold, const AuthorshipSet& retrieved);

// Bin label for an F-measure in [0,1]: "[0,10)" ... "[90,100)", or "100" when exactly 1.
std::string histogram_bin(double f_measure);
// All eleven labels in display order.
std::vector<std::string> histogram_bins();

// One decimal, no percent sign: 0.96140 -> "96.1".
std::string percent(double fraction);

struct EvaluationReport {
  Metrics aggregate;
  std::map<std::string, Metrics> per_person;
  std::vector<std::pair<std::string, std::size_t>> histogram;  // in histogram_bins() order
};

// Per-person reports for every listed person (zero-retrieved ones included),
// histogram over their F-measures, and the aggregate over all authorships.
EvaluationReport evaluate(const AuthorshipSet& gold, const AuthorshipSet& retrieved,
                          std::span<const std::string> person_ids);

void write_report_json(std::ostream& out, const EvaluationReport& report);
void write_per_person_csv(std::ostream& out, const EvaluationReport& report);
void write_histogram_csv(std::ostream& out, const EvaluationReport& report);

}  // namespace oeuvre
