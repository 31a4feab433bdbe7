#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oeuvre {

enum class Verdict { accept, reject };

std::string_view to_string(Verdict v);
// Throws InputError for anything but "accept" / "reject".
Verdict parse_verdict(std::string_view s);

struct ReviewDecision {
  std::string person_id;
  std::uint64_t cluster_id = 0;
  Verdict verdict = Verdict::reject;
  std::string reviewer;
  std::string ts;

  friend bool operator==(const ReviewDecision&, const ReviewDecision&) = default;
};

std::string to_jsonl(const ReviewDecision& d);
// Throws InputError on malformed lines and on a second decision for a pair.
std::vector<ReviewDecision> read_decisions_jsonl(std::istream& in);
std::vector<ReviewDecision> read_decisions_file(const std::string& path);

// Append-only decision store, optionally backed by a JSONL file. The first
// decision for a (person, cluster) pair is final. Safe for concurrent use.
class DecisionLog {
 public:
  enum class Append { accepted, duplicate };

  DecisionLog() = default;
  // Loads `path` when it exists; later appends are written to it.
  explicit DecisionLog(std::string path);

  DecisionLog(const DecisionLog&) = delete;
  DecisionLog& operator=(const DecisionLog&) = delete;

  Append append(const ReviewDecision& d);
  std::optional<ReviewDecision> find(const std::string& person_id, std::uint64_t cluster_id) const;
  std::vector<ReviewDecision> all() const;  // insertion order

 private:
  mutable std::mutex mu_;
  std::string path_;
  std::vector<ReviewDecision> ordered_;
  std::map<std::pair<std::string, std::uint64_t>, std::size_t> by_pair_;
};

}  // namespace oeuvre
