#include "oeuvre/decisions.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <set>

#include <json.hpp>

#include "oeuvre/error.hpp"

namespace oeuvre {

std::string_view to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

Verdict parse_verdict(std::string_view s) {
  if (s == "accept") return Verdict::accept;
  if (s == "reject") return Verdict::reject;
  throw InputError("verdict must be 'accept' or 'reject', got '" + std::string(s) + "'");
}

std::string to_jsonl(const ReviewDecision& d) {
  nlohmann::ordered_json j;
  j["person_id"] = d.person_id;
  j["cluster_id"] = d.cluster_id;
  j["verdict"] = to_string(d.verdict);
  j["reviewer"] = d.reviewer;
  j["ts"] = d.ts;
  return j.dump();
}

std::vector<ReviewDecision> read_decisions_jsonl(std::istream& in) {
  std::vector<ReviewDecision> out;
  std::set<std::pair<std::string, std::uint64_t>> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    ReviewDecision d;
    try {
      auto j = nlohmann::json::parse(text);
      d.person_id = j.at("person_id").get<std::string>();
      d.cluster_id = j.at("cluster_id").get<std::uint64_t>();
      d.verdict = parse_verdict(j.at("verdict").get<std::string>());
      d.reviewer = j.value("reviewer", "");
      if (auto ts = j.find("ts"); ts != j.end()) d.ts = ts->is_string() ? ts->get<std::string>() : ts->dump();
    } catch (const nlohmann::json::exception& e) {
      throw InputError("decisions line " + std::to_string(line) + ": " + e.what());
    }
    if (!seen.emplace(d.person_id, d.cluster_id).second)
      throw InputError("decisions line " + std::to_string(line) + ": second decision for person '" + d.person_id +
                       "' cluster " + std::to_string(d.cluster_id));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<ReviewDecision> read_decisions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open decisions file '" + path + "'");
  return read_decisions_jsonl(in);
}

DecisionLog::DecisionLog(std::string path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  for (auto& d : read_decisions_file(path_)) {
    by_pair_.emplace(std::make_pair(d.person_id, d.cluster_id), ordered_.size());
    ordered_.push_back(std::move(d));
  }
}

DecisionLog::Append DecisionLog::append(const ReviewDecision& d) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(d.person_id, d.cluster_id);
  if (by_pair_.count(key)) return Append::duplicate;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw InputError("cannot append to decisions file '" + path_ + "'");
    out << to_jsonl(d) << '\n';
    out.flush();
    if (!out) throw InputError("write to decisions file '" + path_ + "' failed");
  }
  by_pair_.emplace(std::move(key), ordered_.size());
  ordered_.push_back(d);
  return Append::accepted;
}

std::optional<ReviewDecision> DecisionLog::find(const std::string& person_id, std::uint64_t cluster_id) const {
  std::lock_guard lock(mu_);
  auto it = by_pair_.find({person_id, cluster_id});
  if (it == by_pair_.end()) return std::nullopt;
  return ordered_[it->second];
}

std::vector<ReviewDecision> DecisionLog::all() const {
  std::lock_guard lock(mu_);
  return ordered_;
}

}  // namespace oeuvre
