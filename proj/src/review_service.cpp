#include "oeuvre/review_service.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include <httplib.h>

#include "oeuvre/error.hpp"

namespace oeuvre {

namespace {

using ojson = nlohmann::ordered_json;

ApiResponse error(int status, const std::string& message) { return {status, ojson{{"error", message}}}; }

ojson meta_json(const Cluster& c) {
  const auto& m = c.meta;
  return ojson{{"cluster_id", c.cluster_id},
               {"n_pubs", m.n_pubs},
               {"first_year", m.first_year},
               {"last_year", m.last_year},
               {"full_name", m.full_name},
               {"first_name", m.first_name},
               {"email", m.email},
               {"address_organization", m.address_organization},
               {"address_city", m.address_city},
               {"address_country", m.address_country},
               {"alternative_full_name", m.alternative_full_name},
               {"alternative_first_name", m.alternative_first_name},
               {"alternative_email", m.alternative_email},
               {"alternative_address_organization", m.alternative_address_organization},
               {"alternative_address_city", m.alternative_address_city},
               {"alternative_address_country", m.alternative_address_country}};
}

ojson decision_json(const ReviewDecision& d) {
  return ojson{{"person_id", d.person_id},
               {"cluster_id", d.cluster_id},
               {"verdict", to_string(d.verdict)},
               {"reviewer", d.reviewer},
               {"ts", d.ts}};
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

ReviewService::ReviewService(const Corpus& corpus, const ClusterTable& clusters, std::vector<RosterEntry> roster,
                             CandidateMap candidates, DecisionLog& log, std::size_t sample_titles)
    : corpus_(corpus),
      clusters_(clusters),
      roster_(std::move(roster)),
      candidates_(std::move(candidates)),
      log_(log),
      sample_titles_(sample_titles) {
  for (const auto& e : roster_) candidates_[e.person_id];
  for (const auto& [person, ids] : candidates_)
    for (auto id : ids) claimed_by_[id].insert(person);
}

ApiResponse ReviewService::researchers() const {
  ojson list = ojson::array();
  for (const auto& e : roster_) {
    const auto& ids = candidates_.at(e.person_id);
    std::size_t accepted = 0, rejected = 0, conflicts = 0;
    for (auto id : ids) {
      if (auto d = log_.find(e.person_id, id)) (d->verdict == Verdict::accept ? accepted : rejected)++;
      if (claimed_by_.at(id).size() > 1) ++conflicts;
    }
    ojson career = ojson::array();
    for (const auto& s : e.career) career.push_back({{"year", s.year}, {"city", s.city}});
    list.push_back({{"person_id", e.person_id},
                    {"last_name", e.last_name},
                    {"first_name", e.first_name},
                    {"city", e.affiliation_city},
                    {"country", e.country},
                    {"field_code", e.field_code},
                    {"career", std::move(career)},
                    {"candidates", ids.size()},
                    {"pending", ids.size() - accepted - rejected},
                    {"accepted", accepted},
                    {"rejected", rejected},
                    {"conflicts", conflicts}});
  }
  return {200, std::move(list)};
}

ApiResponse ReviewService::candidates(const std::string& person_id) const {
  auto it = candidates_.find(person_id);
  if (it == candidates_.end()) return error(404, "unknown researcher '" + person_id + "'");
  ojson list = ojson::array();
  for (auto id : it->second) {
    const Cluster& c = clusters_.at(id);
    std::vector<const Publication*> pubs;
    for (const auto& pub_id : c.pub_ids())
      if (auto p = corpus_.find(pub_id)) pubs.push_back(&corpus_.publication(*p));
    std::stable_sort(pubs.begin(), pubs.end(), [](auto* a, auto* b) { return a->year > b->year; });
    ojson sample = ojson::array();
    for (std::size_t k = 0; k < std::min(sample_titles_, pubs.size()); ++k)
      sample.push_back({{"pub_id", pubs[k]->pub_id},
                        {"title", pubs[k]->title},
                        {"year", pubs[k]->year},
                        {"source", pubs[k]->source_title}});
    ojson conflicts = ojson::array();
    for (const auto& other : claimed_by_.at(id))
      if (other != person_id) conflicts.push_back(other);
    auto d = log_.find(person_id, id);
    list.push_back({{"cluster_id", id},
                    {"meta", meta_json(c)},
                    {"publications", std::move(sample)},
                    {"verdict", d ? ojson(to_string(d->verdict)) : ojson(nullptr)},
                    {"conflicts", std::move(conflicts)}});
  }
  return {200, ojson{{"person_id", person_id}, {"candidates", std::move(list)}}};
}

ApiResponse ReviewService::submit(const std::string& body) {
  ReviewDecision d;
  try {
    auto j = nlohmann::json::parse(body);
    d.person_id = j.at("person_id").get<std::string>();
    d.cluster_id = j.at("cluster_id").get<std::uint64_t>();
    d.verdict = parse_verdict(j.at("verdict").get<std::string>());
    d.reviewer = j.value("reviewer", "");
    d.ts = j.value("ts", "");
  } catch (const nlohmann::json::exception& e) {
    return error(400, std::string("malformed decision: ") + e.what());
  } catch (const InputError& e) {
    return error(400, e.what());
  }
  if (d.ts.empty()) d.ts = utc_now();

  auto it = candidates_.find(d.person_id);
  if (it == candidates_.end() || !std::binary_search(it->second.begin(), it->second.end(), d.cluster_id))
    return error(404, "cluster " + std::to_string(d.cluster_id) + " is not a candidate for '" + d.person_id + "'");

  if (log_.append(d) == DecisionLog::Append::duplicate) {
    auto existing = log_.find(d.person_id, d.cluster_id);
    return {409, ojson{{"error", "decision already recorded"}, {"decision", decision_json(*existing)}}};
  }
  return {201, decision_json(d)};
}

ApiResponse ReviewService::progress() const {
  std::size_t total = 0, accepted = 0, rejected = 0, done = 0;
  for (const auto& [person, ids] : candidates_) {
    std::size_t decided = 0;
    for (auto id : ids) {
      ++total;
      if (auto d = log_.find(person, id)) {
        ++decided;
        (d->verdict == Verdict::accept ? accepted : rejected)++;
      }
    }
    if (decided == ids.size()) ++done;
  }
  return {200, ojson{{"total", total},
                     {"decided", accepted + rejected},
                     {"pending", total - accepted - rejected},
                     {"accepted", accepted},
                     {"rejected", rejected},
                     {"researchers", candidates_.size()},
                     {"researchers_done", done}}};
}

void mount_review_api(httplib::Server& server, ReviewService& service, const std::string& token,
                      const std::string& static_dir) {
  server.Get("/api/researchers", [&service](const httplib::Request&, httplib::Response& res) {
    reply(res, service.researchers());
  });
  server.Get(R"(/api/researchers/([^/]+)/candidates)", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.candidates(req.matches[1]));
  });
  server.Get("/api/progress", [&service](const httplib::Request&, httplib::Response& res) {
    reply(res, service.progress());
  });
  server.Post("/api/decisions", [&service, token](const httplib::Request& req, httplib::Response& res) {
    if (!token.empty() && req.get_header_value("Authorization") != "Bearer " + token) {
      reply(res, error(401, "missing or invalid token"));
      return;
    }
    reply(res, service.submit(req.body));
  });
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace oeuvre
