#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "oeuvre/corpus.hpp"
#include "oeuvre/decisions.hpp"
#include "oeuvre/portfolio.hpp"

namespace httplib {
class Server;
}

namespace oeuvre {

struct ApiResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

// Scenario 3 adjudication backend: read-only over clusters, append-only over
// decisions. Every handler is safe to call from concurrent request threads.
class ReviewService {
 public:
  ReviewService(const Corpus& corpus, const ClusterTable& clusters, std::vector<RosterEntry> roster,
                CandidateMap candidates, DecisionLog& log, std::size_t sample_titles = 5);

  ApiResponse researchers() const;                               // GET /api/researchers
  ApiResponse candidates(const std::string& person_id) const;    // GET /api/researchers/{id}/candidates
  ApiResponse submit(const std::string& body);                    // POST /api/decisions
  ApiResponse progress() const;                                  // GET /api/progress

 private:
  const Corpus& corpus_;
  const ClusterTable& clusters_;
  std::vector<RosterEntry> roster_;
  CandidateMap candidates_;
  DecisionLog& log_;
  std::size_t sample_titles_;
  std::map<std::uint64_t, std::set<std::string>> claimed_by_;
};

// Registers the API routes. When `token` is non-empty, POST requests must carry
// "Authorization: Bearer <token>". `static_dir`, when non-empty, is mounted at "/".
void mount_review_api(httplib::Server& server, ReviewService& service, const std::string& token,
                      const std::string& static_dir);

}  // namespace oeuvre
