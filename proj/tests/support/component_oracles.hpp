#pragma once

// Brute-force references for the graph steps: BFS components over an
// adjacency matrix and email merging via a boolean transitive closure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "oeuvre/clustering.hpp"
#include "oeuvre/corpus.hpp"

namespace testsupport {

using Partition = std::set<std::set<std::size_t>>;

inline Partition bfs_components(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  std::vector<bool> seen(n, false);
  Partition out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::set<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      comp.insert(v);
      for (std::size_t w = 0; w < n; ++w)
        if (adj[v][w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    out.insert(comp);
  }
  return out;
}

inline Partition as_partition(const std::vector<std::vector<std::uint32_t>>& comps) {
  Partition out;
  for (const auto& c : comps) out.insert(std::set<std::size_t>(c.begin(), c.end()));
  return out;
}

// Groups of PAC ids after merging candidates that share a non-empty email.
inline std::set<std::set<oeuvre::PacId>> email_closure(const oeuvre::Corpus& corpus,
                                                       const std::vector<oeuvre::Candidate>& cands) {
  std::size_t n = cands.size();
  std::vector<std::set<std::string>> emails(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto p : cands[i])
      if (!corpus.pac(p).email.empty()) emails[i].insert(corpus.pac(p).email);

  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : emails[i])
        if (emails[j].count(e)) reach[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  std::set<std::set<oeuvre::PacId>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<oeuvre::PacId> group;
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j])
        for (auto p : cands[j]) group.insert(corpus.pac_id(p));
    out.insert(group);
  }
  return out;
}

inline std::set<std::set<oeuvre::PacId>> as_groups(const std::vector<oeuvre::Cluster>& clusters) {
  std::set<std::set<oeuvre::PacId>> out;
  for (const auto& c : clusters) out.insert(std::set<oeuvre::PacId>(c.pacs.begin(), c.pacs.end()));
  return out;
}

}  // namespace testsupport
