#include "oeuvre/clustering.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "oeuvre/error.hpp"

namespace oeuvre {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

int ThresholdPolicy::threshold(std::size_t block_size) const {
  if (block_size < 2) return threshold_for(block_size);
  return fixed ? *fixed : threshold_for(block_size);
}

std::vector<Edge> build_similarity_graph(std::span<const ScoredPair> scores, int threshold, Boundary boundary) {
  ThresholdPolicy policy{std::nullopt, boundary};
  std::vector<Edge> edges;
  for (const auto& s : scores) {
    if (s.a == s.b || !policy.links(s.total, threshold)) continue;
    edges.push_back({std::min(s.a, s.b), std::max(s.a, s.b)});
  }
  return edges;
}

std::vector<std::vector<std::uint32_t>> connected_components(std::size_t n, std::span<const Edge> edges) {
  DisjointSets sets(n);
  for (const auto& e : edges) sets.unite(e.a, e.b);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::vector<std::string> Cluster::pub_ids() const {
  std::vector<std::string> ids;
  for (const auto& p : pacs) ids.push_back(p.pub_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace {

// Email-merged groups of PAC indices, each sorted by PacId, groups ordered by first member.
std::vector<std::vector<std::size_t>> merge_groups(const Corpus& corpus, std::span<const Candidate> candidates) {
  DisjointSets sets(candidates.size());
  std::unordered_map<std::string, std::size_t> owner;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t p : candidates[c]) {
      const std::string& email = corpus.pac(p).email;
      if (email.empty()) continue;
      auto [it, inserted] = owner.emplace(email, c);
      if (!inserted) sets.unite(it->second, c);
    }
  }

  std::vector<std::size_t> order(corpus.pacs().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return corpus.pac_id(a) < corpus.pac_id(b); });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto& g = by_root[sets.find(c)];
    g.insert(g.end(), candidates[c].begin(), candidates[c].end());
  }
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [root, members] : by_root) {
    if (members.empty()) continue;
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) { return rank[a.front()] < rank[b.front()]; });
  return groups;
}

Cluster make_cluster(const Corpus& corpus, std::uint64_t id, const std::vector<std::size_t>& members) {
  Cluster c;
  c.cluster_id = id;
  c.pacs.reserve(members.size());
  for (std::size_t p : members) c.pacs.push_back(corpus.pac_id(p));
  return c;
}

class Tally {
 public:
  void add(const std::string& v) {
    if (!v.empty()) ++counts_[v];
  }
  // Most and second most frequent values; ties by lexicographic order.
  std::pair<std::string, std::string> top2() const {
    std::vector<std::pair<std::string, std::size_t>> v(counts_.begin(), counts_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return {v.size() > 0 ? v[0].first : std::string{}, v.size() > 1 ? v[1].first : std::string{}};
  }

 private:
  std::map<std::string, std::size_t> counts_;
};

}  // namespace

std::vector<Cluster> merge_by_email(const Corpus& corpus, std::span<const Candidate> candidates) {
  auto groups = merge_groups(corpus, candidates);
  std::vector<Cluster> out;
  out.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) out.push_back(make_cluster(corpus, i + 1, groups[i]));
  return out;
}

ClusterMeta compute_cluster_meta(const Corpus& corpus, std::span<const std::size_t> pacs) {
  ClusterMeta m;
  if (pacs.empty()) return m;
  std::set<std::size_t> pubs;
  Tally full_name, first_name, email, org, city, country;
  m.first_year = std::numeric_limits<int>::max();
  m.last_year = std::numeric_limits<int>::min();
  for (std::size_t p : pacs) {
    const Pac& pac = corpus.pac(p);
    int year = corpus.publication(pac.pub).year;
    pubs.insert(pac.pub);
    m.first_year = std::min(m.first_year, year);
    m.last_year = std::max(m.last_year, year);
    full_name.add(pac.last + ", " + pac.initials);
    if (has_full_first_name(pac.first, pac.initials)) first_name.add(pac.first);
    email.add(pac.email);
    std::set<std::string> orgs, cities, countries;
    for (const auto& a : pac.linked_affiliations) {
      orgs.insert(a.org);
      cities.insert(a.city);
      countries.insert(a.country);
    }
    for (const auto& v : orgs) org.add(v);
    for (const auto& v : cities) city.add(v);
    for (const auto& v : countries) country.add(v);
  }
  m.n_pubs = pubs.size();
  std::tie(m.full_name, m.alternative_full_name) = full_name.top2();
  std::tie(m.first_name, m.alternative_first_name) = first_name.top2();
  std::tie(m.email, m.alternative_email) = email.top2();
  std::tie(m.address_organization, m.alternative_address_organization) = org.top2();
  std::tie(m.address_city, m.alternative_address_city) = city.top2();
  std::tie(m.address_country, m.alternative_address_country) = country.top2();
  return m;
}

std::vector<Cluster> cluster_corpus(const ScoringContext& ctx, const ClusterOptions& opts) {
  const Corpus& corpus = ctx.corpus();
  auto candidates = cluster_blocks_parallel(ctx, opts);
  auto groups = merge_groups(corpus, candidates);
  std::vector<Cluster> out(groups.size());
  int threads = std::max(1, opts.threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(groups.size()); ++i) {
    auto k = static_cast<std::size_t>(i);
    out[k] = make_cluster(corpus, k + 1, groups[k]);
    out[k].meta = compute_cluster_meta(corpus, groups[k]);
  }
  return out;
}

void check_partition(const Corpus& corpus, std::span<const Cluster> clusters) {
  std::vector<int> seen(corpus.pacs().size(), 0);
  for (const auto& c : clusters) {
    if (c.pacs.empty()) throw InvariantError("cluster " + std::to_string(c.cluster_id) + " is empty");
    for (const auto& id : c.pacs) {
      auto p = corpus.find_pac(id);
      if (!p) throw InvariantError("cluster " + std::to_string(c.cluster_id) + " references unknown PAC " + id.pub_id);
      if (++seen[*p] > 1) throw InvariantError("PAC " + id.pub_id + "#" + std::to_string(id.position) + " in two clusters");
    }
  }
  for (std::size_t p = 0; p < seen.size(); ++p)
    if (seen[p] == 0) throw InvariantError("PAC " + corpus.pac_id(p).pub_id + " not clustered");
}

void write_clusters_jsonl(std::ostream& out, std::span<const Cluster> clusters) {
  for (const auto& c : clusters) {
    const auto& m = c.meta;
    nlohmann::ordered_json j;
    j["cluster_id"] = c.cluster_id;
    j["n_pubs"] = m.n_pubs;
    j["first_year"] = m.first_year;
    j["last_year"] = m.last_year;
    j["full_name"] = m.full_name;
    j["first_name"] = m.first_name;
    j["email"] = m.email;
    j["address_organization"] = m.address_organization;
    j["address_city"] = m.address_city;
    j["address_country"] = m.address_country;
    j["alternative_full_name"] = m.alternative_full_name;
    j["alternative_first_name"] = m.alternative_first_name;
    j["alternative_email"] = m.alternative_email;
    j["alternative_address_organization"] = m.alternative_address_organization;
    j["alternative_address_city"] = m.alternative_address_city;
    j["alternative_address_country"] = m.alternative_address_country;
    auto ids = nlohmann::ordered_json::array();
    for (const auto& p : c.pacs) ids.push_back({p.pub_id, p.position});
    j["pac_ids"] = std::move(ids);
    out << j.dump() << '\n';
  }
}

std::vector<Cluster> read_clusters_jsonl(std::istream& in) {
  std::vector<Cluster> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(text);
      Cluster c;
      c.cluster_id = j.at("cluster_id").get<std::uint64_t>();
      auto& m = c.meta;
      m.n_pubs = j.at("n_pubs").get<std::size_t>();
      m.first_year = j.at("first_year").get<int>();
      m.last_year = j.at("last_year").get<int>();
      m.full_name = j.value("full_name", "");
      m.first_name = j.value("first_name", "");
      m.email = j.value("email", "");
      m.address_organization = j.value("address_organization", "");
      m.address_city = j.value("address_city", "");
      m.address_country = j.value("address_country", "");
      m.alternative_full_name = j.value("alternative_full_name", "");
      m.alternative_first_name = j.value("alternative_first_name", "");
      m.alternative_email = j.value("alternative_email", "");
      m.alternative_address_organization = j.value("alternative_address_organization", "");
      m.alternative_address_city = j.value("alternative_address_city", "");
      m.alternative_address_country = j.value("alternative_address_country", "");
      for (const auto& p : j.at("pac_ids")) c.pacs.push_back({p.at(0).get<std::string>(), p.at(1).get<int>()});
      out.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("clusters line " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Cluster> read_clusters_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open clusters file '" + path + "'");
  return read_clusters_jsonl(in);
}

}  // namespace oeuvre
