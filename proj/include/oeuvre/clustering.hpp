#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oeuvre/corpus.hpp"
#include "oeuvre/scoring.hpp"

namespace oeuvre {

// Weighted union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// Pair score with block-local endpoints.
struct ScoredPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  int total = 0;
};

struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Boundary { inclusive, strict };

struct ThresholdPolicy {
  std::optional<int> fixed;  // overrides the block-size table when set
  Boundary boundary = Boundary::inclusive;

  int threshold(std::size_t block_size) const;
  bool links(int score, int threshold) const {
    if (threshold == kNoPairing) return false;
    return boundary == Boundary::strict ? score > threshold : score >= threshold;
  }
};

// Edges (a < b) for pairs whose total reaches the threshold, in input order.
std::vector<Edge> build_similarity_graph(std::span<const ScoredPair> scores, int threshold,
                                         Boundary boundary = Boundary::inclusive);

// Components of the graph over vertices [0, n). Members ascending; components
// ordered by smallest member. Isolated vertices are singletons.
std::vector<std::vector<std::uint32_t>> connected_components(std::size_t n, std::span<const Edge> edges);

// A candidate oeuvre: corpus PAC indices, ascending.
using Candidate = std::vector<std::size_t>;

struct ClusterOptions {
  ThresholdPolicy policy;
  int threads = 1;
};

// Reference kernel: every block, every pair, one thread.
std::vector<Candidate> cluster_blocks_serial(const ScoringContext& ctx, const ClusterOptions& opts);

// OpenMP kernel. Small blocks are scored one block per task; large blocks
// are split over rows. Output is identical to the serial kernel.
std::vector<Candidate> cluster_blocks_parallel(const ScoringContext& ctx, const ClusterOptions& opts);

// Cluster summary metadata. Modal values count each PAC once per distinct value;
// ties go to the lexicographically smaller string.
struct ClusterMeta {
  std::size_t n_pubs = 0;
  int first_year = 0;
  int last_year = 0;
  std::string full_name;
  std::string first_name;
  std::string email;
  std::string address_organization;
  std::string address_city;
  std::string address_country;
  std::string alternative_full_name;
  std::string alternative_first_name;
  std::string alternative_email;
  std::string alternative_address_organization;
  std::string alternative_address_city;
  std::string alternative_address_country;

  friend bool operator==(const ClusterMeta&, const ClusterMeta&) = default;
};

struct Cluster {
  std::uint64_t cluster_id = 0;
  std::vector<PacId> pacs;  // ascending
  ClusterMeta meta;

  std::vector<std::string> pub_ids() const;
};

// Unions candidates that share any non-empty member email, transitively.
// Members sorted by PacId; clusters numbered from 1 in order of their
// smallest member. Metadata left empty.
std::vector<Cluster> merge_by_email(const Corpus& corpus, std::span<const Candidate> candidates);

ClusterMeta compute_cluster_meta(const Corpus& corpus, std::span<const std::size_t> pacs);

// blocks -> scores -> components -> email merge -> metadata.
std::vector<Cluster> cluster_corpus(const ScoringContext& ctx, const ClusterOptions& opts);

// Throws InvariantError unless every PAC of the corpus is in exactly one cluster.
void check_partition(const Corpus& corpus, std::span<const Cluster> clusters);

void write_clusters_jsonl(std::ostream& out, std::span<const Cluster> clusters);
std::vector<Cluster> read_clusters_jsonl(std::istream& in);
std::vector<Cluster> read_clusters_file(const std::string& path);

}  // namespace oeuvre
