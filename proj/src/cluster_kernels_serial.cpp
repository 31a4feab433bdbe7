#include "oeuvre/clustering.hpp"

namespace oeuvre {

std::vector<Candidate> cluster_blocks_serial(const ScoringContext& ctx, const ClusterOptions& opts) {
  std::vector<Candidate> out;
  for (const auto& block : ctx.blocks()) {
    const std::size_t n = block.size();
    int threshold = opts.policy.threshold(n);

    std::vector<ScoredPair> scores;
    scores.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        scores.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                          score_pair(ctx, block.pacs[i], block.pacs[j]).total()});

    auto edges = build_similarity_graph(scores, threshold, opts.policy.boundary);
    for (const auto& comp : connected_components(n, edges)) {
      Candidate c;
      for (auto local : comp) c.push_back(block.pacs[local]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace oeuvre
