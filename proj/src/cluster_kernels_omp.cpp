#include <algorithm>

#include "oeuvre/clustering.hpp"

namespace oeuvre {

namespace {

// Blocks at least this large are split over rows instead of handled by one task.
constexpr std::size_t kRowSplitMin = 192;

void emit(const Block& block, const std::vector<Edge>& edges, std::vector<Candidate>& out) {
  for (const auto& comp : connected_components(block.size(), edges)) {
    Candidate c;
    c.reserve(comp.size());
    for (auto local : comp) c.push_back(block.pacs[local]);
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<Candidate> cluster_blocks_parallel(const ScoringContext& ctx, const ClusterOptions& opts) {
  const auto& blocks = ctx.blocks();
  const int threads = std::max(1, opts.threads);
  const ThresholdPolicy policy = opts.policy;

  std::vector<std::size_t> small, large;
  for (std::size_t b = 0; b < blocks.size(); ++b) (blocks[b].size() >= kRowSplitMin ? large : small).push_back(b);

  std::vector<std::vector<Candidate>> per_block(blocks.size());

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(small.size()); ++k) {
    const Block& block = blocks[small[static_cast<std::size_t>(k)]];
    const std::size_t n = block.size();
    const int threshold = policy.threshold(n);
    std::vector<Edge> edges;
    if (threshold != kNoPairing) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (policy.links(score_pair(ctx, block.pacs[i], block.pacs[j]).total(), threshold))
            edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    emit(block, edges, per_block[small[static_cast<std::size_t>(k)]]);
  }

  for (std::size_t b : large) {
    const Block& block = blocks[b];
    const std::size_t n = block.size();
    const int threshold = policy.threshold(n);
    std::vector<std::vector<Edge>> rows(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(n); ++r) {
      auto i = static_cast<std::size_t>(r);
      for (std::size_t j = i + 1; j < n; ++j)
        if (policy.links(score_pair(ctx, block.pacs[i], block.pacs[j]).total(), threshold))
          rows[i].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    std::vector<Edge> edges;
    for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
    emit(block, edges, per_block[b]);
  }

  std::vector<Candidate> out;
  for (auto& v : per_block)
    for (auto& c : v) out.push_back(std::move(c));
  return out;
}

}  // namespace oeuvre
