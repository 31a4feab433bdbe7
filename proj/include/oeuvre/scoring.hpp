#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "oeuvre/blocking.hpp"
#include "oeuvre/citation_index.hpp"
#include "oeuvre/corpus.hpp"

namespace oeuvre {

// Per-rule contributions to a pair score. Rules that come in tiers
// contribute only their best tier.
struct ScoreBreakdown {
  int email = 0;                 // {0, 100}
  int initials = 0;              // {-10, 0, 5, 10}
  int first_name = 0;            // {0, 3, 6}
  int linked_affiliation = 0;    // {0, 4, 7, 10}
  int shared_coauthors = 0;      // {0, 4, 7, 10}, hyper-author {0, 2, 4, 5}
  int grant = 0;                 // {0, 10}
  int unlinked_affiliation = 0;  // {0, 2, 5, 8}, hyper-institute {0, 1, 3, 4}
  int subject_category = 0;      // {0, 3}
  int journal = 0;               // {0, 6}
  int self_citation = 0;         // {0, 10}, hyper-author {0, 5}
  int bib_coupling = 0;          // {0, 2, 4, 6, 8, 10}
  int co_citation = 0;           // {0, 2, 3, 4, 5, 6}

  int total() const {
    return email + initials + first_name + linked_affiliation + shared_coauthors + grant + unlinked_affiliation +
           subject_category + journal + self_citation + bib_coupling + co_citation;
  }

  ScoreBreakdown& operator+=(const ScoreBreakdown& o);
  friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

struct PairFlags {
  bool hyper_author = false;     // either publication has >= 50 authors
  bool hyper_institute = false;  // either publication has >= 20 institutes
};

PairFlags pair_flags(const PublicationInfo& a, const PublicationInfo& b);

// First names too common to count as strong evidence.
class GeneralNames {
 public:
  static constexpr std::size_t kDefaultMaxBlocks = 25;

  GeneralNames() = default;
  explicit GeneralNames(std::unordered_set<std::string> names) : names_(std::move(names)) {}

  // One name per line; normalized like a first name. Blank lines and '#' comments skipped.
  static GeneralNames read(std::istream& in);
  static GeneralNames read_file(const std::string& path);
  // A full first name is general when it occurs in more than `max_blocks` distinct name blocks.
  static GeneralNames from_blocks(const Corpus& corpus, std::span<const Block> blocks,
                                  std::size_t max_blocks = kDefaultMaxBlocks);

  bool contains(std::string_view first) const { return names_.count(std::string(first)) > 0; }
  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_set<std::string> names_;
};

// Precomputed lookups shared by all pair scorers. Holds references to the
// corpus and index, which must outlive it.
class ScoringContext {
 public:
  ScoringContext(const Corpus& corpus, const CitationIndex& index, std::vector<Block> blocks, GeneralNames general);
  // Blocks from build_blocks and general names from the corpus heuristic.
  ScoringContext(const Corpus& corpus, const CitationIndex& index);

  const Corpus& corpus() const { return *corpus_; }
  const CitationIndex& index() const { return *index_; }
  const GeneralNames& general_names() const { return general_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  std::uint32_t block_of(std::size_t pac) const { return block_of_[pac]; }
  // Sorted, unique block ids of all authors of `pub`.
  std::span<const std::uint32_t> author_blocks(std::size_t pub) const { return author_blocks_[pub]; }

 private:
  const Corpus* corpus_;
  const CitationIndex* index_;
  std::vector<Block> blocks_;
  GeneralNames general_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<std::uint32_t>> author_blocks_;
};

// 0 none, 1 country+city, 2 +organization, 3 +department. Fields must be non-empty to match.
int affiliation_tier(const Affiliation& a, const Affiliation& b);

// Rules 1-4: email, initials, first name, linked affiliation.
ScoreBreakdown score_author_data(const Pac& a, const Pac& b, const GeneralNames& general);

// Rules 5-7: shared co-author blocks (excluding `focal_block`), grants,
// affiliations of the publications regardless of author links.
ScoreBreakdown score_publication_data(const ScoringContext& ctx, std::size_t pub_a, std::size_t pub_b,
                                      std::uint32_t focal_block, PairFlags flags);

// Rule 8: journal dominates subject category.
ScoreBreakdown score_source_data(const PublicationInfo& a, const PublicationInfo& b);

// Rules 9-11: direct citation, bibliographic coupling, co-citation.
ScoreBreakdown score_citation_data(const CitationIndex& index, std::size_t pub_a, std::size_t pub_b, PairFlags flags);

// Sum of all rules for two distinct PACs of one block. Two mentions on the
// same publication only get author-data evidence. Symmetric in its arguments.
// Throws DomainError for a PAC paired with itself or PACs of different blocks.
ScoreBreakdown score_pair(const ScoringContext& ctx, std::size_t pac_a, std::size_t pac_b);

// Block-size dependent linkage threshold; size-1 blocks never pair.
inline constexpr int kNoPairing = std::numeric_limits<int>::max();
int threshold_for(std::size_t block_size);

// Debug dump, one JSONL line per scored pair in every block.
void write_score_trace(std::ostream& out, const ScoringContext& ctx);

}  // namespace oeuvre
