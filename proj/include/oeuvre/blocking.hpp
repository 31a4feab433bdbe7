#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "oeuvre/corpus.hpp"

namespace oeuvre {

// Author name block: compacted surname plus first initial ("grosso", "a").
struct BlockKey {
  std::string last;
  std::string initial;

  std::string label() const { return last + ", " + initial; }
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

// Throws DomainError when the PAC has no surname or no initial.
BlockKey block_key(const Pac& pac);

struct Block {
  BlockKey key;
  std::vector<std::size_t> pacs;  // corpus PAC indices, ascending

  std::size_t size() const { return pacs.size(); }
};

// Partition of every PAC into blocks, ordered by key.
std::vector<Block> build_blocks(const Corpus& corpus);

// JSONL: {"last","initial","size","pac_ids":[[pub_id,position],...]}
void write_blocks_jsonl(std::ostream& out, const Corpus& corpus, std::span<const Block> blocks);

}  // namespace oeuvre
