#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oeuvre/corpus.hpp"

namespace oeuvre {

using RefId = std::uint32_t;

// Forward and reverse citation lists over interned reference keys.
// In-corpus publications use their publication index as RefId and their
// pub_id as key; unresolved references get ids after them and a normalized
// text key. Immutable after build.
class CitationIndex {
 public:
  static CitationIndex build(const Corpus& corpus);

  // Sorted, unique references of publication `pub`.
  std::span<const RefId> cites(std::size_t pub) const { return cites_[pub]; }
  // Sorted, unique citing publications of `ref`.
  std::span<const std::size_t> cited_by(RefId ref) const { return cited_by_[ref]; }

  std::size_t ref_count() const { return keys_.size(); }
  const std::string& key(RefId ref) const { return keys_[ref]; }
  std::optional<RefId> lookup(std::string_view key) const;

  // `citing` lists `cited` among its references.
  bool cites_pub(std::size_t citing, std::size_t cited) const;
  // Bibliographic coupling strength: |cites(a) ∩ cites(b)|.
  std::size_t shared_references(std::size_t a, std::size_t b) const;
  // Co-citation strength: number of publications citing both a and b.
  std::size_t co_citations(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::vector<RefId>> cites_;
  std::vector<std::vector<std::size_t>> cited_by_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, RefId> by_key_;
};

}  // namespace oeuvre
