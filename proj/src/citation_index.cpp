#include "oeuvre/citation_index.hpp"

#include <algorithm>

namespace oeuvre {

namespace {

template <typename T>
std::size_t intersection_size(std::span<const T> a, std::span<const T> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

CitationIndex CitationIndex::build(const Corpus& corpus) {
  CitationIndex idx;
  const auto& pubs = corpus.publications();
  idx.cites_.resize(pubs.size());
  for (std::size_t i = 0; i < pubs.size(); ++i) {
    idx.keys_.push_back(pubs[i].pub_id);
    idx.by_key_.emplace(pubs[i].pub_id, static_cast<RefId>(i));
  }
  // Text keys live in their own namespace so "W1" as free text never aliases pub W1.
  auto intern_text = [&](const std::string& text) {
    std::string key = "~" + text;
    auto [it, inserted] = idx.by_key_.emplace(key, static_cast<RefId>(idx.keys_.size()));
    if (inserted) idx.keys_.push_back(key);
    return it->second;
  };

  for (std::size_t i = 0; i < pubs.size(); ++i) {
    auto& out = idx.cites_[i];
    for (const auto& r : pubs[i].references) {
      if (!r.pub_id.empty()) {
        if (auto target = corpus.find(r.pub_id)) {
          if (*target != i) out.push_back(static_cast<RefId>(*target));
        } else {
          out.push_back(intern_text("id:" + r.pub_id));
        }
      } else if (auto text = normalize_key(r.key, corpus.options()); !text.empty()) {
        out.push_back(intern_text(text));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  idx.cited_by_.resize(idx.keys_.size());
  for (std::size_t i = 0; i < pubs.size(); ++i)
    for (RefId r : idx.cites_[i]) idx.cited_by_[r].push_back(i);
  return idx;
}

std::optional<RefId> CitationIndex::lookup(std::string_view key) const {
  auto it = by_key_.find(std::string(key));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

bool CitationIndex::cites_pub(std::size_t citing, std::size_t cited) const {
  const auto& refs = cites_[citing];
  return std::binary_search(refs.begin(), refs.end(), static_cast<RefId>(cited));
}

std::size_t CitationIndex::shared_references(std::size_t a, std::size_t b) const {
  return intersection_size<RefId>(cites_[a], cites_[b]);
}

std::size_t CitationIndex::co_citations(std::size_t a, std::size_t b) const {
  return intersection_size<std::size_t>(cited_by_[a], cited_by_[b]);
}

}  // namespace oeuvre
