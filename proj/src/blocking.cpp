#include "oeuvre/blocking.hpp"

#include <map>
#include <ostream>

#include <json.hpp>

#include "oeuvre/error.hpp"

namespace oeuvre {

BlockKey block_key(const Pac& pac) {
  BlockKey key;
  key.last = compact_surname(pac.last);
  key.initial = std::string(first_letter(pac.initials.empty() ? pac.first : pac.initials));
  if (key.last.empty()) throw DomainError("cannot block a mention without a last name");
  if (key.initial.empty()) throw DomainError("cannot block '" + pac.last + "': no first name or initials");
  return key;
}

std::vector<Block> build_blocks(const Corpus& corpus) {
  std::map<BlockKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < corpus.pacs().size(); ++i) groups[block_key(corpus.pac(i))].push_back(i);
  std::vector<Block> blocks;
  blocks.reserve(groups.size());
  for (auto& [key, pacs] : groups) blocks.push_back({key, std::move(pacs)});
  return blocks;
}

void write_blocks_jsonl(std::ostream& out, const Corpus& corpus, std::span<const Block> blocks) {
  for (const auto& b : blocks) {
    nlohmann::ordered_json j;
    j["last"] = b.key.last;
    j["initial"] = b.key.initial;
    j["size"] = b.size();
    auto ids = nlohmann::ordered_json::array();
    for (std::size_t p : b.pacs) {
      auto id = corpus.pac_id(p);
      ids.push_back({id.pub_id, id.position});
    }
    j["pac_ids"] = std::move(ids);
    out << j.dump() << '\n';
  }
}

}  // namespace oeuvre
