#include "oeuvre/scoring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "oeuvre/error.hpp"

namespace oeuvre {

namespace {

// Indexed by count; the last entry covers everything above.
constexpr int kCoauthor[] = {0, 4, 7, 10};
constexpr int kCoauthorHyper[] = {0, 2, 4, 5};
constexpr int kLinkedAffiliation[] = {0, 4, 7, 10};
constexpr int kUnlinkedAffiliation[] = {0, 2, 5, 8};
constexpr int kUnlinkedAffiliationHyper[] = {0, 1, 3, 4};
constexpr int kBibCoupling[] = {0, 2, 4, 6, 8, 10};
constexpr int kCoCitation[] = {0, 2, 3, 4, 5, 6};

constexpr int kEmail = 100;
constexpr int kTwoInitials = 5;
constexpr int kManyInitials = 10;
constexpr int kConflictingInitials = -10;
constexpr int kGeneralFirstName = 3;
constexpr int kFirstName = 6;
constexpr int kGrant = 10;
constexpr int kSubjectCategory = 3;
constexpr int kJournal = 6;
constexpr int kSelfCitation = 10;
constexpr int kSelfCitationHyper = 5;

template <std::size_t N>
int capped(const int (&table)[N], std::size_t count) {
  return table[std::min(count, N - 1)];
}

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

int initials_score(const std::string& a, const std::string& b) {
  if (a.size() >= 2 && b.size() >= 2) {
    std::size_t shared = std::min(a.size(), b.size());
    for (std::size_t i = 1; i < shared; ++i)
      if (a[i] != b[i]) return kConflictingInitials;
  }
  if (a != b) return 0;
  if (a.size() == 2) return kTwoInitials;
  if (a.size() > 2) return kManyInitials;
  return 0;
}

int best_tier(std::span<const Affiliation> a, std::span<const Affiliation> b) {
  int best = 0;
  for (const auto& x : a)
    for (const auto& y : b) best = std::max(best, affiliation_tier(x, y));
  return best;
}

}  // namespace

ScoreBreakdown& ScoreBreakdown::operator+=(const ScoreBreakdown& o) {
  email += o.email;
  initials += o.initials;
  first_name += o.first_name;
  linked_affiliation += o.linked_affiliation;
  shared_coauthors += o.shared_coauthors;
  grant += o.grant;
  unlinked_affiliation += o.unlinked_affiliation;
  subject_category += o.subject_category;
  journal += o.journal;
  self_citation += o.self_citation;
  bib_coupling += o.bib_coupling;
  co_citation += o.co_citation;
  return *this;
}

PairFlags pair_flags(const PublicationInfo& a, const PublicationInfo& b) {
  return {a.hyper_author || b.hyper_author, a.hyper_institute || b.hyper_institute};
}

GeneralNames GeneralNames::read(std::istream& in) {
  std::unordered_set<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    auto n = normalize_name("x", line, "").first;
    if (!n.empty()) names.insert(std::move(n));
  }
  return GeneralNames(std::move(names));
}

GeneralNames GeneralNames::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open general-names file '" + path + "'");
  return read(in);
}

GeneralNames GeneralNames::from_blocks(const Corpus& corpus, std::span<const Block> blocks, std::size_t max_blocks) {
  std::map<std::string, std::set<std::size_t>> seen;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t p : blocks[b].pacs) {
      const Pac& pac = corpus.pac(p);
      if (has_full_first_name(pac.first, pac.initials)) seen[pac.first].insert(b);
    }
  }
  std::unordered_set<std::string> names;
  for (auto& [name, in_blocks] : seen)
    if (in_blocks.size() > max_blocks) names.insert(name);
  return GeneralNames(std::move(names));
}

ScoringContext::ScoringContext(const Corpus& corpus, const CitationIndex& index, std::vector<Block> blocks,
                               GeneralNames general)
    : corpus_(&corpus), index_(&index), blocks_(std::move(blocks)), general_(std::move(general)) {
  block_of_.assign(corpus.pacs().size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t p : blocks_[b].pacs) block_of_[p] = static_cast<std::uint32_t>(b);
  for (auto id : block_of_)
    if (id == std::numeric_limits<std::uint32_t>::max()) throw DomainError("blocks do not cover every PAC");

  author_blocks_.resize(corpus.publications().size());
  for (std::size_t p = 0; p < corpus.pacs().size(); ++p) author_blocks_[corpus.pac(p).pub].push_back(block_of_[p]);
  for (auto& v : author_blocks_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

ScoringContext::ScoringContext(const Corpus& corpus, const CitationIndex& index)
    : ScoringContext(corpus, index, build_blocks(corpus), GeneralNames{}) {
  general_ = GeneralNames::from_blocks(corpus, blocks_);
}

int affiliation_tier(const Affiliation& a, const Affiliation& b) {
  if (a.country.empty() || a.city.empty() || a.country != b.country || a.city != b.city) return 0;
  if (a.org.empty() || a.org != b.org) return 1;
  if (a.dept.empty() || a.dept != b.dept) return 2;
  return 3;
}

ScoreBreakdown score_author_data(const Pac& a, const Pac& b, const GeneralNames& general) {
  ScoreBreakdown s;
  if (!a.email.empty() && a.email == b.email) s.email = kEmail;
  s.initials = initials_score(a.initials, b.initials);
  if (a.first == b.first && has_full_first_name(a.first, a.initials) && has_full_first_name(b.first, b.initials))
    s.first_name = general.contains(a.first) ? kGeneralFirstName : kFirstName;
  s.linked_affiliation = kLinkedAffiliation[best_tier(a.linked_affiliations, b.linked_affiliations)];
  return s;
}

ScoreBreakdown score_publication_data(const ScoringContext& ctx, std::size_t pub_a, std::size_t pub_b,
                                      std::uint32_t focal_block, PairFlags flags) {
  ScoreBreakdown s;
  auto ka = ctx.author_blocks(pub_a);
  auto kb = ctx.author_blocks(pub_b);
  std::size_t shared = intersection_size<std::uint32_t>(ka, kb);
  if (std::binary_search(ka.begin(), ka.end(), focal_block) && std::binary_search(kb.begin(), kb.end(), focal_block))
    --shared;
  s.shared_coauthors = flags.hyper_author ? capped(kCoauthorHyper, shared) : capped(kCoauthor, shared);

  const auto& ia = ctx.corpus().info(pub_a);
  const auto& ib = ctx.corpus().info(pub_b);
  if (intersection_size<std::string>(ia.grants, ib.grants) > 0) s.grant = kGrant;

  int tier = best_tier(ia.affiliations, ib.affiliations);
  s.unlinked_affiliation = flags.hyper_institute ? kUnlinkedAffiliationHyper[tier] : kUnlinkedAffiliation[tier];
  return s;
}

ScoreBreakdown score_source_data(const PublicationInfo& a, const PublicationInfo& b) {
  ScoreBreakdown s;
  if (!a.source.empty() && a.source == b.source) s.journal = kJournal;
  else if (intersection_size<std::string>(a.categories, b.categories) > 0) s.subject_category = kSubjectCategory;
  return s;
}

ScoreBreakdown score_citation_data(const CitationIndex& index, std::size_t pub_a, std::size_t pub_b, PairFlags flags) {
  ScoreBreakdown s;
  if (index.cites_pub(pub_a, pub_b) || index.cites_pub(pub_b, pub_a))
    s.self_citation = flags.hyper_author ? kSelfCitationHyper : kSelfCitation;
  s.bib_coupling = capped(kBibCoupling, index.shared_references(pub_a, pub_b));
  s.co_citation = capped(kCoCitation, index.co_citations(pub_a, pub_b));
  return s;
}

ScoreBreakdown score_pair(const ScoringContext& ctx, std::size_t pac_a, std::size_t pac_b) {
  if (pac_a == pac_b) throw DomainError("a PAC cannot be paired with itself");
  std::uint32_t block = ctx.block_of(pac_a);
  if (block != ctx.block_of(pac_b)) throw DomainError("cross-block pair");

  const Pac& a = ctx.corpus().pac(pac_a);
  const Pac& b = ctx.corpus().pac(pac_b);
  ScoreBreakdown s = score_author_data(a, b, ctx.general_names());
  if (a.pub == b.pub) return s;

  const auto& ia = ctx.corpus().info(a.pub);
  const auto& ib = ctx.corpus().info(b.pub);
  PairFlags flags = pair_flags(ia, ib);
  s += score_publication_data(ctx, a.pub, b.pub, block, flags);
  s += score_source_data(ia, ib);
  s += score_citation_data(ctx.index(), a.pub, b.pub, flags);
  return s;
}

int threshold_for(std::size_t block_size) {
  if (block_size < 1) throw DomainError("block size must be at least 1");
  if (block_size == 1) return kNoPairing;
  if (block_size <= 500) return 11;
  if (block_size <= 1500) return 13;
  if (block_size <= 7000) return 17;
  if (block_size <= 22500) return 21;
  return 90;
}

void write_score_trace(std::ostream& out, const ScoringContext& ctx) {
  const Corpus& corpus = ctx.corpus();
  auto id_json = [&](std::size_t pac) {
    auto id = corpus.pac_id(pac);
    return nlohmann::ordered_json::array({id.pub_id, id.position});
  };
  for (const auto& block : ctx.blocks()) {
    for (std::size_t i = 0; i < block.pacs.size(); ++i) {
      for (std::size_t j = i + 1; j < block.pacs.size(); ++j) {
        ScoreBreakdown s = score_pair(ctx, block.pacs[i], block.pacs[j]);
        nlohmann::ordered_json line;
        line["pac_a"] = id_json(block.pacs[i]);
        line["pac_b"] = id_json(block.pacs[j]);
        line["email"] = s.email;
        line["initials"] = s.initials;
        line["first_name"] = s.first_name;
        line["linked_affiliation"] = s.linked_affiliation;
        line["shared_coauthors"] = s.shared_coauthors;
        line["grant"] = s.grant;
        line["unlinked_affiliation"] = s.unlinked_affiliation;
        line["subject_category"] = s.subject_category;
        line["journal"] = s.journal;
        line["self_citation"] = s.self_citation;
        line["bib_coupling"] = s.bib_coupling;
        line["co_citation"] = s.co_citation;
        line["total"] = s.total();
        out << line.dump() << '\n';
      }
    }
  }
}

}  // namespace oeuvre
