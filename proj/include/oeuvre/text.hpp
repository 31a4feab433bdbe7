#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oeuvre {

struct NormalizeOptions {
  // Map Latin-1 / Latin Extended-A letters to ASCII ("Müller" -> "muller").
  bool fold_diacritics = true;
};

struct NormalizedName {
  std::string last;      // letters, single spaces and hyphens kept between parts
  std::string first;     // letters only within each word, words space-joined
  std::string initials;  // one letter per first-name piece

  friend bool operator==(const NormalizedName&, const NormalizedName&) = default;
};

// Lowercase, fold, strip non-letters. Initials are taken from whichever of
// `raw_initials` and the first-name pieces yields more letters.
// Throws DomainError("unnamed mention") when every part normalizes to empty.
NormalizedName normalize_name(std::string_view raw_last, std::string_view raw_first,
                              std::string_view raw_initials, const NormalizeOptions& opts = {});

// Free text such as organizations, cities, journal titles: lowercase, folded,
// runs of non-alphanumerics collapsed to one space, trimmed.
std::string normalize_text(std::string_view raw, const NormalizeOptions& opts = {});

// Lowercase and trim.
std::string normalize_email(std::string_view raw);

// Lowercase, folded, alphanumerics only. Used for unresolved reference keys.
std::string normalize_key(std::string_view raw, const NormalizeOptions& opts = {});

// Surname with spaces and hyphens removed ("bernelli-zazzera" -> "bernellizazzera").
std::string compact_surname(std::string_view normalized_last);

// Surname split on spaces and hyphens.
std::vector<std::string> surname_parts(std::string_view normalized_last);

// First whitespace-delimited word.
std::string_view first_token(std::string_view normalized_first);

// First code point of a normalized string (ASCII letter or one UTF-8 sequence).
std::string_view first_letter(std::string_view normalized);

// True when `first` carries more than the initials: some word has two or more
// letters and the letters are not just the initials spelled out ("f b" vs "fb").
bool has_full_first_name(std::string_view first, std::string_view initials);

}  // namespace oeuvre
