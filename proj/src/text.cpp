#include "oeuvre/text.hpp"

#include <array>

#include "oeuvre/error.hpp"

namespace oeuvre {

namespace {

// ASCII replacement for U+00C0..U+017F. Empty entries are non-letters.
constexpr std::array<const char*, 192> kLatinFold = {
    // U+00C0
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    // U+00D0
    "d", "n", "o", "o", "o", "o", "o", "", "o", "u", "u", "u", "u", "y", "th", "ss",
    // U+00E0
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    // U+00F0
    "d", "n", "o", "o", "o", "o", "o", "", "o", "u", "u", "u", "u", "y", "th", "y",
    // U+0100
    "a", "a", "a", "a", "a", "a", "c", "c", "c", "c", "c", "c", "c", "c", "d", "d",
    // U+0110
    "d", "d", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "g", "g", "g", "g",
    // U+0120
    "g", "g", "g", "g", "h", "h", "h", "h", "i", "i", "i", "i", "i", "i", "i", "i",
    // U+0130
    "i", "i", "ij", "ij", "j", "j", "k", "k", "k", "l", "l", "l", "l", "l", "l", "l",
    // U+0140
    "l", "l", "l", "n", "n", "n", "n", "n", "n", "n", "n", "n", "o", "o", "o", "o",
    // U+0150
    "o", "o", "oe", "oe", "r", "r", "r", "r", "r", "r", "s", "s", "s", "s", "s", "s",
    // U+0160
    "s", "s", "t", "t", "t", "t", "t", "t", "u", "u", "u", "u", "u", "u", "u", "u",
    // U+0170
    "u", "u", "u", "u", "w", "w", "y", "y", "y", "z", "z", "z", "z", "z", "z", "s",
};

struct Decoded {
  char32_t cp;
  std::size_t len;
};

constexpr char32_t kInvalid = 0xFFFFFFFF;

std::size_t sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

Decoded decode(std::string_view s, std::size_t i) {
  auto lead = static_cast<unsigned char>(s[i]);
  std::size_t len = sequence_length(lead);
  if (len == 1) return {lead < 0x80 ? char32_t{lead} : kInvalid, 1};
  if (i + len > s.size()) return {kInvalid, 1};
  char32_t cp = lead & (0x7F >> len);
  for (std::size_t k = 1; k < len; ++k) {
    auto c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xC0) != 0x80) return {kInvalid, 1};
    cp = (cp << 6) | (c & 0x3F);
  }
  return {cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

char32_t lower_latin(char32_t cp) {
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  bool even_upper = (cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177);
  bool odd_upper = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
  if (even_upper && cp % 2 == 0) return cp + 1;
  if (odd_upper && cp % 2 == 1) return cp + 1;
  return cp;
}

bool is_unicode_space(char32_t cp) {
  return cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F || cp == 0x3000;
}

bool is_unicode_dash(char32_t cp) { return cp >= 0x2010 && cp <= 0x2015; }

bool is_unicode_punct(char32_t cp) {
  return (cp >= 0x80 && cp < 0xC0) || cp == 0xD7 || cp == 0xF7 || (cp >= 0x2000 && cp <= 0x2BFF) ||
         (cp >= 0x3000 && cp <= 0x303F) || (cp >= 0xFE00 && cp <= 0xFE6F) || cp == 0xFEFF;
}

// Lowercase form in which every letter is either an ASCII a-z or one kept
// UTF-8 sequence. ASCII punctuation is preserved for the callers to classify.
std::string fold(std::string_view raw, const NormalizeOptions& opts) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    auto [cp, len] = decode(raw, i);
    i += len;
    if (cp == kInvalid) continue;
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    } else if (is_unicode_space(cp)) {
      out += ' ';
    } else if (is_unicode_dash(cp)) {
      out += '-';
    } else if (is_unicode_punct(cp)) {
      continue;
    } else if (opts.fold_diacritics && cp >= 0xC0 && cp <= 0x17F) {
      out += kLatinFold[cp - 0xC0];
    } else {
      append_utf8(out, lower_latin(cp));
    }
  }
  return out;
}

bool is_letter(unsigned char c) { return (c >= 'a' && c <= 'z') || c >= 0x80; }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string letters_only(std::string_view folded) {
  std::string out;
  for (unsigned char c : folded)
    if (is_letter(c)) out += static_cast<char>(c);
  return out;
}

std::string normalize_last(std::string_view folded) {
  std::string out;
  bool pending_sep = false;
  bool pending_hyphen = false;
  for (unsigned char c : folded) {
    if (is_letter(c)) {
      if (pending_sep && !out.empty()) out += pending_hyphen ? '-' : ' ';
      pending_sep = pending_hyphen = false;
      out += static_cast<char>(c);
    } else if (is_space(c) || c == '-') {
      pending_sep = true;
      pending_hyphen = pending_hyphen || c == '-';
    }
  }
  return out;
}

std::string normalize_first(std::string_view folded) {
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (!out.empty()) out += ' ';
    out += word;
    word.clear();
  };
  for (unsigned char c : folded) {
    if (is_space(c)) flush();
    else if (is_letter(c)) word += static_cast<char>(c);
  }
  flush();
  return out;
}

// One letter per maximal run of letters.
std::string derive_initials(std::string_view folded) {
  std::string out;
  bool in_run = false;
  for (std::size_t i = 0; i < folded.size();) {
    auto c = static_cast<unsigned char>(folded[i]);
    std::size_t len = sequence_length(c);
    if (is_letter(c)) {
      if (!in_run) out.append(folded.substr(i, len));
      in_run = true;
    } else {
      in_run = false;
    }
    i += len;
  }
  return out;
}

std::size_t count_letters(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += sequence_length(static_cast<unsigned char>(s[i]))) ++n;
  return n;
}

}  // namespace

NormalizedName normalize_name(std::string_view raw_last, std::string_view raw_first,
                              std::string_view raw_initials, const NormalizeOptions& opts) {
  std::string folded_first = fold(raw_first, opts);
  NormalizedName n;
  n.last = normalize_last(fold(raw_last, opts));
  n.first = normalize_first(folded_first);
  std::string given = letters_only(fold(raw_initials, opts));
  std::string derived = derive_initials(folded_first);
  n.initials = count_letters(given) >= count_letters(derived) ? given : derived;
  if (n.last.empty() && n.first.empty() && n.initials.empty()) throw DomainError("unnamed mention");
  return n;
}

std::string normalize_text(std::string_view raw, const NormalizeOptions& opts) {
  std::string out;
  bool pending_sep = false;
  for (unsigned char c : fold(raw, opts)) {
    if (is_letter(c) || is_digit(c)) {
      if (pending_sep && !out.empty()) out += ' ';
      pending_sep = false;
      out += static_cast<char>(c);
    } else {
      pending_sep = true;
    }
  }
  return out;
}

std::string normalize_email(std::string_view raw) {
  std::size_t b = 0, e = raw.size();
  while (b < e && is_space(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(raw[e - 1]))) --e;
  std::string out(raw.substr(b, e - b));
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string normalize_key(std::string_view raw, const NormalizeOptions& opts) {
  std::string out;
  for (unsigned char c : fold(raw, opts))
    if (is_letter(c) || is_digit(c)) out += static_cast<char>(c);
  return out;
}

std::string compact_surname(std::string_view normalized_last) {
  std::string out;
  for (char c : normalized_last)
    if (c != ' ' && c != '-') out += c;
  return out;
}

std::vector<std::string> surname_parts(std::string_view normalized_last) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : normalized_last) {
    if (c == ' ' || c == '-') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

std::string_view first_token(std::string_view normalized_first) {
  auto pos = normalized_first.find(' ');
  return pos == std::string_view::npos ? normalized_first : normalized_first.substr(0, pos);
}

std::string_view first_letter(std::string_view normalized) {
  if (normalized.empty()) return {};
  std::size_t len = sequence_length(static_cast<unsigned char>(normalized[0]));
  return normalized.substr(0, std::min(len, normalized.size()));
}

bool has_full_first_name(std::string_view first, std::string_view initials) {
  if (first.empty()) return false;
  std::string letters = compact_surname(first);
  if (letters == initials) return false;
  std::size_t start = 0;
  while (start <= first.size()) {
    auto end = first.find(' ', start);
    if (end == std::string_view::npos) end = first.size();
    if (count_letters(first.substr(start, end - start)) >= 2) return true;
    start = end + 1;
  }
  return false;
}

}  // namespace oeuvre
