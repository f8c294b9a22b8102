#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "entailkit/detail/strings.hpp"
#include "entailkit/error.hpp"
#include "entailkit/resources.hpp"

namespace entailkit {

// Lowercase, punctuation-free, stopword-free tokens in sentence order.
using TokenList = std::vector<std::string>;

// Never removed, whatever the active stopword list says.
inline constexpr std::array<std::string_view, 6> kNegationWords = {
    "no", "not", "nor", "never", "n't", "cannot"};

inline bool is_negation(std::string_view w) {
  for (auto n : kNegationWords)
    if (w == n) return true;
  return false;
}

struct PrepConfig {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::string> lemmas;

  static PrepConfig builtin();
};

namespace textprep_detail {

inline std::unordered_set<std::string> parse_word_list(std::string_view text) {
  std::unordered_set<std::string> out;
  for (auto line : detail::split(text, '\n')) {
    auto w = detail::trim(line);
    if (!w.empty() && w.front() != '#') out.insert(detail::ascii_lower(w));
  }
  return out;
}

inline void parse_lemma_lines(std::string_view text,
                              std::unordered_map<std::string, std::string>& out,
                              std::size_t& row) {
  for (auto line : detail::split(text, '\n')) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto cells = detail::split(line, '\t');
    if (cells.size() != 2 || detail::trim(cells[0]).empty() ||
        detail::trim(cells[1]).empty())
      throw ParseError("lemma table line " + std::to_string(row) +
                           ": expected 'surface<TAB>lemma'",
                       row);
    out[detail::ascii_lower(detail::trim(cells[0]))] =
        detail::ascii_lower(detail::trim(cells[1]));
  }
}

// Minimal UTF-8 decoder; invalid bytes decode to U+FFFD one byte at a time.
inline char32_t next_codepoint(std::string_view s, std::size_t& i) {
  auto b = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    auto c = static_cast<unsigned char>(s[i + k]);
    return (c & 0xC0) == 0x80 ? (c & 0x3F) : -1;
  };
  if (b < 0x80) {
    ++i;
    return b;
  }
  int len = (b & 0xE0) == 0xC0 ? 2 : (b & 0xF0) == 0xE0 ? 3 : (b & 0xF8) == 0xF0 ? 4 : 0;
  if (len == 0) {
    ++i;
    return 0xFFFD;
  }
  char32_t cp = b & (0x7F >> len);
  for (int k = 1; k < len; ++k) {
    int c = cont(static_cast<std::size_t>(k));
    if (c < 0) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | static_cast<char32_t>(c);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// ASCII: everything except letters and digits. Beyond ASCII: the Latin-1
// punctuation/symbol block and the general, supplemental, CJK and fullwidth
// punctuation blocks, plus U+FFFD.
inline bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    bool alnum = (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
                 (cp >= '0' && cp <= '9');
    return !alnum;
  }
  return (cp >= 0x80 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 ||
         (cp >= 0x2000 && cp <= 0x206F) || (cp >= 0x20A0 && cp <= 0x20CF) ||
         (cp >= 0x2E00 && cp <= 0x2E7F) || (cp >= 0x3000 && cp <= 0x303F) ||
         (cp >= 0xFE30 && cp <= 0xFE4F) || (cp >= 0xFF01 && cp <= 0xFF0F) ||
         (cp >= 0xFF1A && cp <= 0xFF20) || (cp >= 0xFF3B && cp <= 0xFF40) ||
         (cp >= 0xFF5B && cp <= 0xFF65) || cp == 0xFFFD;
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;  // Latin-1
  return cp;
}

// Lowercases and folds the typographic apostrophe to ASCII.
inline std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    char32_t cp = to_lower(next_codepoint(s, i));
    if (cp == 0x2019) cp = '\'';
    append_utf8(out, cp);
  }
  return out;
}

inline std::string strip_punct(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    char32_t cp = next_codepoint(s, i);
    append_utf8(out, is_punct(cp) ? U' ' : cp);
  }
  return out;
}

inline bool ascii_alpha(char c) { return c >= 'a' && c <= 'z'; }
inline bool ascii_alnum(char c) { return ascii_alpha(c) || (c >= '0' && c <= '9'); }

// Stem before an "n't" clitic; irregular contractions restore the full auxiliary.
inline std::string_view clitic_stem(std::string_view left) {
  if (left == "ca") return "can";
  if (left == "wo") return "will";
  if (left == "sha") return "shall";
  return left;
}

// Splits "n't" off a whitespace-delimited chunk: "don't" -> {"do", "n't"}.
// Every other apostrophe is left for punctuation stripping.
inline void split_clitics(std::string_view chunk, std::vector<std::string>& pieces) {
  std::size_t start = 0;
  for (std::size_t pos = chunk.find("n't"); pos != std::string_view::npos;
       pos = chunk.find("n't", pos + 1)) {
    if (pos < start) continue;
    const bool ends_word = pos + 3 == chunk.size() || !ascii_alnum(chunk[pos + 3]);
    const bool standalone = pos == start || !ascii_alnum(chunk[pos - 1]);
    const bool attached = pos > start && ascii_alpha(chunk[pos - 1]);
    if (!ends_word || !(standalone || attached)) continue;
    if (pos > start) {
      std::string_view left = chunk.substr(start, pos - start);
      // keep any leading punctuation with the stem for the stripping pass
      std::size_t word_begin = left.size();
      while (word_begin > 0 && ascii_alpha(left[word_begin - 1])) --word_begin;
      std::string piece(left.substr(0, word_begin));
      piece += clitic_stem(left.substr(word_begin));
      pieces.push_back(std::move(piece));
    }
    pieces.emplace_back("n't");
    start = pos + 3;
  }
  if (start < chunk.size()) pieces.emplace_back(chunk.substr(start));
}

}  // namespace textprep_detail

inline PrepConfig PrepConfig::builtin() {
  PrepConfig cfg;
  cfg.stopwords = textprep_detail::parse_word_list(resources::kStopwords);
  std::size_t row = 0;
  for (auto part : resources::kLemmaTableParts)
    textprep_detail::parse_lemma_lines(part, cfg.lemmas, row);
  return cfg;
}

// One word per line; blank lines and '#' comments ignored.
inline std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open stopword list " + path.string());
  std::string text(std::istreambuf_iterator<char>(in), {});
  return textprep_detail::parse_word_list(text);
}

// "surface<TAB>lemma" per line. The clitic mapping n't -> not is added when
// the file does not provide its own.
inline std::unordered_map<std::string, std::string> load_lemmas(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lemma table " + path.string());
  std::string text(std::istreambuf_iterator<char>(in), {});
  std::unordered_map<std::string, std::string> out;
  std::size_t row = 0;
  textprep_detail::parse_lemma_lines(text, out, row);
  out.try_emplace("n't", "not");
  return out;
}

inline std::string lemmatize(std::string_view token, const PrepConfig& config) {
  auto it = config.lemmas.find(std::string(token));
  return it == config.lemmas.end() ? std::string(token) : it->second;
}

// lowercase -> strip punctuation -> whitespace tokenize -> drop stopwords
// (negations are kept) -> lemmatize. Lemmas that are themselves stopwords
// are dropped too, so the output never contains an active stopword.
inline TokenList preprocess(std::string_view sentence, const PrepConfig& config) {
  using namespace textprep_detail;
  const std::string lowered = lowercase(sentence);

  std::vector<std::string> pieces;
  for (auto chunk : detail::split_ws(lowered)) split_clitics(chunk, pieces);

  TokenList raw;
  for (const auto& piece : pieces) {
    if (piece == "n't") {
      raw.push_back(piece);
      continue;
    }
    const std::string stripped = strip_punct(piece);
    for (auto tok : detail::split_ws(stripped)) raw.emplace_back(tok);
  }

  TokenList out;
  out.reserve(raw.size());
  for (auto& tok : raw) {
    if (!is_negation(tok) && config.stopwords.contains(tok)) continue;
    std::string lemma = lemmatize(tok, config);
    // a custom lemma table may map onto a stopword
    if (!is_negation(lemma) && config.stopwords.contains(lemma)) continue;
    out.push_back(std::move(lemma));
  }
  return out;
}

inline std::string join(const TokenList& tokens, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

}  // namespace entailkit
