#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "entailkit/detail/log.hpp"
#include "entailkit/detail/strings.hpp"
#include "entailkit/error.hpp"

namespace entailkit {

enum class EmbeddingFormat { BinaryW2v, TextW2v };

// Immutable after loading. Keys are case-folded to lowercase; vectors are
// widened to 64-bit. Absent words have no vector at all.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  EmbeddingStore(std::size_t dimension, std::string name)
      : dim_(dimension), name_(std::move(name)) {
    if (dim_ == 0) throw DimensionError("embedding dimension must be positive");
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::string& name() const noexcept { return name_; }
  // Number of keys that collided (after case folding) with an earlier entry.
  std::size_t duplicates() const noexcept { return duplicates_; }

  std::optional<std::span<const double>> lookup(std::string_view word) const {
    auto it = index_.find(detail::ascii_lower(word));
    if (it == index_.end()) return std::nullopt;
    return std::span<const double>(data_.data() + it->second * dim_, dim_);
  }

  bool contains(std::string_view word) const {
    return index_.contains(detail::ascii_lower(word));
  }

  // Last one wins on collision. Returns false when an existing key was replaced.
  bool insert(std::string_view word, std::span<const double> values) {
    if (values.size() != dim_)
      throw DimensionError("vector for '" + std::string(word) + "' has " +
                           std::to_string(values.size()) + " elements, expected " +
                           std::to_string(dim_));
    std::string key = detail::ascii_lower(word);
    auto [it, fresh] = index_.try_emplace(key, words_.size());
    if (fresh) {
      words_.push_back(std::move(key));
      data_.insert(data_.end(), values.begin(), values.end());
    } else {
      std::copy(values.begin(), values.end(),
                data_.begin() + static_cast<std::ptrdiff_t>(it->second * dim_));
      ++duplicates_;
    }
    return fresh;
  }

  // Keys in first-insertion order.
  const std::vector<std::string>& words() const noexcept { return words_; }

 private:
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t duplicates_ = 0;
};

struct EmbeddingLoadOptions {
  EmbeddingFormat format = EmbeddingFormat::BinaryW2v;
  // When set, only these (lowercase) words are kept.
  std::optional<std::unordered_set<std::string>> vocab_filter;
  std::string name;
};

namespace embed_detail {

inline constexpr std::size_t kMaxWordBytes = 1 << 16;
inline constexpr std::size_t kMaxDuplicateWarnings = 5;

inline bool keep(const EmbeddingLoadOptions& opts, std::string_view word) {
  return !opts.vocab_filter || opts.vocab_filter->contains(detail::ascii_lower(word));
}

inline void note_duplicate(EmbeddingStore& store, std::string_view word) {
  if (store.duplicates() <= kMaxDuplicateWarnings)
    detail::warn("duplicate embedding key '" + detail::ascii_lower(word) +
                 "' in " + store.name() + "; keeping the last vector");
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

inline float le_float(const unsigned char* bytes) {
  std::uint32_t bits;
  std::memcpy(&bits, bytes, 4);
  if constexpr (std::endian::native == std::endian::big)
    bits = ((bits & 0xFFu) << 24) | ((bits & 0xFF00u) << 8) | ((bits >> 8) & 0xFF00u) |
           (bits >> 24);
  return std::bit_cast<float>(bits);
}

}  // namespace embed_detail

// word2vec binary: "vocab_size dim\n", then per entry the word bytes, one
// space, and dim little-endian float32 values, optionally followed by '\n'.
inline EmbeddingStore parse_binary_w2v(std::istream& in, const EmbeddingLoadOptions& opts) {
  using namespace embed_detail;
  std::string header;
  if (!std::getline(in, header)) throw ParseError("binary embeddings: missing header");
  std::size_t offset = header.size() + 1;
  auto fields = detail::split_ws(header);
  std::optional<std::uint64_t> count, dim;
  if (fields.size() == 2) {
    count = parse_uint(fields[0]);
    dim = parse_uint(fields[1]);
  }
  if (!count || !dim || *dim == 0)
    throw ParseError("binary embeddings: header must be 'vocab_size dim', got '" +
                     header + "'");

  EmbeddingStore store(*dim, opts.name);
  std::vector<unsigned char> payload(*dim * 4);
  std::vector<double> vec(*dim);
  std::string word;
  for (std::uint64_t entry = 0; entry < *count; ++entry) {
    word.clear();
    for (;;) {
      int c = in.get();
      if (c == std::char_traits<char>::eof())
        throw TruncatedError("binary embeddings: unexpected end of file in entry " +
                                 std::to_string(entry + 1) + " at byte offset " +
                                 std::to_string(offset),
                             offset);
      ++offset;
      if (c == ' ') {
        if (word.empty()) continue;
        break;
      }
      if (c == '\n' && word.empty()) continue;
      word.push_back(static_cast<char>(c));
      if (word.size() > kMaxWordBytes)
        throw ParseError("binary embeddings: word longer than " +
                             std::to_string(kMaxWordBytes) + " bytes at byte offset " +
                             std::to_string(offset),
                         entry + 1);
    }
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got != payload.size())
      throw TruncatedError("binary embeddings: vector for '" + word +
                               "' truncated at byte offset " +
                               std::to_string(offset + got),
                           offset + got);
    offset += got;
    if (!keep(opts, word)) continue;
    for (std::size_t i = 0; i < *dim; ++i) vec[i] = le_float(&payload[i * 4]);
    if (!store.insert(word, vec)) note_duplicate(store, word);
  }
  return store;
}

// word2vec text: optional "vocab_size dim" header, then "word v1 ... vK".
// Without a header the dimension comes from the first row.
inline EmbeddingStore parse_text_w2v(std::istream& in, const EmbeddingLoadOptions& opts) {
  using namespace embed_detail;
  std::optional<EmbeddingStore> store;
  std::vector<double> vec;
  std::string line;
  std::size_t row = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++row;
    detail::strip_cr(line);
    auto fields = detail::split_ws(line);
    if (fields.empty()) continue;
    if (first) {
      first = false;
      if (fields.size() == 2) {
        auto n = parse_uint(fields[0]);
        auto d = parse_uint(fields[1]);
        if (n && d) {
          if (*d == 0) throw ParseError("text embeddings: header dimension is 0", row);
          store.emplace(*d, opts.name);
          continue;
        }
      }
    }
    if (!store) {
      if (fields.size() < 2)
        throw ParseError("text embeddings: row " + std::to_string(row) + " has no values",
                         row);
      store.emplace(fields.size() - 1, opts.name);
    }
    const std::size_t dim = store->dimension();
    if (fields.size() - 1 != dim)
      throw ParseError("text embeddings: row " + std::to_string(row) + " has " +
                           std::to_string(fields.size() - 1) + " values, expected " +
                           std::to_string(dim),
                       row);
    if (!keep(opts, fields[0])) continue;
    vec.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      auto f = fields[i + 1];
      auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), vec[i]);
      if (ec != std::errc() || p != f.data() + f.size())
        throw ParseError("text embeddings: row " + std::to_string(row) +
                             ": bad number '" + std::string(f) + "'",
                         row);
    }
    if (!store->insert(fields[0], vec)) note_duplicate(*store, fields[0]);
  }
  if (!store) throw ParseError("text embeddings: file is empty");
  return std::move(*store);
}

inline EmbeddingStore load_embeddings(const std::filesystem::path& path,
                                      EmbeddingLoadOptions opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open embeddings " + path.string());
  if (opts.name.empty()) opts.name = path.filename().string();
  return opts.format == EmbeddingFormat::BinaryW2v ? parse_binary_w2v(in, opts)
                                                   : parse_text_w2v(in, opts);
}

// Shortest round-trip decimal form of every value.
inline void write_text_w2v(const EmbeddingStore& store, std::ostream& out) {
  out << store.size() << ' ' << store.dimension() << '\n';
  char buf[32];
  for (const auto& w : store.words()) {
    out << w;
    const auto vec = *store.lookup(w);
    for (double v : vec) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(p - buf));
    }
    out << '\n';
  }
}

inline void write_binary_w2v(const EmbeddingStore& store, std::ostream& out) {
  out << store.size() << ' ' << store.dimension() << '\n';
  for (const auto& w : store.words()) {
    out << w << ' ';
    const auto vec = *store.lookup(w);
    for (double v : vec) {
      auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
      unsigned char le[4] = {static_cast<unsigned char>(bits),
                             static_cast<unsigned char>(bits >> 8),
                             static_cast<unsigned char>(bits >> 16),
                             static_cast<unsigned char>(bits >> 24)};
      out.write(reinterpret_cast<const char*>(le), 4);
    }
    out << '\n';
  }
}

}  // namespace entailkit
