#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entailkit/corpus.hpp"
#include "entailkit/embedstore.hpp"

namespace fixtures {

namespace fs = std::filesystem;
using entailkit::EntailmentLabel;
using entailkit::LabeledPair;

// A scratch directory removed when the object goes out of scope.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("entailkit-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Made-up words that no stopword list or lemma table touches.
inline std::vector<std::string> pseudo_words(std::size_t n) {
  std::vector<std::string> out;
  const std::string letters = "abcdefghijklmnoprstuvwyz";
  for (std::size_t i = 0; out.size() < n; ++i)
    out.push_back(std::string("xq") + letters[i / letters.size() % letters.size()] +
                  letters[i % letters.size()]);
  return out;
}

inline std::string corpus_tsv(const std::vector<LabeledPair>& pairs) {
  std::string s = "pair_ID\tsentence_A\tsentence_B\trelatedness_score\tentailment_judgment\n";
  for (const auto& p : pairs)
    s += p.id + '\t' + p.text + '\t' + p.hypothesis + "\t3.5\t" +
         std::string(entailkit::label_name(p.label)) + '\n';
  return s;
}

// Three-class corpus with a learnable signal: entailment drops one word,
// contradiction inserts "no" and swaps a word, neutral shares one word.
inline std::vector<LabeledPair> synthetic_corpus(std::size_t n, std::uint64_t seed,
                                                 std::size_t vocab = 40) {
  std::mt19937_64 rng(seed);
  const auto words = pseudo_words(vocab);
  auto pick = [&] { return words[rng() % words.size()]; };
  auto sentence = [&](std::size_t len) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(pick());
    return s;
  };
  auto join = [](const std::vector<std::string>& s) {
    std::string out;
    for (const auto& w : s) out += (out.empty() ? "" : " ") + w;
    return out + ".";
  };
  std::vector<LabeledPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    auto t = sentence(4 + rng() % 3);
    std::vector<std::string> h;
    EntailmentLabel label;
    switch (rng() % 3) {
      case 0:
        label = EntailmentLabel::Entailment;
        h = t;
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(rng() % h.size()));
        break;
      case 1:
        label = EntailmentLabel::Contradiction;
        h = t;
        h[rng() % h.size()] = pick();
        h.insert(h.begin() + 1, "no");
        break;
      default:
        label = EntailmentLabel::Neutral;
        h = sentence(4 + rng() % 3);
        h[0] = t[rng() % t.size()];
        break;
    }
    pairs.push_back({"p" + std::to_string(i + 1), join(t), join(h), label});
  }
  return pairs;
}

// Two classes, perfectly separable on every handcrafted feature: entailment
// pairs repeat the text, neutral pairs share no word.
inline std::vector<LabeledPair> separable_corpus() {
  const auto words = pseudo_words(60);
  std::vector<LabeledPair> pairs;
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t b = i * 3;
    std::string t = words[b] + " " + words[b + 1] + " " + words[b + 2];
    if (i % 2 == 0) {
      pairs.push_back({"s" + std::to_string(i), t, t, EntailmentLabel::Entailment});
    } else {
      const std::size_t o = (b + 30) % 60;
      std::string h = words[o] + " " + words[(o + 1) % 60] + " " + words[(o + 2) % 60];
      pairs.push_back({"s" + std::to_string(i), t, h, EntailmentLabel::Neutral});
    }
  }
  return pairs;
}

// Gaussian vectors for every pseudo word and for "no".
inline entailkit::EmbeddingStore random_store(std::size_t vocab, std::size_t dim,
                                              std::uint64_t seed,
                                              const std::string& name = "synthetic") {
  entailkit::EmbeddingStore store(dim, name);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto words = pseudo_words(vocab);
  words.push_back("no");
  for (const auto& w : words) {
    std::vector<double> v(dim);
    for (auto& e : v) e = static_cast<double>(static_cast<float>(gauss(rng)));
    store.insert(w, v);
  }
  return store;
}

inline std::string to_text_w2v(const entailkit::EmbeddingStore& store) {
  std::ostringstream out;
  entailkit::write_text_w2v(store, out);
  return out.str();
}

inline std::string to_binary_w2v(const entailkit::EmbeddingStore& store) {
  std::ostringstream out;
  entailkit::write_binary_w2v(store, out);
  return out.str();
}

}  // namespace fixtures
