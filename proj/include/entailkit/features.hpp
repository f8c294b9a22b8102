#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entailkit/corpus.hpp"
#include "entailkit/embedstore.hpp"
#include "entailkit/error.hpp"
#include "entailkit/semrep.hpp"
#include "entailkit/textprep.hpp"

namespace entailkit {

enum class FeatureSet { EmdvThr, EmdvPlain, HandThr, HandPlain };

inline constexpr std::array<FeatureSet, 4> kAllFeatureSets = {
    FeatureSet::EmdvThr, FeatureSet::EmdvPlain, FeatureSet::HandThr,
    FeatureSet::HandPlain};

inline constexpr std::string_view feature_set_name(FeatureSet s) noexcept {
  switch (s) {
    case FeatureSet::EmdvThr:
      return "emdv-thr";
    case FeatureSet::EmdvPlain:
      return "emdv-plain";
    case FeatureSet::HandThr:
      return "hand-thr";
    case FeatureSet::HandPlain:
      return "hand-plain";
  }
  return "?";
}

inline std::optional<FeatureSet> parse_feature_set(std::string_view s) {
  for (auto f : kAllFeatureSets)
    if (s == feature_set_name(f)) return f;
  return std::nullopt;
}

inline constexpr bool is_emdv_set(FeatureSet s) noexcept {
  return s == FeatureSet::EmdvThr || s == FeatureSet::EmdvPlain;
}

inline constexpr bool is_thresholded_set(FeatureSet s) noexcept {
  return s == FeatureSet::EmdvThr || s == FeatureSet::HandThr;
}

struct FeatureVector {
  std::vector<double> values;
  std::vector<std::string> schema;
};

// ---------------------------------------------------------------------------
// Vector features

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionError("sentence vectors differ in dimension: " + std::to_string(a) +
                         " vs " + std::to_string(b));
}

// Signed element-wise difference text - hypothesis.
inline std::vector<double> emdv(std::span<const double> text, std::span<const double> hyp) {
  require_same_dim(text.size(), hyp.size());
  std::vector<double> out(text.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = text[i] - hyp[i];
  return out;
}

// Mean absolute element-wise difference.
inline double avg_emdv(std::span<const double> text, std::span<const double> hyp) {
  require_same_dim(text.size(), hyp.size());
  if (text.empty()) throw DimensionError("avg_emdv needs at least one dimension");
  double sum = 0.0;
  for (std::size_t i = 0; i < text.size(); ++i) sum += std::abs(text[i] - hyp[i]);
  return sum / static_cast<double>(text.size());
}

// Cosine similarity clamped to [-1, 1]; 0 when either vector is all zeros.
inline double cosine(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size());
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

// ---------------------------------------------------------------------------
// Lexical features

// |T ∩ H| / |T ∪ H| over unique tokens; 0 when both are empty.
inline double jaccard(const TokenList& text, const TokenList& hyp) {
  std::set<std::string_view> t(text.begin(), text.end());
  std::set<std::string_view> h(hyp.begin(), hyp.end());
  std::size_t common = 0;
  for (auto w : t) common += h.count(w);
  const std::size_t uni = t.size() + h.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

struct BowVectors {
  std::vector<std::string> vocab;  // lexicographic
  std::vector<double> text;
  std::vector<double> hyp;
};

// Term-frequency vectors over the pair's own sorted union vocabulary.
inline BowVectors bow_vectors(const TokenList& text, const TokenList& hyp) {
  std::map<std::string_view, std::pair<double, double>> counts;
  for (const auto& w : text) counts[w].first += 1.0;
  for (const auto& w : hyp) counts[w].second += 1.0;
  BowVectors out;
  for (const auto& [w, c] : counts) {
    out.vocab.emplace_back(w);
    out.text.push_back(c.first);
    out.hyp.push_back(c.second);
  }
  return out;
}

inline double bow_cosine(const TokenList& text, const TokenList& hyp) {
  auto bow = bow_vectors(text, hyp);
  return std::max(0.0, cosine(bow.text, bow.hyp));
}

// ---------------------------------------------------------------------------
// Embedding similarity

// Cosine between the summed word vectors of the two sentences.
inline double sts(const TokenList& text, const TokenList& hyp, const EmbeddingStore& store) {
  return cosine(represent_sum(text, store).values, represent_sum(hyp, store).values);
}

// ---------------------------------------------------------------------------
// Assembly

struct FeatureStores {
  const EmbeddingStore* words = nullptr;  // drives EMDV and avg_emdv
  const EmbeddingStore* sts = nullptr;    // drives the STS feature
};

struct PreparedPair {
  TokenList text;
  TokenList hypothesis;
};

inline PreparedPair prepare_pair(const LabeledPair& pair, const PrepConfig& prep) {
  return {preprocess(pair.text, prep), preprocess(pair.hypothesis, prep)};
}

inline std::vector<std::string> feature_schema(FeatureSet set, std::size_t dim) {
  if (is_emdv_set(set)) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names.push_back("emdv_" + std::to_string(i));
    return names;
  }
  return {"avg_emdv", "bow", "jac", "sts"};
}

inline void require_stores(FeatureSet set, const FeatureStores& stores) {
  if (!stores.words)
    throw ConfigError(std::string("feature set ") + std::string(feature_set_name(set)) +
                      " needs a word embedding store");
  if (!is_emdv_set(set) && !stores.sts)
    throw ConfigError(std::string("feature set ") + std::string(feature_set_name(set)) +
                      " needs an STS embedding store");
}

inline FeatureVector assemble(const PreparedPair& pair, FeatureSet set,
                              const FeatureStores& stores) {
  require_stores(set, stores);
  const Strategy strategy =
      is_thresholded_set(set) ? Strategy::Thresholded : Strategy::Plain;
  const auto vt = represent(pair.text, *stores.words, strategy);
  const auto vh = represent(pair.hypothesis, *stores.words, strategy);

  FeatureVector fv;
  fv.schema = feature_schema(set, stores.words->dimension());
  if (is_emdv_set(set)) {
    fv.values = emdv(vt.values, vh.values);
  } else {
    fv.values = {avg_emdv(vt.values, vh.values), bow_cosine(pair.text, pair.hypothesis),
                 jaccard(pair.text, pair.hypothesis),
                 sts(pair.text, pair.hypothesis, *stores.sts)};
  }
  for (std::size_t i = 0; i < fv.values.size(); ++i)
    if (!std::isfinite(fv.values[i]))
      throw Error("feature " + fv.schema[i] + " is not finite");
  return fv;
}

inline FeatureVector assemble(const LabeledPair& pair, FeatureSet set,
                              const FeatureStores& stores, const PrepConfig& prep) {
  return assemble(prepare_pair(pair, prep), set, stores);
}

// CSV: header = schema + "label", 9 significant digits per value.
inline void write_feature_csv(std::ostream& out, const std::vector<std::string>& schema,
                              std::span<const FeatureVector> rows,
                              std::span<const EntailmentLabel> labels) {
  if (rows.size() != labels.size())
    throw Error("feature rows and labels differ in count");
  for (const auto& name : schema) out << name << ',';
  out << "label\n";
  char buf[32];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (double v : rows[r].values) {
      std::snprintf(buf, sizeof buf, "%.9g", v);
      out << buf << ',';
    }
    out << label_name(labels[r]) << '\n';
  }
}

}  // namespace entailkit
