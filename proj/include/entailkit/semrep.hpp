#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "entailkit/embedstore.hpp"
#include "entailkit/textprep.hpp"

namespace entailkit {

enum class Strategy { Thresholded, Plain, Sum };

struct SentenceVector {
  std::vector<double> values;
  std::size_t in_vocab_count = 0;
  Strategy strategy = Strategy::Thresholded;
};

// Per-word gate statistics over the K elements of one word vector.
struct ThresholdStats {
  double mean = 0.0;
  double std = 0.0;  // population (divide by K)
  double alpha = 0.0;
};

inline ThresholdStats threshold_stats(std::span<const double> x) {
  ThresholdStats s;
  if (x.empty()) return s;
  const double k = static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += v;
  s.mean = sum / k;
  double sq = 0.0;
  for (double v : x) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / k);
  s.alpha = s.mean + s.std;
  return s;
}

// Thresholded accumulation. The first in-vocabulary word is added whole;
// every later word x contributes x[i] only where |acc[i] - x[i]| >= alpha(x).
// Order-dependent by construction; repeated tokens are processed each time.
inline SentenceVector represent_thresholded(const TokenList& tokens,
                                            const EmbeddingStore& store) {
  SentenceVector out{std::vector<double>(store.dimension(), 0.0), 0,
                     Strategy::Thresholded};
  auto& acc = out.values;
  for (const auto& tok : tokens) {
    auto x = store.lookup(tok);
    if (!x) continue;
    if (out.in_vocab_count++ == 0) {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += (*x)[i];
      continue;
    }
    const double alpha = threshold_stats(*x).alpha;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (std::abs(acc[i] - (*x)[i]) >= alpha) acc[i] += (*x)[i];
  }
  return out;
}

// Sum of all in-vocabulary word vectors.
inline SentenceVector represent_sum(const TokenList& tokens, const EmbeddingStore& store) {
  SentenceVector out{std::vector<double>(store.dimension(), 0.0), 0, Strategy::Sum};
  for (const auto& tok : tokens) {
    auto x = store.lookup(tok);
    if (!x) continue;
    ++out.in_vocab_count;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += (*x)[i];
  }
  return out;
}

// Element-wise mean of the in-vocabulary word vectors; zeros when none.
inline SentenceVector represent_plain(const TokenList& tokens, const EmbeddingStore& store) {
  SentenceVector out = represent_sum(tokens, store);
  out.strategy = Strategy::Plain;
  if (out.in_vocab_count > 0) {
    const double n = static_cast<double>(out.in_vocab_count);
    for (auto& v : out.values) v /= n;
  }
  return out;
}

inline SentenceVector represent(const TokenList& tokens, const EmbeddingStore& store,
                                Strategy strategy) {
  switch (strategy) {
    case Strategy::Thresholded:
      return represent_thresholded(tokens, store);
    case Strategy::Plain:
      return represent_plain(tokens, store);
    case Strategy::Sum:
      return represent_sum(tokens, store);
  }
  return {};
}

}  // namespace entailkit
