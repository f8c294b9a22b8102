#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "entailkit/detail/random.hpp"
#include "entailkit/detail/strings.hpp"
#include "entailkit/error.hpp"
#include "entailkit/label.hpp"

namespace entailkit {

struct LabeledPair {
  std::string id;
  std::string text;
  std::string hypothesis;
  EntailmentLabel label;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

// Column names looked up in the TSV header. An empty `label` means "use the
// first of the known SICK label columns that is present".
struct CorpusFormat {
  std::string id = "pair_ID";
  std::string text = "sentence_A";
  std::string hypothesis = "sentence_B";
  std::string label;
};

// SemEval-2014 release files call it entailment_judgment; the full SICK.txt
// calls it entailment_label.
inline constexpr std::array<const char*, 2> kDefaultLabelColumns = {
    "entailment_judgment", "entailment_label"};

struct SplitCorpus {
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> test;
  std::uint64_t seed = 0;
};

inline std::array<std::size_t, kNumLabels> label_counts(
    const std::vector<LabeledPair>& pairs) {
  std::array<std::size_t, kNumLabels> counts{};
  for (const auto& p : pairs) ++counts[label_index(p.label)];
  return counts;
}

// Parses a SICK-style TSV document. Extra columns are ignored. Row numbers
// in errors are 1-based data rows (the header is not counted).
inline std::vector<LabeledPair> parse_corpus(std::istream& in,
                                             const CorpusFormat& format = {}) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("corpus is empty");
  detail::strip_cr(line);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

  const auto header = detail::split(line, '\t');
  auto column = [&](const std::string& name) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (detail::trim(header[i]) == name) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  auto require = [&](const std::string& name) {
    auto c = column(name);
    if (c < 0) throw ConfigError("corpus header has no column '" + name + "'");
    return static_cast<std::size_t>(c);
  };

  const std::size_t id_col = require(format.id);
  const std::size_t text_col = require(format.text);
  const std::size_t hyp_col = require(format.hypothesis);
  std::size_t label_col = 0;
  if (!format.label.empty()) {
    label_col = require(format.label);
  } else {
    std::ptrdiff_t found = -1;
    for (const char* name : kDefaultLabelColumns)
      if ((found = column(name)) >= 0) break;
    if (found < 0)
      throw ConfigError(std::string("corpus header has no column '") +
                        kDefaultLabelColumns[0] + "'");
    label_col = static_cast<std::size_t>(found);
  }
  const std::size_t needed = std::max({id_col, text_col, hyp_col, label_col}) + 1;

  std::vector<LabeledPair> pairs;
  std::unordered_set<std::string> seen;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    detail::strip_cr(line);
    if (detail::trim(line).empty()) continue;
    ++row;
    const auto cells = detail::split(line, '\t');
    if (cells.size() < needed)
      throw ParseError("row " + std::to_string(row) + ": expected at least " +
                           std::to_string(needed) + " columns, found " +
                           std::to_string(cells.size()),
                       row);
    LabeledPair p;
    p.id = std::string(detail::trim(cells[id_col]));
    p.text = std::string(detail::trim(cells[text_col]));
    p.hypothesis = std::string(detail::trim(cells[hyp_col]));
    auto raw_label = detail::trim(cells[label_col]);
    auto label = parse_label(raw_label);
    if (!label)
      throw ParseError("row " + std::to_string(row) + ": unknown label '" +
                           std::string(raw_label) + "'",
                       row);
    p.label = *label;
    if (p.text.empty() || p.hypothesis.empty())
      throw ParseError("row " + std::to_string(row) + ": empty sentence", row);
    if (!seen.insert(p.id).second)
      throw ParseError("row " + std::to_string(row) + ": duplicate id '" + p.id + "'",
                       row);
    pairs.push_back(std::move(p));
  }
  if (pairs.empty()) throw ParseError("corpus has a header but no data rows");
  return pairs;
}

inline std::vector<LabeledPair> load_corpus(const std::filesystem::path& path,
                                            const CorpusFormat& format = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus " + path.string());
  return parse_corpus(in, format);
}

// round-half-up of ratio * n
inline std::size_t train_size(std::size_t n, double ratio) {
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 0.5));
}

// Uniform shuffle driven only by `seed`, then the first round(ratio*N)
// shuffled pairs form the training partition.
inline SplitCorpus split_corpus(const std::vector<LabeledPair>& pairs, double ratio,
                                std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw ConfigError("train ratio must lie in (0, 1), got " + std::to_string(ratio));
  if (pairs.size() < 2) throw ConfigError("cannot split fewer than 2 pairs");
  const std::size_t n_train = train_size(pairs.size(), ratio);
  if (n_train == 0 || n_train == pairs.size())
    throw ConfigError("train ratio " + std::to_string(ratio) +
                      " leaves an empty partition for " +
                      std::to_string(pairs.size()) + " pairs");

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  detail::Rng rng(seed);
  detail::shuffle(std::span<std::size_t>(order), rng);

  SplitCorpus out;
  out.seed = seed;
  out.train.reserve(n_train);
  out.test.reserve(pairs.size() - n_train);
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < n_train ? out.train : out.test).push_back(pairs[order[i]]);
  return out;
}

}  // namespace entailkit
