#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "entailkit/corpus.hpp"
#include "entailkit/detail/atomic_file.hpp"
#include "entailkit/detail/parallel.hpp"
#include "entailkit/embedstore.hpp"
#include "entailkit/error.hpp"
#include "entailkit/features.hpp"
#include "entailkit/learners/ensemble.hpp"
#include "entailkit/learners/model.hpp"
#include "entailkit/textprep.hpp"

namespace entailkit {

// Rows are true labels, columns predicted labels, both in label order.
struct ConfusionMatrix {
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> counts{};

  void add(EntailmentLabel truth, EntailmentLabel predicted) {
    ++counts[label_index(truth)][label_index(predicted)];
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& row : counts)
      for (auto c : row) t += c;
    return t;
  }
  std::size_t trace() const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < kNumLabels; ++i) t += counts[i][i];
    return t;
  }
  std::size_t row_sum(EntailmentLabel truth) const {
    std::size_t t = 0;
    for (auto c : counts[label_index(truth)]) t += c;
    return t;
  }
  std::size_t column_sum(EntailmentLabel predicted) const {
    std::size_t t = 0;
    for (const auto& row : counts) t += row[label_index(predicted)];
    return t;
  }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

inline double accuracy(const ConfusionMatrix& cm) {
  const auto total = cm.total();
  if (total == 0) throw Error("accuracy of an empty confusion matrix");
  return static_cast<double>(cm.trace()) / static_cast<double>(total);
}

struct LearnerResult {
  std::string name;
  double accuracy = 0.0;
  ConfusionMatrix confusion;
};

struct StoreInfo {
  std::string name;
  std::size_t dimension = 0;
  std::size_t vocabulary = 0;
  double coverage = 0.0;  // fraction of corpus token occurrences found
};

struct ExperimentReport {
  FeatureSet config = FeatureSet::HandThr;
  std::uint64_t seed = 0;
  double train_ratio = 0.75;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::vector<std::string> schema;
  std::vector<LearnerResult> learners;  // svm, knn, rf, nb, ensemble
  StoreInfo word_store;
  std::optional<StoreInfo> sts_store;
  double seconds = 0.0;  // wall time; text report only

  const LearnerResult& learner(std::string_view name) const {
    for (const auto& l : learners)
      if (l.name == name) return l;
    throw Error("report has no learner '" + std::string(name) + "'");
  }
};

inline constexpr std::string_view kEnsembleName = "ensemble";

// Fraction of token occurrences with a vector in `store`.
inline double token_coverage(const std::vector<PreparedPair>& pairs,
                             const EmbeddingStore& store) {
  std::size_t total = 0, found = 0;
  auto count = [&](const TokenList& toks) {
    for (const auto& t : toks) {
      ++total;
      found += store.contains(t);
    }
  };
  for (const auto& p : pairs) {
    count(p.text);
    count(p.hypothesis);
  }
  return total == 0 ? 0.0 : static_cast<double>(found) / static_cast<double>(total);
}

// Everything an experiment needs besides the feature set and seed.
struct ExperimentContext {
  std::vector<LabeledPair> corpus;
  PrepConfig prep = PrepConfig::builtin();
  const EmbeddingStore* words = nullptr;
  const EmbeddingStore* sts = nullptr;
  Hyperparams hyper;
  double train_ratio = 0.75;
};

// Sorted, de-duplicated preprocessed vocabulary of a corpus.
inline std::vector<std::string> corpus_vocabulary(const std::vector<LabeledPair>& pairs,
                                                  const PrepConfig& prep) {
  std::set<std::string> vocab;
  for (const auto& p : pairs) {
    for (auto& t : preprocess(p.text, prep)) vocab.insert(std::move(t));
    for (auto& t : preprocess(p.hypothesis, prep)) vocab.insert(std::move(t));
  }
  return {vocab.begin(), vocab.end()};
}

inline std::vector<PreparedPair> prepare_all(const std::vector<LabeledPair>& pairs,
                                             const PrepConfig& prep) {
  std::vector<PreparedPair> out(pairs.size());
  detail::parallel_for(pairs.size(),
                       [&](std::size_t i) { out[i] = prepare_pair(pairs[i], prep); });
  return out;
}

inline Dataset extract_features(const std::vector<PreparedPair>& pairs,
                                const std::vector<EntailmentLabel>& labels, FeatureSet set,
                                const FeatureStores& stores) {
  require_stores(set, stores);
  std::vector<FeatureVector> rows(pairs.size());
  detail::parallel_for(pairs.size(),
                       [&](std::size_t i) { rows[i] = assemble(pairs[i], set, stores); });
  Dataset ds;
  ds.schema = feature_schema(set, stores.words->dimension());
  ds.labels = labels;
  for (const auto& r : rows) ds.features.append_row(r.values);
  return ds;
}

namespace harness_detail {

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace harness_detail

// split(seed) -> features -> fit SVM, KNN, RF, NB -> predict test -> report.
// Seed derivation: the split uses `seed`, the random forest `seed + 1`.
inline ExperimentReport run_experiment(const ExperimentContext& ctx, FeatureSet set,
                                       std::uint64_t seed) {
  using harness_detail::stage;
  const auto started = std::chrono::steady_clock::now();
  const FeatureStores stores{ctx.words, ctx.sts};
  stage("configure", [&] {
    require_stores(set, stores);
    ctx.hyper.validate();
    return 0;
  });

  const auto split =
      stage("split", [&] { return split_corpus(ctx.corpus, ctx.train_ratio, seed); });

  auto build = [&](const std::vector<LabeledPair>& part) {
    std::vector<EntailmentLabel> labels;
    for (const auto& p : part) labels.push_back(p.label);
    auto prepared = prepare_all(part, ctx.prep);
    return extract_features(prepared, labels, set, stores);
  };
  const Dataset train = stage("features", [&] { return build(split.train); });
  const Dataset test = stage("features", [&] { return build(split.test); });

  EnsembleModel ensemble;
  for (auto kind : kAllLearners) {
    const std::string name = "fit:" + std::string(learner_name(kind));
    ensemble.members.push_back(
        stage(name.c_str(), [&] { return fit(kind, ctx.hyper, train, seed + 1); }));
  }

  ExperimentReport report;
  report.config = set;
  report.seed = seed;
  report.train_ratio = ctx.train_ratio;
  report.train_size = train.size();
  report.test_size = test.size();
  report.schema = train.schema;

  std::vector<ConfusionMatrix> cms(ensemble.members.size() + 1);
  stage("predict", [&] {
    std::vector<std::vector<EntailmentLabel>> votes(test.size());
    detail::parallel_for(test.size(), [&](std::size_t r) {
      votes[r] = ensemble.votes(test.features.row(r));
    });
    for (std::size_t r = 0; r < test.size(); ++r) {
      for (std::size_t m = 0; m < votes[r].size(); ++m) cms[m].add(test.labels[r], votes[r][m]);
      cms.back().add(test.labels[r], majority_vote(votes[r]));
    }
    return 0;
  });
  for (std::size_t m = 0; m < cms.size(); ++m) {
    LearnerResult lr;
    lr.name = m < kAllLearners.size() ? std::string(learner_name(kAllLearners[m]))
                                      : std::string(kEnsembleName);
    lr.confusion = cms[m];
    lr.accuracy = accuracy(cms[m]);
    report.learners.push_back(std::move(lr));
  }

  const auto all_prepared = prepare_all(ctx.corpus, ctx.prep);
  report.word_store = {ctx.words->name(), ctx.words->dimension(), ctx.words->size(),
                       token_coverage(all_prepared, *ctx.words)};
  if (!is_emdv_set(set) && ctx.sts)
    report.sts_store = StoreInfo{ctx.sts->name(), ctx.sts->dimension(), ctx.sts->size(),
                                 token_coverage(all_prepared, *ctx.sts)};
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const ExperimentReport& r) {
  using nlohmann::ordered_json;
  auto store_json = [](const StoreInfo& s) {
    return ordered_json{{"name", s.name},
                        {"dimension", s.dimension},
                        {"vocabulary", s.vocabulary},
                        {"coverage", s.coverage}};
  };
  ordered_json j;
  j["config"] = std::string(feature_set_name(r.config));
  j["seed"] = r.seed;
  j["train_ratio"] = r.train_ratio;
  j["train_size"] = r.train_size;
  j["test_size"] = r.test_size;
  j["features"] = r.schema.size();
  j["label_order"] = ordered_json::array();
  for (auto l : kAllLabels) j["label_order"].push_back(std::string(label_name(l)));
  j["embeddings"]["words"] = store_json(r.word_store);
  if (r.sts_store) j["embeddings"]["sts"] = store_json(*r.sts_store);
  j["learners"] = ordered_json::array();
  for (const auto& l : r.learners) {
    ordered_json cm = ordered_json::array();
    for (const auto& row : l.confusion.counts) cm.push_back(row);
    j["learners"].push_back(
        ordered_json{{"name", l.name}, {"accuracy", l.accuracy}, {"confusion", cm}});
  }
  return j;
}

inline ExperimentReport report_from_json(const nlohmann::ordered_json& j) {
  ExperimentReport r;
  auto set = parse_feature_set(j.at("config").get<std::string>());
  if (!set) throw ParseError("report: unknown config");
  r.config = *set;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.train_ratio = j.at("train_ratio").get<double>();
  r.train_size = j.at("train_size").get<std::size_t>();
  r.test_size = j.at("test_size").get<std::size_t>();
  r.schema = feature_schema(r.config, j.at("features").get<std::size_t>());
  for (const auto& l : j.at("learners")) {
    LearnerResult lr;
    lr.name = l.at("name").get<std::string>();
    lr.accuracy = l.at("accuracy").get<double>();
    const auto& cm = l.at("confusion");
    for (std::size_t i = 0; i < kNumLabels; ++i)
      for (std::size_t k = 0; k < kNumLabels; ++k)
        lr.confusion.counts[i][k] = cm.at(i).at(k).get<std::size_t>();
    r.learners.push_back(std::move(lr));
  }
  auto store = [](const nlohmann::ordered_json& s) {
    return StoreInfo{s.at("name").get<std::string>(), s.at("dimension").get<std::size_t>(),
                     s.at("vocabulary").get<std::size_t>(), s.at("coverage").get<double>()};
  };
  r.word_store = store(j.at("embeddings").at("words"));
  if (j.at("embeddings").contains("sts")) r.sts_store = store(j["embeddings"]["sts"]);
  return r;
}

inline std::string to_text(const ExperimentReport& r) {
  std::ostringstream out;
  char buf[128];
  out << "Experiment " << feature_set_name(r.config) << "  (seed " << r.seed << ", train "
      << r.train_size << " / test " << r.test_size << ", " << r.schema.size()
      << " features)\n\n";
  out << "Embeddings: " << r.word_store.name << "  dim " << r.word_store.dimension
      << "  vocab " << r.word_store.vocabulary;
  std::snprintf(buf, sizeof buf, "  token coverage %.4f\n", r.word_store.coverage);
  out << buf;
  if (r.sts_store) {
    out << "STS store:  " << r.sts_store->name << "  dim " << r.sts_store->dimension
        << "  vocab " << r.sts_store->vocabulary;
    std::snprintf(buf, sizeof buf, "  token coverage %.4f\n", r.sts_store->coverage);
    out << buf;
  }
  out << "\n+---------------+------------+----------+\n"
      << "| Algorithm     | Features   | Accuracy |\n"
      << "+---------------+------------+----------+\n";
  for (const auto& l : r.learners) {
    std::snprintf(buf, sizeof buf, "| %-13s | %-10s | %8.4f |\n", l.name.c_str(),
                  std::string(feature_set_name(r.config)).c_str(), l.accuracy);
    out << buf;
  }
  out << "+---------------+------------+----------+\n";
  for (const auto& l : r.learners) {
    out << "\nConfusion matrix: " << l.name << " (rows true, columns predicted)\n";
    std::snprintf(buf, sizeof buf, "%-15s %10s %10s %10s\n", "", "Neutral", "Entail",
                  "Contradict");
    out << buf;
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      std::snprintf(buf, sizeof buf, "%-15s %10zu %10zu %10zu\n",
                    std::string(label_name(label_from_index(i))).c_str(),
                    l.confusion.counts[i][0], l.confusion.counts[i][1],
                    l.confusion.counts[i][2]);
      out << buf;
    }
  }
  std::snprintf(buf, sizeof buf, "\nWall time: %.2f s\n", r.seconds);
  out << buf;
  return out.str();
}

// Writes <dir>/report.json and <dir>/report.txt atomically.
inline void write_report(const ExperimentReport& r, const std::filesystem::path& dir) {
  detail::write_file_atomic(dir / "report.json", to_json(r).dump(2) + "\n");
  detail::write_file_atomic(dir / "report.txt", to_text(r));
}

}  // namespace entailkit
