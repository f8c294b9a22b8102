#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "entailkit/corpus.hpp"
#include "entailkit/detail/atomic_file.hpp"
#include "entailkit/embedstore.hpp"
#include "entailkit/evalharness.hpp"
#include "entailkit/features.hpp"
#include "entailkit/learners/hyperparams.hpp"
#include "entailkit/semrep.hpp"
#include "entailkit/textprep.hpp"

namespace entailkit {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Command { Prepare, Repr, Features, Experiment };

struct RunConfig {
  Command command = Command::Experiment;

  std::filesystem::path data;
  CorpusFormat format;
  double train_ratio = 0.75;
  std::uint64_t seed = 42;

  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> lemmas;

  std::filesystem::path embeddings;
  EmbeddingFormat embeddings_format = EmbeddingFormat::BinaryW2v;
  std::optional<std::filesystem::path> sts_embeddings;
  EmbeddingFormat sts_format = EmbeddingFormat::TextW2v;
  std::optional<std::filesystem::path> vocab_filter;
  bool filter_to_corpus = true;  // when no explicit filter file is given

  FeatureSet feature_set = FeatureSet::HandThr;
  std::vector<FeatureSet> configs;  // experiment runs, in order
  std::optional<std::filesystem::path> hyperparams_file;
  Hyperparams hyper;

  std::filesystem::path out;
  std::optional<std::filesystem::path> vocab_out;

  std::string sentence;
  Strategy strategy = Strategy::Thresholded;
};

// Thrown by parse_args when the process should exit without running a
// command: --help/--version (code 0) or a usage error (non-zero).
class CliExit : public Error {
 public:
  CliExit(int code, std::string text)
      : Error(text), code_(code), text_(std::move(text)) {}
  int code() const noexcept { return code_; }
  const std::string& text() const noexcept { return text_; }

 private:
  int code_;
  std::string text_;
};

namespace cli_detail {

inline EmbeddingFormat parse_format(const std::string& s) {
  return s == "txt" ? EmbeddingFormat::TextW2v : EmbeddingFormat::BinaryW2v;
}

}  // namespace cli_detail

inline RunConfig parse_args(int argc, const char* const* argv) {
  using cli_detail::parse_format;
  RunConfig cfg;
  CLI::App app{"entailkit: textual entailment with thresholded sentence embeddings",
               "entailkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string data, embeddings, emb_fmt = "bin", sts_path, sts_fmt = "txt", vocab_filter,
                                stopwords, lemmas, hyperparams, out, vocab_out;
  std::string set_name = "hand-thr", config_name = "hand-thr", strategy = "thr";
  bool no_vocab_filter = false;

  auto corpus_flags = [&](CLI::App* sub, bool required) {
    sub->add_option("--data", data, "SICK-style TSV corpus")->required(required);
    sub->add_option("--train-ratio", cfg.train_ratio, "training fraction in (0,1)")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "master random seed")->capture_default_str();
    sub->add_option("--col-id", cfg.format.id, "pair id column")->capture_default_str();
    sub->add_option("--col-text", cfg.format.text, "text column")->capture_default_str();
    sub->add_option("--col-hyp", cfg.format.hypothesis, "hypothesis column")
        ->capture_default_str();
    sub->add_option("--col-label", cfg.format.label,
                    "label column (default: entailment_judgment or entailment_label)");
  };
  auto prep_flags = [&](CLI::App* sub) {
    sub->add_option("--stopwords", stopwords, "stopword list, one word per line")
        ->check(CLI::ExistingFile);
    sub->add_option("--lemmas", lemmas, "lemma table, surface<TAB>lemma per line")
        ->check(CLI::ExistingFile);
  };
  auto embed_flags = [&](CLI::App* sub) {
    sub->add_option("--embeddings", embeddings, "word2vec embeddings")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--embeddings-format", emb_fmt, "bin or txt")
        ->check(CLI::IsMember({"bin", "txt"}))
        ->capture_default_str();
    auto* filter = sub->add_option("--vocab-filter", vocab_filter,
                                   "only load words listed in this file")
                       ->check(CLI::ExistingFile);
    auto* nofilter = sub->add_flag("--no-vocab-filter", no_vocab_filter,
                                   "load the whole embedding file");
    filter->excludes(nofilter);
  };
  auto sts_flags = [&](CLI::App* sub) {
    sub->add_option("--sts-embeddings", sts_path,
                    "embeddings for the STS feature (default: --embeddings)")
        ->check(CLI::ExistingFile);
    sub->add_option("--sts-format", sts_fmt, "bin or txt")
        ->check(CLI::IsMember({"bin", "txt"}))
        ->capture_default_str();
  };

  auto* prepare = app.add_subcommand("prepare", "corpus statistics and vocabulary");
  corpus_flags(prepare, true);
  prep_flags(prepare);
  prepare->add_option("--vocab-out", vocab_out, "write the preprocessed vocabulary");

  auto* repr = app.add_subcommand("repr", "show the sentence vector of one sentence");
  repr->add_option("--sentence", cfg.sentence, "raw sentence")->required();
  repr->add_option("--strategy", strategy, "thr or plain")
      ->check(CLI::IsMember({"thr", "plain"}))
      ->capture_default_str();
  prep_flags(repr);
  embed_flags(repr);

  auto* features = app.add_subcommand("features", "dump per-pair features as CSV");
  corpus_flags(features, true);
  prep_flags(features);
  embed_flags(features);
  sts_flags(features);
  features->add_option("--set", set_name, "emdv-thr, emdv-plain, hand-thr or hand-plain")
      ->check(CLI::IsMember({"emdv-thr", "emdv-plain", "hand-thr", "hand-plain"}))
      ->capture_default_str();
  features->add_option("--out", out, "CSV output path")->required();

  auto* experiment = app.add_subcommand("experiment", "train, evaluate and report");
  corpus_flags(experiment, true);
  prep_flags(experiment);
  embed_flags(experiment);
  sts_flags(experiment);
  experiment
      ->add_option("--config", config_name,
                   "emdv-thr, emdv-plain, hand-thr, hand-plain or all")
      ->check(CLI::IsMember({"emdv-thr", "emdv-plain", "hand-thr", "hand-plain", "all"}))
      ->capture_default_str();
  experiment->add_option("--hyperparams", hyperparams, "key = value hyperparameter file")
      ->check(CLI::ExistingFile);
  out = "results";
  experiment->add_option("--out", out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    const int code = app.exit(e, os, es) == 0 ? 0 : 2;
    throw CliExit(code, code == 0 ? os.str() : es.str());
  }

  if (*prepare) cfg.command = Command::Prepare;
  if (*repr) cfg.command = Command::Repr;
  if (*features) cfg.command = Command::Features;
  if (*experiment) cfg.command = Command::Experiment;

  if (!(cfg.train_ratio > 0.0 && cfg.train_ratio < 1.0))
    throw CliExit(2, "--train-ratio must lie in (0, 1), got " +
                         std::to_string(cfg.train_ratio) + "\n" + app.help());

  cfg.data = data;
  cfg.embeddings = embeddings;
  cfg.embeddings_format = parse_format(emb_fmt);
  cfg.sts_format = parse_format(sts_fmt);
  if (!sts_path.empty()) cfg.sts_embeddings = sts_path;
  if (!vocab_filter.empty()) cfg.vocab_filter = vocab_filter;
  cfg.filter_to_corpus = !no_vocab_filter;
  if (!stopwords.empty()) cfg.stopwords = stopwords;
  if (!lemmas.empty()) cfg.lemmas = lemmas;
  if (!vocab_out.empty()) cfg.vocab_out = vocab_out;
  cfg.out = out;
  cfg.strategy = strategy == "plain" ? Strategy::Plain : Strategy::Thresholded;
  cfg.feature_set = *parse_feature_set(set_name);
  if (config_name == "all")
    cfg.configs.assign(kAllFeatureSets.begin(), kAllFeatureSets.end());
  else
    cfg.configs = {*parse_feature_set(config_name)};
  if (!hyperparams.empty()) {
    cfg.hyperparams_file = hyperparams;
    try {
      cfg.hyper = load_hyperparams(hyperparams);
    } catch (const ConfigError& e) {
      throw CliExit(2, std::string(e.what()) + "\n");
    }
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Commands

namespace cli_detail {

inline PrepConfig load_prep(const RunConfig& cfg) {
  PrepConfig prep = PrepConfig::builtin();
  if (cfg.stopwords) prep.stopwords = load_stopwords(*cfg.stopwords);
  if (cfg.lemmas) prep.lemmas = load_lemmas(*cfg.lemmas);
  return prep;
}

inline std::optional<std::unordered_set<std::string>> word_filter(
    const RunConfig& cfg, const std::vector<std::string>* corpus_vocab) {
  if (cfg.vocab_filter) {
    auto words = load_stopwords(*cfg.vocab_filter);  // same one-word-per-line format
    return words;
  }
  if (cfg.filter_to_corpus && corpus_vocab)
    return std::unordered_set<std::string>(corpus_vocab->begin(), corpus_vocab->end());
  return std::nullopt;
}

struct Stores {
  EmbeddingStore words;
  std::optional<EmbeddingStore> sts;
  const EmbeddingStore* sts_ptr() const { return sts ? &*sts : &words; }
};

inline Stores load_stores(const RunConfig& cfg, const std::vector<std::string>* vocab,
                          bool need_sts) {
  Stores s;
  auto filter = word_filter(cfg, vocab);
  s.words = load_embeddings(cfg.embeddings, {cfg.embeddings_format, filter, {}});
  if (need_sts && cfg.sts_embeddings)
    s.sts = load_embeddings(*cfg.sts_embeddings, {cfg.sts_format, filter, {}});
  return s;
}

}  // namespace cli_detail

inline int run_prepare(const RunConfig& cfg, std::ostream& out) {
  const auto prep = cli_detail::load_prep(cfg);
  const auto pairs = load_corpus(cfg.data, cfg.format);
  const auto counts = label_counts(pairs);
  const auto vocab = corpus_vocabulary(pairs, prep);
  out << "pairs " << pairs.size() << '\n';
  for (auto l : kAllLabels) out << label_name(l) << ' ' << counts[label_index(l)] << '\n';
  out << "vocabulary " << vocab.size() << '\n';
  out << "train " << train_size(pairs.size(), cfg.train_ratio) << " test "
      << pairs.size() - train_size(pairs.size(), cfg.train_ratio) << '\n';
  if (cfg.vocab_out) {
    std::string text;
    for (const auto& w : vocab) text += w + '\n';
    detail::write_file_atomic(*cfg.vocab_out, text);
    out << "wrote " << cfg.vocab_out->string() << '\n';
  }
  return 0;
}

inline int run_repr(const RunConfig& cfg, std::ostream& out) {
  const auto prep = cli_detail::load_prep(cfg);
  const auto tokens = preprocess(cfg.sentence, prep);
  auto filter = cli_detail::word_filter(cfg, &tokens);
  const auto store =
      load_embeddings(cfg.embeddings, {cfg.embeddings_format, std::move(filter), {}});
  const auto v = represent(tokens, store, cfg.strategy);
  out << "tokens " << join(tokens) << '\n';
  out << "in_vocab_count " << v.in_vocab_count << '\n';
  out << "values";
  char buf[32];
  for (std::size_t i = 0; i < std::min<std::size_t>(8, v.values.size()); ++i) {
    std::snprintf(buf, sizeof buf, " %.9g", v.values[i]);
    out << buf;
  }
  out << '\n';
  return 0;
}

inline int run_features(const RunConfig& cfg, std::ostream& out) {
  const auto prep = cli_detail::load_prep(cfg);
  const auto pairs = load_corpus(cfg.data, cfg.format);
  const auto vocab = corpus_vocabulary(pairs, prep);
  const auto stores = cli_detail::load_stores(cfg, &vocab, !is_emdv_set(cfg.feature_set));
  const FeatureStores fs{&stores.words, stores.sts_ptr()};
  std::vector<EntailmentLabel> labels;
  for (const auto& p : pairs) labels.push_back(p.label);
  const auto ds = extract_features(prepare_all(pairs, prep), labels, cfg.feature_set, fs);
  std::vector<FeatureVector> rows(ds.size());
  for (std::size_t r = 0; r < ds.size(); ++r)
    rows[r] = {{ds.features.row(r).begin(), ds.features.row(r).end()}, {}};
  std::ostringstream csv;
  write_feature_csv(csv, ds.schema, rows, labels);
  detail::write_file_atomic(cfg.out, csv.str());
  out << "wrote " << rows.size() << " rows x " << ds.schema.size() << " features to "
      << cfg.out.string() << '\n';
  return 0;
}

inline int run_experiment_command(const RunConfig& cfg, std::ostream& out) {
  ExperimentContext ctx;
  ctx.prep = cli_detail::load_prep(cfg);
  ctx.corpus = load_corpus(cfg.data, cfg.format);
  ctx.hyper = cfg.hyper;
  ctx.train_ratio = cfg.train_ratio;
  bool need_sts = false;
  for (auto c : cfg.configs) need_sts = need_sts || !is_emdv_set(c);
  const auto vocab = corpus_vocabulary(ctx.corpus, ctx.prep);
  const auto stores = cli_detail::load_stores(cfg, &vocab, need_sts);
  ctx.words = &stores.words;
  ctx.sts = stores.sts_ptr();
  for (auto c : cfg.configs) {
    const auto report = run_experiment(ctx, c, cfg.seed);
    const auto dir = cfg.out / std::string(feature_set_name(c));
    write_report(report, dir);
    out << feature_set_name(c);
    char buf[64];
    for (const auto& l : report.learners) {
      std::snprintf(buf, sizeof buf, "  %s=%.4f", l.name.c_str(), l.accuracy);
      out << buf;
    }
    out << "\n  -> " << dir.string() << '\n';
  }
  return 0;
}

// Runs one parsed command. Errors go to `err`; returns the exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Prepare:
        return run_prepare(cfg, out);
      case Command::Repr:
        return run_repr(cfg, out);
      case Command::Features:
        return run_features(cfg, out);
      case Command::Experiment:
        return run_experiment_command(cfg, out);
    }
  } catch (const std::exception& e) {
    err << "entailkit: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace entailkit
