#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entailkit/detail/atomic_file.hpp"
#include "entailkit/detail/log.hpp"
#include "entailkit/learners/dataset.hpp"
#include "entailkit/learners/hyperparams.hpp"
#include "entailkit/learners/knn.hpp"
#include "entailkit/learners/naive_bayes.hpp"
#include "entailkit/learners/random_forest.hpp"
#include "entailkit/learners/scaler.hpp"
#include "entailkit/learners/svm.hpp"

namespace entailkit {

enum class LearnerKind { SvmRbf, Knn, RandomForest, GaussianNb };

// Table order; also the ensemble's tie-break precedence.
inline constexpr std::array<LearnerKind, 4> kAllLearners = {
    LearnerKind::SvmRbf, LearnerKind::Knn, LearnerKind::RandomForest,
    LearnerKind::GaussianNb};

inline constexpr std::string_view learner_name(LearnerKind k) noexcept {
  switch (k) {
    case LearnerKind::SvmRbf:
      return "svm_rbf";
    case LearnerKind::Knn:
      return "knn";
    case LearnerKind::RandomForest:
      return "random_forest";
    case LearnerKind::GaussianNb:
      return "naive_bayes";
  }
  return "?";
}

inline std::optional<LearnerKind> parse_learner(std::string_view s) {
  for (auto k : kAllLearners)
    if (s == learner_name(k)) return k;
  return std::nullopt;
}

// Fallback when the training data holds a single class.
struct ConstantModel {
  EntailmentLabel label = EntailmentLabel::Neutral;
};

struct TrainedModel {
  LearnerKind kind = LearnerKind::Knn;
  std::size_t dim = 0;
  std::optional<StandardScaler> scaler;
  std::variant<ConstantModel, KnnModel, GaussianNbModel, ForestModel, SvmModel> params;

  EntailmentLabel predict(std::span<const double> x) const {
    require_dim(dim, x.size());
    std::vector<double> scaled;
    if (scaler) {
      scaled = scaler->transform(x);
      x = scaled;
    }
    return std::visit(
        [&](const auto& m) -> EntailmentLabel {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, ConstantModel>)
            return m.label;
          else
            return m.predict(x);
        },
        params);
  }
};

inline bool scaled_by_default(LearnerKind kind, const Hyperparams& h) {
  switch (kind) {
    case LearnerKind::Knn:
      return h.scale_knn;
    case LearnerKind::SvmRbf:
      return h.scale_svm;
    case LearnerKind::RandomForest:
      return h.scale_rf;
    case LearnerKind::GaussianNb:
      return h.scale_nb;
  }
  return false;
}

inline TrainedModel fit(LearnerKind kind, const Hyperparams& hyper, const Dataset& train,
                        std::uint64_t seed) {
  hyper.validate();
  validate(train);
  TrainedModel model;
  model.kind = kind;
  model.dim = train.dim();

  const auto first = train.labels.front();
  bool single = true;
  for (auto l : train.labels) single = single && l == first;
  if (single) {
    detail::warn(std::string(learner_name(kind)) +
                 ": training data has a single class; predicting it always");
    model.params = ConstantModel{first};
    return model;
  }

  const Matrix* x = &train.features;
  Matrix scaled;
  if (scaled_by_default(kind, hyper)) {
    model.scaler = StandardScaler::fit(train.features);
    scaled = model.scaler->transform(train.features);
    x = &scaled;
  }
  switch (kind) {
    case LearnerKind::Knn:
      model.params = KnnModel::fit(*x, train.labels, hyper.knn_k);
      break;
    case LearnerKind::GaussianNb:
      model.params = GaussianNbModel::fit(*x, train.labels, hyper.nb_var_smoothing);
      break;
    case LearnerKind::RandomForest:
      model.params =
          ForestModel::fit(*x, train.labels, hyper.rf_trees, hyper.rf_bootstrap,
                           {hyper.rf_max_features, hyper.rf_min_samples_split}, seed);
      break;
    case LearnerKind::SvmRbf:
      model.params = SvmModel::fit(*x, train.labels, hyper.svm_c, hyper.svm_gamma,
                                   hyper.svm_tol, hyper.svm_max_iter_factor,
                                   hyper.svm_cache_mb);
      break;
  }
  return model;
}

// ---------------------------------------------------------------------------
// Persistence: whitespace-separated text after a magic line. Doubles use the
// shortest round-trip form, so reloading reproduces predictions exactly.

inline constexpr std::string_view kModelMagic = "ENTK1";

namespace model_io {

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  Writer& tag(std::string_view t) {
    out_ << '\n' << t;
    return *this;
  }
  Writer& num(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out_ << ' ' << std::string_view(buf, static_cast<std::size_t>(p - buf));
    return *this;
  }
  Writer& num(std::size_t v) {
    out_ << ' ' << v;
    return *this;
  }
  Writer& nums(std::span<const double> vs) {
    num(vs.size());
    for (double v : vs) num(v);
    return *this;
  }
  Writer& matrix(const Matrix& m) {
    num(m.rows()).num(m.cols());
    for (double v : m.data()) num(v);
    return *this;
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  void expect(std::string_view t) {
    std::string got;
    if (!(in_ >> got) || got != t)
      throw ParseError("model file: expected '" + std::string(t) + "', got '" + got + "'");
  }
  std::string word() {
    std::string w;
    if (!(in_ >> w)) throw ParseError("model file: unexpected end of file");
    return w;
  }
  double real() {
    auto w = word();
    double v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || p != w.data() + w.size()) {
      if (w == "inf") return std::numeric_limits<double>::infinity();
      if (w == "-inf") return -std::numeric_limits<double>::infinity();
      throw ParseError("model file: bad number '" + w + "'");
    }
    return v;
  }
  std::size_t size() {
    auto w = word();
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || p != w.data() + w.size())
      throw ParseError("model file: bad count '" + w + "'");
    return v;
  }
  std::vector<double> reals() {
    std::vector<double> v(size());
    for (auto& e : v) e = real();
    return v;
  }
  Matrix matrix() {
    std::size_t r = size(), c = size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = real();
    return m;
  }
  EntailmentLabel label() {
    auto i = size();
    if (i >= kNumLabels) throw ParseError("model file: bad label index");
    return label_from_index(i);
  }

 private:
  std::istream& in_;
};

}  // namespace model_io

inline void save_model(const TrainedModel& m, std::ostream& out) {
  using model_io::Writer;
  out << kModelMagic;
  Writer w(out);
  w.tag("kind").tag(learner_name(m.kind));
  w.tag("dim").num(m.dim);
  w.tag("scaler").num(std::size_t{m.scaler ? 1u : 0u});
  if (m.scaler) w.nums(m.scaler->mean).nums(m.scaler->scale);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          w.tag("constant").num(label_index(p.label));
        } else if constexpr (std::is_same_v<T, KnnModel>) {
          w.tag("knn").num(p.k).matrix(p.points).num(p.labels.size());
          for (auto l : p.labels) w.num(label_index(l));
        } else if constexpr (std::is_same_v<T, GaussianNbModel>) {
          w.tag("gaussian_nb").num(p.epsilon);
          for (std::size_t k = 0; k < kNumLabels; ++k)
            w.num(std::size_t{p.present[k] ? 1u : 0u})
                .num(p.log_prior[k])
                .nums(p.mean[k])
                .nums(p.var[k]);
        } else if constexpr (std::is_same_v<T, ForestModel>) {
          w.tag("forest").num(p.trees.size());
          for (const auto& t : p.trees) {
            w.num(t.nodes.size());
            for (const auto& n : t.nodes)
              w.num(static_cast<double>(n.feature))
                  .num(n.threshold)
                  .num(static_cast<double>(n.left))
                  .num(static_cast<double>(n.right))
                  .num(label_index(n.label));
          }
        } else if constexpr (std::is_same_v<T, SvmModel>) {
          w.tag("svm").num(p.gamma);
          for (std::size_t k = 0; k < kNumLabels; ++k) {
            w.num(std::size_t{p.trained[k] ? 1u : 0u});
            if (p.trained[k])
              w.num(p.machines[k].rho).nums(p.machines[k].coef).matrix(p.machines[k].support);
          }
        }
      },
      m.params);
  out << '\n';
}

inline TrainedModel load_model(std::istream& in) {
  model_io::Reader r(in);
  r.expect(kModelMagic);
  TrainedModel m;
  r.expect("kind");
  auto kind = parse_learner(r.word());
  if (!kind) throw ParseError("model file: unknown learner kind");
  m.kind = *kind;
  r.expect("dim");
  m.dim = r.size();
  r.expect("scaler");
  if (r.size() == 1) {
    StandardScaler s;
    s.mean = r.reals();
    s.scale = r.reals();
    m.scaler = std::move(s);
  }
  auto tag = r.word();
  if (tag == "constant") {
    m.params = ConstantModel{r.label()};
  } else if (tag == "knn") {
    KnnModel k;
    k.k = r.size();
    k.points = r.matrix();
    k.labels.resize(r.size());
    for (auto& l : k.labels) l = r.label();
    m.params = std::move(k);
  } else if (tag == "gaussian_nb") {
    GaussianNbModel g;
    g.epsilon = r.real();
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      g.present[k] = r.size() == 1;
      g.log_prior[k] = r.real();
      g.mean[k] = r.reals();
      g.var[k] = r.reals();
    }
    m.params = std::move(g);
  } else if (tag == "forest") {
    ForestModel f;
    f.trees.resize(r.size());
    for (auto& t : f.trees) {
      t.nodes.resize(r.size());
      for (auto& n : t.nodes) {
        n.feature = static_cast<std::int32_t>(r.real());
        n.threshold = r.real();
        n.left = static_cast<std::int32_t>(r.real());
        n.right = static_cast<std::int32_t>(r.real());
        n.label = r.label();
      }
    }
    m.params = std::move(f);
  } else if (tag == "svm") {
    SvmModel s;
    s.gamma = r.real();
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      s.trained[k] = r.size() == 1;
      if (!s.trained[k]) continue;
      s.machines[k].rho = r.real();
      s.machines[k].coef = r.reals();
      s.machines[k].support = r.matrix();
    }
    m.params = std::move(s);
  } else {
    throw ParseError("model file: unknown section '" + tag + "'");
  }
  return m;
}

inline void save_model(const TrainedModel& m, const std::filesystem::path& path) {
  std::ostringstream out;
  save_model(m, out);
  detail::write_file_atomic(path, out.str());
}

inline TrainedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model " + path.string());
  return load_model(in);
}

}  // namespace entailkit
