#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "entailkit/learners/ensemble.hpp"
#include "entailkit/learners/model.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"

using namespace entailkit;

namespace {

constexpr auto N = EntailmentLabel::Neutral;
constexpr auto E = EntailmentLabel::Entailment;
constexpr auto C = EntailmentLabel::Contradiction;

using V = std::vector<double>;

Matrix rows(std::initializer_list<V> rs) {
  Matrix m;
  for (const auto& r : rs) m.append_row(r);
  return m;
}

// Three Gaussian blobs in D dimensions with uneven feature scales.
Dataset blobs(std::size_t n, std::size_t d, std::uint64_t seed, double spread = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, spread);
  Dataset ds;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i % 3;
    V row(d);
    for (std::size_t c = 0; c < d; ++c)
      row[c] = (static_cast<double>(k) * 2.0 + g(rng)) * static_cast<double>(c + 1) * 3.0;
    ds.features.append_row(row);
    ds.labels.push_back(label_from_index(k));
  }
  for (std::size_t c = 0; c < d; ++c) ds.schema.push_back("f" + std::to_string(c));
  return ds;
}

double train_accuracy(const TrainedModel& m, const Dataset& ds) {
  std::size_t ok = 0;
  for (std::size_t r = 0; r < ds.size(); ++r) ok += m.predict(ds.features.row(r)) == ds.labels[r];
  return static_cast<double>(ok) / static_cast<double>(ds.size());
}

}  // namespace

TEST(Knn, Examples) {
  auto single = KnnModel::fit(rows({{3, 4}}), {C}, 1);
  EXPECT_EQ(single.predict(V{-100, 7}), C);

  auto three = KnnModel::fit(rows({{0}, {1}, {2}, {50}}), {E, E, N, C}, 3);
  EXPECT_EQ(three.predict(V{0.5}), E);

  // k=2 tie between one A and one B: the nearer neighbour decides
  auto tie = KnnModel::fit(rows({{0}, {3}}), {E, N}, 2);
  EXPECT_EQ(tie.predict(V{1}), E);
  EXPECT_EQ(tie.predict(V{2}), N);
  EXPECT_THROW(tie.predict(V{1, 2}), DimensionError);
}

TEST(Knn, MatchesFullScan) {
  auto r = checks::knn_oracle(500, 3);
  EXPECT_EQ(r.cases, 500u);
  EXPECT_EQ(r.failures, 0u) << r.first;
}

TEST(NaiveBayes, ClosedFormExample) {
  auto m = GaussianNbModel::fit(rows({{0}, {10}}), {E, C}, 1e-9);
  EXPECT_EQ(m.predict(V{0.1}), E);
  EXPECT_EQ(m.predict(V{9.0}), C);
}

TEST(NaiveBayes, SymmetricTieGoesToFirstLabel) {
  auto m = GaussianNbModel::fit(rows({{-1}, {-2}, {1}, {2}}), {C, C, E, E}, 1e-9);
  EXPECT_EQ(m.predict(V{0.0}), E);  // Entailment precedes Contradiction
  auto m2 = GaussianNbModel::fit(rows({{-1}, {-2}, {1}, {2}}), {N, N, C, C}, 1e-9);
  EXPECT_EQ(m2.predict(V{0.0}), N);
}

TEST(NaiveBayes, MatchesClosedFormPosteriors) {
  auto r = checks::naive_bayes_oracle(50, 8);
  EXPECT_EQ(r.failures, 0u) << r.first;
}

TEST(NaiveBayes, ConstantFeatureStaysFinite) {
  auto m = GaussianNbModel::fit(rows({{1, 5}, {1, 6}, {1, 50}}), {E, E, C}, 1e-9);
  for (double v : m.joint_log_likelihood(V{1, 5.5}))
    EXPECT_TRUE(v == -HUGE_VAL || std::isfinite(v));
  EXPECT_EQ(m.predict(V{1, 5.5}), E);
}

TEST(Forest, SingleTreeSeparable) {
  auto ds = Dataset{rows({{0, 0}, {1, 1}}), {E, C}, {"a", "b"}};
  auto f = ForestModel::fit(ds.features, ds.labels, 1, false, {}, 7);
  EXPECT_EQ(f.predict(V{0, 0}), E);
  EXPECT_EQ(f.predict(V{1, 1}), C);
}

TEST(Forest, GrowsToPurityWithoutBootstrap) {
  auto ds = blobs(90, 3, 5);
  auto f = ForestModel::fit(ds.features, ds.labels, 5, false, {}, 11);
  for (std::size_t r = 0; r < ds.size(); ++r) EXPECT_EQ(f.predict(ds.features.row(r)), ds.labels[r]);
}

TEST(Forest, DeterministicAcrossThreadCounts) {
  auto ds = blobs(150, 4, 9, 2.0);
  auto a = ForestModel::fit(ds.features, ds.labels, 20, true, {}, 42);
  auto b = ForestModel::fit(ds.features, ds.labels, 20, true, {}, 42);
  ASSERT_EQ(a.trees.size(), b.trees.size());
  for (std::size_t t = 0; t < a.trees.size(); ++t) {
    ASSERT_EQ(a.trees[t].nodes.size(), b.trees[t].nodes.size());
    for (std::size_t i = 0; i < a.trees[t].nodes.size(); ++i) {
      EXPECT_EQ(a.trees[t].nodes[i].threshold, b.trees[t].nodes[i].threshold);
      EXPECT_EQ(a.trees[t].nodes[i].feature, b.trees[t].nodes[i].feature);
    }
  }
  EXPECT_NE(derive_seed(42, 0), derive_seed(42, 1));
  EXPECT_NE(derive_seed(42, 0), derive_seed(43, 0));
}

TEST(Smo, SeparableFixtureConverges) {
  auto r = checks::smo_fixture();
  EXPECT_TRUE(r.converged);
  EXPECT_DOUBLE_EQ(r.train_accuracy, 1.0);
  EXPECT_LE(r.solver_gap, 1e-3);
  EXPECT_LE(r.max_violation, 1e-3);
}

TEST(Smo, KernelCacheEvictionKeepsResults) {
  Matrix x;
  std::vector<int> y;
  checks::separable_fixture(x, y);
  const double gamma = scale_gamma(x);
  KernelCache big(x, gamma, 1 << 20), tiny(x, gamma, 1);
  auto a = solve_smo(big, y, {1.0, 1e-3, 100000});
  auto b = solve_smo(tiny, y, {1.0, 1e-3, 100000});
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.rho, b.rho);
}

TEST(Svm, OneVsRestFitsBlobs) {
  auto ds = blobs(90, 2, 4, 0.3);
  Hyperparams h;
  auto m = fit(LearnerKind::SvmRbf, h, ds, 1);
  EXPECT_DOUBLE_EQ(train_accuracy(m, ds), 1.0);
  const auto& svm = std::get<SvmModel>(m.params);
  for (std::size_t k = 0; k < kNumLabels; ++k) {
    EXPECT_TRUE(svm.converged[k]);
    EXPECT_LE(svm.kkt_gap[k], 1e-3);
  }
}

TEST(Ensemble, VotingRules) {
  const std::vector<EntailmentLabel> plural{N, N, E, C}, tie{N, E, N, E}, tie2{E, N, N, E},
      same{C, C, C, C};
  EXPECT_EQ(majority_vote(plural), N);
  EXPECT_EQ(majority_vote(tie), N);
  EXPECT_EQ(majority_vote(tie2), E);
  EXPECT_EQ(majority_vote(same), C);
  EnsembleModel one;
  one.members.push_back(TrainedModel{LearnerKind::Knn, 1, std::nullopt, ConstantModel{E}});
  EXPECT_THROW(one.predict(V{0}), ConfigError);
  one.members.push_back(TrainedModel{LearnerKind::GaussianNb, 1, std::nullopt, ConstantModel{C}});
  EXPECT_EQ(ensemble_predict(one, V{0}), E);
}

TEST(Fit, SingleClassFallsBackToConstant) {
  Dataset ds{rows({{1}, {2}, {3}}), {C, C, C}, {"x"}};
  detail::warnings_enabled() = false;
  for (auto kind : kAllLearners) {
    auto m = fit(kind, Hyperparams{}, ds, 3);
    EXPECT_TRUE(std::holds_alternative<ConstantModel>(m.params));
    EXPECT_EQ(m.predict(V{100}), C);
  }
  detail::warnings_enabled() = true;
}

TEST(Fit, RejectsBadInput) {
  Dataset nonfinite{rows({{1}, {NAN}}), {C, E}, {"x"}};
  EXPECT_THROW(fit(LearnerKind::Knn, Hyperparams{}, nonfinite, 1), Error);
  Hyperparams bad;
  bad.knn_k = 0;
  EXPECT_THROW(fit(LearnerKind::Knn, bad, blobs(9, 1, 1), 1), ConfigError);
}

// Rescaling one input column by a positive constant must not change KNN or
// SVM predictions when standardization is on.
TEST(Standardization, PositiveRescalingInvariance) {
  auto train = blobs(120, 3, 21, 1.5);
  auto test = blobs(60, 3, 22, 1.5);
  for (double factor : {1e-3, 7.5, 1e4}) {
    Dataset scaled_train = train, scaled_test = test;
    auto rescale = [&](Dataset& ds) {
      Matrix m;
      for (std::size_t r = 0; r < ds.size(); ++r) {
        V row(ds.features.row(r).begin(), ds.features.row(r).end());
        row[1] *= factor;
        m.append_row(row);
      }
      ds.features = m;
    };
    rescale(scaled_train);
    rescale(scaled_test);
    for (auto kind : {LearnerKind::Knn, LearnerKind::SvmRbf}) {
      auto a = fit(kind, Hyperparams{}, train, 5);
      auto b = fit(kind, Hyperparams{}, scaled_train, 5);
      std::size_t differ = 0;
      for (std::size_t r = 0; r < test.size(); ++r)
        differ += a.predict(test.features.row(r)) != b.predict(scaled_test.features.row(r));
      EXPECT_EQ(differ, 0u) << learner_name(kind) << " factor " << factor;
    }
  }
}

TEST(Fit, DeterministicRepeatRuns) {
  auto train = blobs(150, 4, 31, 2.5);
  auto test = blobs(60, 4, 32, 2.5);
  for (auto kind : kAllLearners) {
    auto a = fit(kind, Hyperparams{}, train, 99);
    auto b = fit(kind, Hyperparams{}, train, 99);
    std::ostringstream sa, sb;
    save_model(a, sa);
    save_model(b, sb);
    EXPECT_EQ(sa.str(), sb.str()) << learner_name(kind);
  }
}

TEST(ModelIo, RoundTripPreservesPredictions) {
  auto train = blobs(120, 3, 41, 2.0);
  auto test = blobs(80, 3, 42, 2.0);
  fixtures::TempDir dir("model");
  for (auto kind : kAllLearners) {
    auto m = fit(kind, Hyperparams{}, train, 7);
    const auto path = dir / (std::string(learner_name(kind)) + ".entk");
    save_model(m, path);
    auto back = load_model(path);
    EXPECT_EQ(back.kind, kind);
    EXPECT_EQ(back.dim, 3u);
    EXPECT_EQ(back.scaler.has_value(), m.scaler.has_value());
    for (std::size_t r = 0; r < test.size(); ++r)
      EXPECT_EQ(back.predict(test.features.row(r)), m.predict(test.features.row(r)));
    std::ostringstream again, first;
    save_model(m, first);
    save_model(back, again);
    EXPECT_EQ(first.str(), again.str());
  }
  std::istringstream junk("NOPE kind knn");
  EXPECT_THROW(load_model(junk), ParseError);
  std::istringstream truncated("ENTK1\nkind knn\ndim 3\nscaler 0\nknn 5 2");
  EXPECT_THROW(load_model(truncated), ParseError);
}

TEST(Hyperparams, ParseAndReject) {
  auto h = parse_hyperparams(
      "# tuned\nknn.k = 7\nrf.trees=10\nsvm.gamma = scale\nsvm.c = 2.5\n\nscale.nb = true\n");
  EXPECT_EQ(h.knn_k, 7u);
  EXPECT_EQ(h.rf_trees, 10u);
  EXPECT_EQ(h.svm_gamma, 0.0);
  EXPECT_EQ(h.svm_c, 2.5);
  EXPECT_TRUE(h.scale_nb);
  EXPECT_EQ(parse_hyperparams("svm.gamma = 0.25").svm_gamma, 0.25);
  EXPECT_THROW(parse_hyperparams("knn.kk = 3"), ConfigError);
  EXPECT_THROW(parse_hyperparams("knn.k"), ConfigError);
  EXPECT_THROW(parse_hyperparams("knn.k = -1"), ConfigError);
  EXPECT_THROW(parse_hyperparams("svm.c = 0"), ConfigError);
  EXPECT_THROW(parse_hyperparams("svm.tol = abc"), ConfigError);
  EXPECT_THROW(parse_hyperparams("scale.knn = maybe"), ConfigError);
}
