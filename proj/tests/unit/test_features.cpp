#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "entailkit/features.hpp"
#include "support/checks.hpp"

using namespace entailkit;

namespace {

using V = std::vector<double>;

EmbeddingStore two_d() {
  EmbeddingStore s(2, "2d");
  s.insert("a", V{1, 0});
  s.insert("b", V{0, 1});
  return s;
}

}  // namespace

TEST(Emdv, SignedDifference) {
  EXPECT_EQ(emdv(V{1, 2, 3}, V{0, 2, 5}), (V{1, 0, -2}));
  EXPECT_EQ(emdv(V{4, 4}, V{4, 4}), (V{0, 0}));
  EXPECT_THROW(emdv(V{1, 2}, V{1, 2, 3}), DimensionError);
}

TEST(AvgEmdv, EquationValues) {
  EXPECT_DOUBLE_EQ(avg_emdv(V{1, 2, 3}, V{0, 2, 5}), 1.0);
  EXPECT_DOUBLE_EQ(avg_emdv(V{1, 2, 3}, V{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(avg_emdv(V{5}, V{2}), 3.0);
  EXPECT_THROW(avg_emdv(V{1}, V{1, 2}), DimensionError);
  EXPECT_THROW(avg_emdv(V{}, V{}), Error);
}

TEST(Jaccard, Examples) {
  EXPECT_DOUBLE_EQ(jaccard({"two", "dogs", "fighting"}, {"two", "dogs", "wrestling", "hugging"}),
                   0.4);
  EXPECT_DOUBLE_EQ(jaccard({"a", "b"}, {"b", "a", "a"}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard({"a"}, {"b"}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard({}, {}), 0.0);
}

TEST(Bow, WorkedFrequencyVectors) {
  const V t{1, 0, 2, 0, 4, 0, 0, 0, 1, 1}, h{0, 2, 0, 1, 4, 3, 0, 1, 2, 1};
  const double expected = 19.0 / (std::sqrt(23.0) * 6.0);
  EXPECT_NEAR(cosine(t, h), expected, 1e-12);
  EXPECT_NEAR(expected, 0.66029, 1e-5);

  // the same vectors expressed as token lists over a 10-word vocabulary
  const std::vector<std::string> words{"w0", "w1", "w2", "w3", "w4",
                                       "w5", "w6", "w7", "w8", "w9"};
  TokenList tt, ht;
  for (std::size_t i = 0; i < 10; ++i) {
    for (int c = 0; c < static_cast<int>(t[i]); ++c) tt.push_back(words[i]);
    for (int c = 0; c < static_cast<int>(h[i]); ++c) ht.push_back(words[i]);
  }
  EXPECT_NEAR(bow_cosine(tt, ht), expected, 1e-12);
  auto bv = bow_vectors(tt, ht);
  EXPECT_TRUE(std::is_sorted(bv.vocab.begin(), bv.vocab.end()));
}

TEST(Bow, Conventions) {
  EXPECT_NEAR(bow_cosine({"x", "y", "x"}, {"x", "y", "x"}), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(bow_cosine({}, {"x"}), 0.0);
  EXPECT_DOUBLE_EQ(bow_cosine({}, {}), 0.0);
}

TEST(Sts, Examples) {
  auto s = two_d();
  EXPECT_NEAR(sts({"a"}, {"a"}, s), 1.0, 1e-12);
  EXPECT_NEAR(sts({"a"}, {"b"}, s), 0.0, 1e-12);
  EXPECT_NEAR(sts({"a", "b"}, {"a"}, s), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(sts({"zz"}, {"a"}, s), 0.0);
}

TEST(Assemble, SchemasAndIdentity) {
  auto s = two_d();
  const FeatureStores stores{&s, &s};
  const PreparedPair same{{"a", "b"}, {"a", "b"}};
  for (auto set : {FeatureSet::HandThr, FeatureSet::HandPlain}) {
    auto fv = assemble(same, set, stores);
    EXPECT_EQ(fv.schema, (std::vector<std::string>{"avg_emdv", "bow", "jac", "sts"}));
    ASSERT_EQ(fv.values.size(), 4u);
    EXPECT_DOUBLE_EQ(fv.values[0], 0.0);
    EXPECT_NEAR(fv.values[1], 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(fv.values[2], 1.0);
    EXPECT_NEAR(fv.values[3], 1.0, 1e-12);
  }
  auto e = assemble(PreparedPair{{"a", "b"}, {"b"}}, FeatureSet::EmdvThr, stores);
  EXPECT_EQ(e.schema, (std::vector<std::string>{"emdv_0", "emdv_1"}));
  EXPECT_EQ(feature_schema(FeatureSet::EmdvPlain, 300).size(), 300u);

  auto plain = assemble(PreparedPair{{"a", "b"}, {"b"}}, FeatureSet::EmdvPlain, stores);
  EXPECT_EQ(plain.values, (V{0.5, -0.5}));
}

TEST(Assemble, MissingStoreIsConfigError) {
  auto s = two_d();
  const PreparedPair p{{"a"}, {"b"}};
  EXPECT_THROW(assemble(p, FeatureSet::EmdvThr, FeatureStores{nullptr, &s}), ConfigError);
  EXPECT_THROW(assemble(p, FeatureSet::HandThr, FeatureStores{&s, nullptr}), ConfigError);
  EXPECT_NO_THROW(assemble(p, FeatureSet::EmdvThr, FeatureStores{&s, nullptr}));
}

TEST(Assemble, FromLabeledPair) {
  EmbeddingStore s(2, "w");
  s.insert("dog", V{1, 2});
  s.insert("fighting", V{0, 1});
  const LabeledPair pair{"1", "Two dogs are fighting.", "A dog is fighting", EntailmentLabel::Entailment};
  auto fv = assemble(pair, FeatureSet::HandThr, FeatureStores{&s, &s}, PrepConfig::builtin());
  ASSERT_EQ(fv.values.size(), 4u);
  EXPECT_NEAR(fv.values[2], 2.0 / 3.0, 1e-12);  // {two,dog,fighting} vs {dog,fighting}
}

TEST(FeatureCsv, HeaderAndPrecision) {
  std::ostringstream out;
  const std::vector<FeatureVector> rows{FeatureVector{{1.0 / 3.0, 1.0}, {}},
                                        FeatureVector{{-2.5, 0.0}, {}}};
  const std::vector<EntailmentLabel> labels{EntailmentLabel::Neutral,
                                            EntailmentLabel::Contradiction};
  write_feature_csv(out, {"avg_emdv", "bow"}, rows, labels);
  EXPECT_EQ(out.str(), "avg_emdv,bow,label\n0.333333333,1,Neutral\n-2.5,0,Contradiction\n");
}

TEST(FeatureProperties, RandomizedCases) {
  auto r = checks::feature_properties(2000, 17);
  EXPECT_EQ(r.failures, 0u) << r.first;
  EXPECT_EQ(r.cases, 2000u);
}
