#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "entailkit/detail/parallel.hpp"
#include "entailkit/detail/random.hpp"
#include "entailkit/learners/dataset.hpp"

namespace entailkit {

// splitmix64 finalizer; turns (master seed, stream index) into a child seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct TreeOptions {
  std::size_t max_features = 0;  // 0 = floor(sqrt(D)), at least 1
  std::size_t min_samples_split = 2;
};

// Binary CART classification tree. Rows with x[feature] <= threshold go left.
struct DecisionTree {
  struct Node {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    EntailmentLabel label = EntailmentLabel::Neutral;
  };
  std::vector<Node> nodes;

  EntailmentLabel predict(std::span<const double> q) const {
    std::size_t at = 0;
    while (nodes[at].feature >= 0) {
      const auto& n = nodes[at];
      at = static_cast<std::size_t>(q[static_cast<std::size_t>(n.feature)] <= n.threshold
                                        ? n.left
                                        : n.right);
    }
    return nodes[at].label;
  }

  // Grows to purity (or until a node has fewer than min_samples_split rows or
  // no feature can separate it). `rows` may contain repeats (bootstrap).
  static DecisionTree fit(const Matrix& x, const std::vector<EntailmentLabel>& y,
                          std::vector<std::size_t> rows, const TreeOptions& opts,
                          std::uint64_t seed) {
    const std::size_t d = x.cols();
    const std::size_t mtry =
        opts.max_features > 0
            ? std::min(opts.max_features, d)
            : std::max<std::size_t>(1, static_cast<std::size_t>(
                                           std::floor(std::sqrt(static_cast<double>(d)))));
    detail::Rng rng(seed);
    DecisionTree tree;
    std::vector<std::size_t> features(d);
    std::iota(features.begin(), features.end(), std::size_t{0});
    std::vector<std::pair<double, EntailmentLabel>> column;

    struct Task {
      std::size_t node, begin, end;
    };
    tree.nodes.emplace_back();
    std::vector<Task> stack{{0, 0, rows.size()}};

    while (!stack.empty()) {
      const Task task = stack.back();
      stack.pop_back();
      const std::size_t n = task.end - task.begin;
      std::array<std::size_t, kNumLabels> counts{};
      for (std::size_t i = task.begin; i < task.end; ++i) ++counts[label_index(y[rows[i]])];
      const std::size_t majority = static_cast<std::size_t>(
          std::max_element(counts.begin(), counts.end()) - counts.begin());
      tree.nodes[task.node].label = label_from_index(majority);
      if (counts[majority] == n || n < opts.min_samples_split) continue;

      // Best split over up to mtry non-constant features, visited in random
      // order; keeps drawing past mtry while every feature seen is constant.
      double best_impurity = std::numeric_limits<double>::infinity();
      std::int32_t best_feature = -1;
      double best_threshold = 0.0;
      std::size_t evaluated = 0;
      for (std::size_t f = 0; f < d && evaluated < mtry; ++f) {
        auto pick = f + static_cast<std::size_t>(detail::uniform_below(rng, d - f));
        std::swap(features[f], features[pick]);
        const std::size_t feat = features[f];

        column.clear();
        for (std::size_t i = task.begin; i < task.end; ++i)
          column.emplace_back(x(rows[i], feat), y[rows[i]]);
        std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) {
          return a.first < b.first;
        });
        if (column.front().first == column.back().first) continue;
        ++evaluated;

        std::array<double, kNumLabels> left{}, right{};
        for (std::size_t k = 0; k < kNumLabels; ++k)
          right[k] = static_cast<double>(counts[k]);
        auto gini = [](const std::array<double, kNumLabels>& c, double total) {
          double s = 0.0;
          for (double v : c) s += v * v;
          return 1.0 - s / (total * total);
        };
        for (std::size_t i = 0; i + 1 < column.size(); ++i) {
          auto k = label_index(column[i].second);
          left[k] += 1.0;
          right[k] -= 1.0;
          if (column[i].first == column[i + 1].first) continue;
          const double nl = static_cast<double>(i + 1);
          const double nr = static_cast<double>(n) - nl;
          const double impurity = (nl * gini(left, nl) + nr * gini(right, nr)) /
                                  static_cast<double>(n);
          if (impurity < best_impurity) {
            best_impurity = impurity;
            best_feature = static_cast<std::int32_t>(feat);
            double lo = column[i].first, hi = column[i + 1].first;
            double mid = lo + (hi - lo) / 2.0;
            best_threshold = (mid >= hi) ? lo : mid;
          }
        }
      }
      if (best_feature < 0) continue;

      auto mid_it = std::partition(
          rows.begin() + static_cast<std::ptrdiff_t>(task.begin),
          rows.begin() + static_cast<std::ptrdiff_t>(task.end), [&](std::size_t r) {
            return x(r, static_cast<std::size_t>(best_feature)) <= best_threshold;
          });
      const auto mid = static_cast<std::size_t>(mid_it - rows.begin());

      const auto left_id = static_cast<std::int32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      auto& node = tree.nodes[task.node];
      node.feature = best_feature;
      node.threshold = best_threshold;
      node.left = left_id;
      node.right = left_id + 1;
      // right pushed first so the left subtree is built first
      stack.push_back({static_cast<std::size_t>(left_id + 1), mid, task.end});
      stack.push_back({static_cast<std::size_t>(left_id), task.begin, mid});
    }
    return tree;
  }
};

struct ForestModel {
  std::vector<DecisionTree> trees;

  // Tree t is seeded with derive_seed(seed, t); results do not depend on the
  // number of worker threads.
  static ForestModel fit(const Matrix& x, const std::vector<EntailmentLabel>& y,
                         std::size_t n_trees, bool bootstrap, const TreeOptions& opts,
                         std::uint64_t seed) {
    ForestModel f;
    f.trees.resize(n_trees);
    const std::size_t n = x.rows();
    detail::parallel_for(n_trees, [&](std::size_t t) {
      const std::uint64_t tree_seed = derive_seed(seed, t);
      std::vector<std::size_t> rows(n);
      if (bootstrap) {
        detail::Rng rng(derive_seed(tree_seed, 0));
        for (auto& r : rows) r = static_cast<std::size_t>(detail::uniform_below(rng, n));
      } else {
        std::iota(rows.begin(), rows.end(), std::size_t{0});
      }
      f.trees[t] = DecisionTree::fit(x, y, std::move(rows), opts, derive_seed(tree_seed, 1));
    });
    return f;
  }

  // Majority vote over trees; ties go to the earlier label.
  EntailmentLabel predict(std::span<const double> q) const {
    std::array<double, kNumLabels> votes{};
    for (const auto& t : trees) votes[label_index(t.predict(q))] += 1.0;
    return label_from_index(argmax_first(votes));
  }
};

}  // namespace entailkit
