#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <utility>
#include <vector>

#include "entailkit/learners/dataset.hpp"

namespace entailkit {

struct KnnModel {
  std::size_t k = 5;
  Matrix points;
  std::vector<EntailmentLabel> labels;

  static KnnModel fit(const Matrix& x, std::vector<EntailmentLabel> y, std::size_t k) {
    return KnnModel{k, x, std::move(y)};
  }

  // The k nearest training rows by Euclidean distance, nearest first;
  // equal distances keep training order.
  std::vector<std::size_t> neighbors(std::span<const double> query) const {
    require_dim(points.cols(), query.size());
    std::vector<std::pair<double, std::size_t>> dist(points.rows());
    for (std::size_t r = 0; r < points.rows(); ++r) {
      auto row = points.row(r);
      double d2 = 0.0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        double diff = row[c] - query[c];
        d2 += diff * diff;
      }
      dist[r] = {d2, r};
    }
    const std::size_t kk = std::min(k, dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk),
                      dist.end());
    std::vector<std::size_t> out(kk);
    for (std::size_t i = 0; i < kk; ++i) out[i] = dist[i].second;
    return out;
  }

  // Plurality vote among the k neighbours; a tie between classes goes to the
  // class of the nearest neighbour among the tied classes.
  EntailmentLabel predict(std::span<const double> query) const {
    const auto nn = neighbors(query);
    std::array<std::size_t, kNumLabels> votes{};
    for (auto i : nn) ++votes[label_index(labels[i])];
    const std::size_t top = *std::max_element(votes.begin(), votes.end());
    for (auto i : nn)
      if (votes[label_index(labels[i])] == top) return labels[i];
    return labels.front();
  }
};

}  // namespace entailkit
