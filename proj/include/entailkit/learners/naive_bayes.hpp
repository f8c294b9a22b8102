#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "entailkit/learners/dataset.hpp"

namespace entailkit {

// Gaussian naive Bayes. Variances are smoothed by adding
// var_smoothing * (largest per-feature variance of the training data).
struct GaussianNbModel {
  std::array<double, kNumLabels> log_prior{};
  std::array<bool, kNumLabels> present{};
  std::array<std::vector<double>, kNumLabels> mean;
  std::array<std::vector<double>, kNumLabels> var;
  double epsilon = 0.0;

  static GaussianNbModel fit(const Matrix& x, const std::vector<EntailmentLabel>& y,
                             double var_smoothing) {
    const std::size_t n = x.rows(), d = x.cols();
    GaussianNbModel m;

    double max_var = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      double mu = 0.0;
      for (std::size_t r = 0; r < n; ++r) mu += x(r, c);
      mu /= static_cast<double>(n);
      double v = 0.0;
      for (std::size_t r = 0; r < n; ++r) v += (x(r, c) - mu) * (x(r, c) - mu);
      max_var = std::max(max_var, v / static_cast<double>(n));
    }
    m.epsilon = var_smoothing * max_var;
    // all-constant data: fall back to an absolute floor so densities stay finite
    if (!(m.epsilon > 0.0)) m.epsilon = var_smoothing > 0.0 ? var_smoothing : 1e-300;

    std::array<std::size_t, kNumLabels> count{};
    for (auto l : y) ++count[label_index(l)];
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      m.present[k] = count[k] > 0;
      m.mean[k].assign(d, 0.0);
      m.var[k].assign(d, 0.0);
      m.log_prior[k] = m.present[k] ? std::log(static_cast<double>(count[k]) /
                                               static_cast<double>(n))
                                    : -std::numeric_limits<double>::infinity();
    }
    for (std::size_t r = 0; r < n; ++r) {
      auto k = label_index(y[r]);
      for (std::size_t c = 0; c < d; ++c) m.mean[k][c] += x(r, c);
    }
    for (std::size_t k = 0; k < kNumLabels; ++k)
      if (m.present[k])
        for (auto& v : m.mean[k]) v /= static_cast<double>(count[k]);
    for (std::size_t r = 0; r < n; ++r) {
      auto k = label_index(y[r]);
      for (std::size_t c = 0; c < d; ++c) {
        double dv = x(r, c) - m.mean[k][c];
        m.var[k][c] += dv * dv;
      }
    }
    for (std::size_t k = 0; k < kNumLabels; ++k)
      for (auto& v : m.var[k])
        v = (m.present[k] ? v / static_cast<double>(count[k]) : 0.0) + m.epsilon;
    return m;
  }

  // Unnormalized log posterior per class, in label order.
  std::array<double, kNumLabels> joint_log_likelihood(std::span<const double> q) const {
    require_dim(mean[0].size(), q.size());
    std::array<double, kNumLabels> out{};
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      if (!present[k]) {
        out[k] = -std::numeric_limits<double>::infinity();
        continue;
      }
      double s = log_prior[k];
      for (std::size_t c = 0; c < q.size(); ++c) {
        double dv = q[c] - mean[k][c];
        s -= 0.5 * std::log(2.0 * std::numbers::pi * var[k][c]);
        s -= 0.5 * dv * dv / var[k][c];
      }
      out[k] = s;
    }
    return out;
  }

  EntailmentLabel predict(std::span<const double> q) const {
    auto jll = joint_log_likelihood(q);
    return label_from_index(argmax_first(jll));
  }
};

}  // namespace entailkit
