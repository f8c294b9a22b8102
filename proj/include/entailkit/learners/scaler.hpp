#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "entailkit/learners/dataset.hpp"

namespace entailkit {

// Per-feature standardization fitted on the training rows. Constant features
// get unit scale so they map to zero.
struct StandardScaler {
  std::vector<double> mean;
  std::vector<double> scale;

  static StandardScaler fit(const Matrix& x) {
    StandardScaler s;
    const std::size_t n = x.rows(), d = x.cols();
    s.mean.assign(d, 0.0);
    s.scale.assign(d, 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < d; ++c) s.mean[c] += x(r, c);
    for (auto& m : s.mean) m /= static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        double dv = x(r, c) - s.mean[c];
        s.scale[c] += dv * dv;
      }
    for (auto& v : s.scale) {
      v = std::sqrt(v / static_cast<double>(n));
      if (!(v > 0.0)) v = 1.0;
    }
    return s;
  }

  void transform_in_place(std::span<double> row) const {
    require_dim(mean.size(), row.size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = (row[c] - mean[c]) / scale[c];
  }

  std::vector<double> transform(std::span<const double> row) const {
    std::vector<double> out(row.begin(), row.end());
    transform_in_place(out);
    return out;
  }

  Matrix transform(const Matrix& x) const {
    Matrix out = x;
    for (std::size_t r = 0; r < out.rows(); ++r) transform_in_place(out.row(r));
    return out;
  }
};

}  // namespace entailkit
