#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <list>
#include <span>
#include <vector>

#include "entailkit/detail/log.hpp"
#include "entailkit/learners/dataset.hpp"

namespace entailkit {

// exp(-gamma * ||a - b||^2)
inline double rbf_kernel(std::span<const double> a, std::span<const double> b,
                         double gamma) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double diff = a[i] - b[i];
    d2 += diff * diff;
  }
  return std::exp(-gamma * d2);
}

// "scale" heuristic: 1 / (D * variance of all entries of X).
inline double scale_gamma(const Matrix& x) {
  const auto& v = x.data();
  double mean = 0.0;
  for (double e : v) mean += e;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double e : v) var += (e - mean) * (e - mean);
  var /= static_cast<double>(v.size());
  return var > 0.0 ? 1.0 / (static_cast<double>(x.cols()) * var) : 1.0;
}

// RBF Gram-matrix rows computed on demand, kept in an LRU cache bounded by a
// byte budget. Rows are stored as float.
class KernelCache {
 public:
  KernelCache(const Matrix& x, double gamma, std::size_t budget_bytes)
      : x_(x), gamma_(gamma), rows_(x.rows()), where_(x.rows(), lru_.end()) {
    norms_.resize(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
      double s = 0.0;
      for (double v : x.row(r)) s += v * v;
      norms_[r] = s;
    }
    const std::size_t row_bytes = std::max<std::size_t>(1, x.rows() * sizeof(float));
    capacity_ = std::max<std::size_t>(2, budget_bytes / row_bytes);
  }

  std::span<const float> row(std::size_t i) {
    if (!rows_[i].empty()) {
      lru_.splice(lru_.begin(), lru_, where_[i]);
      return rows_[i];
    }
    if (lru_.size() >= capacity_) {
      std::size_t victim = lru_.back();
      lru_.pop_back();
      where_[victim] = lru_.end();
      rows_[victim].clear();
      rows_[victim].shrink_to_fit();
    }
    auto& out = rows_[i];
    out.resize(x_.rows());
    auto xi = x_.row(i);
    for (std::size_t j = 0; j < x_.rows(); ++j) {
      auto xj = x_.row(j);
      double dot = 0.0;
      for (std::size_t c = 0; c < xi.size(); ++c) dot += xi[c] * xj[c];
      double d2 = std::max(0.0, norms_[i] + norms_[j] - 2.0 * dot);
      out[j] = static_cast<float>(std::exp(-gamma_ * d2));
    }
    lru_.push_front(i);
    where_[i] = lru_.begin();
    return out;
  }

 private:
  const Matrix& x_;
  double gamma_;
  std::vector<double> norms_;
  std::vector<std::vector<float>> rows_;
  std::list<std::size_t> lru_;
  std::vector<std::list<std::size_t>::iterator> where_;
  std::size_t capacity_ = 0;
};

struct SmoOptions {
  double c = 1.0;
  double tol = 1e-3;
  std::size_t max_iter = 100000;
};

struct SmoResult {
  std::vector<double> alpha;
  double rho = 0.0;  // decision(x) = sum_i alpha_i y_i K(x_i, x) - rho
  double kkt_gap = 0.0;  // max violating-pair gap at termination
  std::size_t iterations = 0;
  bool converged = false;
};

// Binary C-SVC dual solved by SMO with second-order working-set selection.
// y[i] is +1 or -1.
inline SmoResult solve_smo(KernelCache& kernel, std::span<const int> y,
                           const SmoOptions& opts) {
  const std::size_t n = y.size();
  constexpr double kTau = 1e-12;
  const double c = opts.c;
  SmoResult res;
  auto& alpha = res.alpha;
  alpha.assign(n, 0.0);
  std::vector<double> grad(n, -1.0);  // gradient of 0.5 a'Qa - e'a

  auto upper = [&](std::size_t t) { return alpha[t] >= c; };
  auto lower = [&](std::size_t t) { return alpha[t] <= 0.0; };

  for (;;) {
    // i maximizes -y_t grad_t over I_up
    double gmax = -std::numeric_limits<double>::infinity();
    std::ptrdiff_t i = -1;
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t] == 1) {
        if (!upper(t) && -grad[t] >= gmax) {
          gmax = -grad[t];
          i = static_cast<std::ptrdiff_t>(t);
        }
      } else if (!lower(t) && grad[t] >= gmax) {
        gmax = grad[t];
        i = static_cast<std::ptrdiff_t>(t);
      }
    }
    double gmax2 = -std::numeric_limits<double>::infinity();
    std::ptrdiff_t j = -1;
    double best_obj = std::numeric_limits<double>::infinity();
    std::span<const float> ki;
    if (i >= 0) ki = kernel.row(static_cast<std::size_t>(i));
    for (std::size_t t = 0; t < n; ++t) {
      double grad_diff;
      if (y[t] == 1) {
        if (lower(t)) continue;
        gmax2 = std::max(gmax2, grad[t]);
        grad_diff = gmax + grad[t];
      } else {
        if (upper(t)) continue;
        gmax2 = std::max(gmax2, -grad[t]);
        grad_diff = gmax - grad[t];
      }
      if (i < 0 || grad_diff <= 0.0) continue;
      double quad = 2.0 - 2.0 * ki[t];  // K_ii = K_tt = 1 for RBF
      if (quad <= 0.0) quad = kTau;
      double obj = -(grad_diff * grad_diff) / quad;
      if (obj <= best_obj) {
        best_obj = obj;
        j = static_cast<std::ptrdiff_t>(t);
      }
    }
    res.kkt_gap = (i < 0 || gmax2 == -std::numeric_limits<double>::infinity())
                      ? 0.0
                      : std::max(0.0, gmax + gmax2);
    if (i < 0 || j < 0 || gmax + gmax2 < opts.tol) {
      res.converged = true;
      break;
    }
    if (res.iterations >= opts.max_iter) break;
    ++res.iterations;

    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    auto kj = kernel.row(uj);
    ki = kernel.row(ui);  // may have been evicted by the previous call
    const double kij = ki[uj];
    const double old_ai = alpha[ui], old_aj = alpha[uj];
    if (y[ui] != y[uj]) {
      // Q_ij = y_i y_j K_ij = -K_ij here, so K_ii + K_jj + 2 Q_ij = 2 - 2 K_ij
      double quad = 2.0 - 2.0 * kij;
      if (quad <= 0.0) quad = kTau;
      double delta = (-grad[ui] - grad[uj]) / quad;
      double diff = alpha[ui] - alpha[uj];
      alpha[ui] += delta;
      alpha[uj] += delta;
      if (diff > 0) {
        if (alpha[uj] < 0) {
          alpha[uj] = 0;
          alpha[ui] = diff;
        }
      } else if (alpha[ui] < 0) {
        alpha[ui] = 0;
        alpha[uj] = -diff;
      }
      if (diff > 0) {
        if (alpha[ui] > c) {
          alpha[ui] = c;
          alpha[uj] = c - diff;
        }
      } else if (alpha[uj] > c) {
        alpha[uj] = c;
        alpha[ui] = c + diff;
      }
    } else {
      double quad = 2.0 - 2.0 * kij;
      if (quad <= 0.0) quad = kTau;
      double delta = (grad[ui] - grad[uj]) / quad;
      double sum = alpha[ui] + alpha[uj];
      alpha[ui] -= delta;
      alpha[uj] += delta;
      if (sum > c) {
        if (alpha[ui] > c) {
          alpha[ui] = c;
          alpha[uj] = sum - c;
        }
      } else if (alpha[uj] < 0) {
        alpha[uj] = 0;
        alpha[ui] = sum;
      }
      if (sum > c) {
        if (alpha[uj] > c) {
          alpha[uj] = c;
          alpha[ui] = sum - c;
        }
      } else if (alpha[ui] < 0) {
        alpha[ui] = 0;
        alpha[uj] = sum;
      }
    }
    const double dai = alpha[ui] - old_ai, daj = alpha[uj] - old_aj;
    for (std::size_t t = 0; t < n; ++t)
      grad[t] += y[t] * (y[ui] * ki[t] * dai + y[uj] * kj[t] * daj);
  }

  // Bias: average y*grad over free vectors, else the midpoint of the bounds.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (upper(t)) {
      if (y[t] == -1) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (lower(t)) {
      if (y[t] == 1) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  if (n_free > 0) res.rho = sum_free / static_cast<double>(n_free);
  else if (std::isfinite(ub) && std::isfinite(lb)) res.rho = (ub + lb) / 2.0;
  else res.rho = std::isfinite(ub) ? ub : (std::isfinite(lb) ? lb : 0.0);
  return res;
}

// One binary machine: support vectors with coefficients alpha_i * y_i.
struct BinarySvm {
  Matrix support;
  std::vector<double> coef;
  double rho = 0.0;

  double decision(std::span<const double> q, double gamma) const {
    double s = -rho;
    for (std::size_t r = 0; r < support.rows(); ++r)
      s += coef[r] * rbf_kernel(support.row(r), q, gamma);
    return s;
  }
};

// One-vs-rest RBF SVM. A class absent from training has no machine and can
// never be predicted.
struct SvmModel {
  double gamma = 1.0;
  std::array<bool, kNumLabels> trained{};
  std::array<BinarySvm, kNumLabels> machines;
  // Diagnostics from fitting, one entry per label.
  std::array<double, kNumLabels> kkt_gap{};
  std::array<std::size_t, kNumLabels> iterations{};
  std::array<bool, kNumLabels> converged{};

  static SvmModel fit(const Matrix& x, const std::vector<EntailmentLabel>& labels,
                      double c, double gamma, double tol, std::size_t max_iter_factor,
                      std::size_t cache_mb) {
    SvmModel m;
    m.gamma = gamma > 0.0 ? gamma : scale_gamma(x);
    const std::size_t n = x.rows();
    KernelCache cache(x, m.gamma, cache_mb << 20);
    SmoOptions opts{c, tol, std::max<std::size_t>(10000, max_iter_factor * n)};
    std::vector<int> y(n);
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      std::size_t pos = 0;
      for (std::size_t r = 0; r < n; ++r) {
        y[r] = label_index(labels[r]) == k ? 1 : -1;
        pos += y[r] == 1;
      }
      if (pos == 0) continue;
      m.trained[k] = true;
      auto res = solve_smo(cache, y, opts);
      m.kkt_gap[k] = res.kkt_gap;
      m.iterations[k] = res.iterations;
      m.converged[k] = res.converged;
      if (!res.converged)
        detail::warn("SMO for class " + std::string(label_name(label_from_index(k))) +
                     " hit the iteration cap with KKT gap " + std::to_string(res.kkt_gap));
      auto& mach = m.machines[k];
      mach.rho = res.rho;
      for (std::size_t r = 0; r < n; ++r)
        if (res.alpha[r] > 0.0) {
          mach.support.append_row(x.row(r));
          mach.coef.push_back(res.alpha[r] * y[r]);
        }
    }
    return m;
  }

  std::array<double, kNumLabels> decision_values(std::span<const double> q) const {
    std::array<double, kNumLabels> out;
    out.fill(-std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < kNumLabels; ++k)
      if (trained[k]) out[k] = machines[k].decision(q, gamma);
    return out;
  }

  EntailmentLabel predict(std::span<const double> q) const {
    return label_from_index(argmax_first(decision_values(q)));
  }
};

}  // namespace entailkit
