#pragma once

// Straightforward reference implementations used to check the library.
// Nothing here calls into entailkit; inputs are plain vectors and strings.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

// Thresholded accumulation written as a scalar loop over (word, element).
inline Vec threshold_accumulate(const std::vector<Vec>& words, std::size_t k) {
  Vec acc(k, 0.0);
  bool first = true;
  for (const auto& x : words) {
    if (first) {
      for (std::size_t i = 0; i < k; ++i) acc[i] = acc[i] + x[i];
      first = false;
      continue;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) total = total + x[i];
    const double mean = total / static_cast<double>(k);
    double ss = 0.0;
    for (std::size_t i = 0; i < k; ++i) ss = ss + (x[i] - mean) * (x[i] - mean);
    const double alpha = mean + std::sqrt(ss / static_cast<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
      const double gap = acc[i] > x[i] ? acc[i] - x[i] : x[i] - acc[i];
      if (gap >= alpha) acc[i] = acc[i] + x[i];
    }
  }
  return acc;
}

// Search over every include/exclude pattern for words 2..m, one bit per
// (word, element). The unique pattern whose every decision agrees with the
// gate rule gives the result. Returns nullopt when no pattern (or more than
// one) is consistent, which would mean the rule is ill-defined.
inline std::optional<Vec> threshold_bruteforce(const std::vector<Vec>& words, std::size_t k) {
  if (words.empty()) return Vec(k, 0.0);
  const std::size_t gated = (words.size() - 1) * k;
  std::vector<double> alphas;
  for (std::size_t w = 1; w < words.size(); ++w) {
    double mean = 0.0;
    for (double v : words[w]) mean += v;
    mean /= static_cast<double>(k);
    double var = 0.0;
    for (double v : words[w]) var += (v - mean) * (v - mean);
    alphas.push_back(mean + std::sqrt(var / static_cast<double>(k)));
  }
  std::optional<Vec> found;
  int consistent = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gated); ++mask) {
    Vec acc = words[0];
    bool ok = true;
    for (std::size_t w = 1; w < words.size() && ok; ++w) {
      for (std::size_t i = 0; i < k; ++i) {
        const bool take = (mask >> ((w - 1) * k + i)) & 1u;
        const bool rule = std::abs(acc[i] - words[w][i]) >= alphas[w - 1];
        if (take != rule) {
          ok = false;
          break;
        }
        if (take) acc[i] += words[w][i];
      }
    }
    if (ok) {
      ++consistent;
      found = acc;
    }
  }
  if (consistent != 1) return std::nullopt;
  return found;
}

// True when `value` equals x_0[i] plus the sum of some subset of the other
// words' i-th elements.
inline bool is_subset_sum(const std::vector<Vec>& words, std::size_t i, double value,
                          double tol) {
  const std::size_t rest = words.size() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rest); ++mask) {
    double s = words[0][i];
    for (std::size_t w = 0; w < rest; ++w)
      if ((mask >> w) & 1u) s += words[w + 1][i];
    if (std::abs(s - value) <= tol) return true;
  }
  return false;
}

inline Vec mean_of(const std::vector<Vec>& words, std::size_t k) {
  Vec out(k, 0.0);
  if (words.empty()) return out;
  for (const auto& w : words)
    for (std::size_t i = 0; i < k; ++i) out[i] += w[i];
  for (auto& v : out) v /= static_cast<double>(words.size());
  return out;
}

inline Vec sum_of(const std::vector<Vec>& words, std::size_t k) {
  Vec out(k, 0.0);
  for (const auto& w : words)
    for (std::size_t i = 0; i < k; ++i) out[i] += w[i];
  return out;
}

inline double cosine(const Vec& a, const Vec& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

inline double avg_abs_diff(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s / static_cast<double>(a.size());
}

inline double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  std::sort(sb.begin(), sb.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
  std::size_t inter = 0;
  for (const auto& w : sa)
    if (std::binary_search(sb.begin(), sb.end(), w)) ++inter;
  const std::size_t uni = sa.size() + sb.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

inline double bow_cosine(const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
  std::set<std::string> vocab(a.begin(), a.end());
  vocab.insert(b.begin(), b.end());
  Vec fa, fb;
  for (const auto& w : vocab) {
    fa.push_back(static_cast<double>(std::count(a.begin(), a.end(), w)));
    fb.push_back(static_cast<double>(std::count(b.begin(), b.end(), w)));
  }
  return cosine(fa, fb);
}

// Vectors of the in-vocabulary tokens, in order.
inline std::vector<Vec> lookup_all(const std::map<std::string, Vec>& store,
                                   const std::vector<std::string>& tokens) {
  std::vector<Vec> out;
  for (const auto& t : tokens) {
    auto it = store.find(t);
    if (it != store.end()) out.push_back(it->second);
  }
  return out;
}

// k-nearest neighbours by full scan: sort every row by (distance, index),
// vote among the first k, break ties by the nearest tied neighbour.
inline int knn_scan(const std::vector<Vec>& points, const std::vector<int>& labels,
                    const Vec& q, std::size_t k) {
  std::vector<std::pair<double, std::size_t>> d;
  for (std::size_t r = 0; r < points.size(); ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < q.size(); ++c) s += (points[r][c] - q[c]) * (points[r][c] - q[c]);
    d.emplace_back(std::sqrt(s), r);
  }
  std::sort(d.begin(), d.end());
  k = std::min(k, d.size());
  std::map<int, int> votes;
  for (std::size_t i = 0; i < k; ++i) ++votes[labels[d[i].second]];
  int top = 0;
  for (auto& [l, v] : votes) top = std::max(top, v);
  for (std::size_t i = 0; i < k; ++i)
    if (votes[labels[d[i].second]] == top) return labels[d[i].second];
  return -1;
}

// Log of prior times the Gaussian likelihood for a single feature, with the
// smoothing term added to the class variance.
inline double gaussian_log_posterior(double prior, double mu, double var, double x) {
  return std::log(prior) - 0.5 * std::log(2.0 * std::numbers::pi * var) -
         (x - mu) * (x - mu) / (2.0 * var);
}

}  // namespace oracle
