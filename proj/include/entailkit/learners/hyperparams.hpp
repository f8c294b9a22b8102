#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "entailkit/detail/strings.hpp"
#include "entailkit/error.hpp"

namespace entailkit {

// Learner hyperparameters. None are fixed by the method itself; these are
// the toolkit defaults.
struct Hyperparams {
  std::size_t knn_k = 5;

  std::size_t rf_trees = 100;
  bool rf_bootstrap = true;
  std::size_t rf_min_samples_split = 2;
  std::size_t rf_max_features = 0;  // 0 = floor(sqrt(D))

  double svm_c = 1.0;
  double svm_gamma = 0.0;  // 0 = "scale": 1 / (D * Var(X))
  double svm_tol = 1e-3;
  std::size_t svm_max_iter_factor = 10;  // iteration cap = factor * N
  std::size_t svm_cache_mb = 512;

  double nb_var_smoothing = 1e-9;

  bool scale_knn = true;
  bool scale_svm = true;
  bool scale_rf = false;
  bool scale_nb = false;

  void validate() const {
    if (knn_k < 1) throw ConfigError("knn.k must be >= 1");
    if (rf_trees < 1) throw ConfigError("rf.trees must be >= 1");
    if (rf_min_samples_split < 2) throw ConfigError("rf.min_samples_split must be >= 2");
    if (!(svm_c > 0.0)) throw ConfigError("svm.c must be > 0");
    if (!(svm_gamma >= 0.0)) throw ConfigError("svm.gamma must be > 0 or 'scale'");
    if (!(svm_tol > 0.0)) throw ConfigError("svm.tol must be > 0");
    if (svm_max_iter_factor < 1) throw ConfigError("svm.max_iter_factor must be >= 1");
    if (!(nb_var_smoothing >= 0.0)) throw ConfigError("nb.var_smoothing must be >= 0");
  }
};

namespace hyper_detail {

inline std::size_t to_size(std::string_view key, std::string_view v) {
  std::size_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(v) + "'");
  return out;
}

inline double to_double(std::string_view key, std::string_view v) {
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(v) +
                      "'");
  return out;
}

inline bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw ConfigError(std::string(key) + ": expected true/false, got '" + std::string(v) +
                    "'");
}

}  // namespace hyper_detail

// "key = value" per line, '#' starts a comment. Unknown keys are rejected.
//
//   knn.k  rf.trees  rf.bootstrap  rf.min_samples_split  rf.max_features
//   svm.c  svm.gamma (number or "scale")  svm.tol  svm.max_iter_factor
//   svm.cache_mb  nb.var_smoothing  scale.knn  scale.svm  scale.rf  scale.nb
inline Hyperparams parse_hyperparams(std::string_view text, Hyperparams base = {}) {
  using namespace hyper_detail;
  Hyperparams& h = base;
  const std::map<std::string, std::function<void(std::string_view, std::string_view)>,
                 std::less<>>
      setters = {
          {"knn.k", [&](auto k, auto v) { h.knn_k = to_size(k, v); }},
          {"rf.trees", [&](auto k, auto v) { h.rf_trees = to_size(k, v); }},
          {"rf.bootstrap", [&](auto k, auto v) { h.rf_bootstrap = to_bool(k, v); }},
          {"rf.min_samples_split",
           [&](auto k, auto v) { h.rf_min_samples_split = to_size(k, v); }},
          {"rf.max_features", [&](auto k, auto v) { h.rf_max_features = to_size(k, v); }},
          {"svm.c", [&](auto k, auto v) { h.svm_c = to_double(k, v); }},
          {"svm.gamma",
           [&](auto k, auto v) { h.svm_gamma = v == "scale" ? 0.0 : to_double(k, v); }},
          {"svm.tol", [&](auto k, auto v) { h.svm_tol = to_double(k, v); }},
          {"svm.max_iter_factor",
           [&](auto k, auto v) { h.svm_max_iter_factor = to_size(k, v); }},
          {"svm.cache_mb", [&](auto k, auto v) { h.svm_cache_mb = to_size(k, v); }},
          {"nb.var_smoothing", [&](auto k, auto v) { h.nb_var_smoothing = to_double(k, v); }},
          {"scale.knn", [&](auto k, auto v) { h.scale_knn = to_bool(k, v); }},
          {"scale.svm", [&](auto k, auto v) { h.scale_svm = to_bool(k, v); }},
          {"scale.rf", [&](auto k, auto v) { h.scale_rf = to_bool(k, v); }},
          {"scale.nb", [&](auto k, auto v) { h.scale_nb = to_bool(k, v); }},
      };
  std::size_t line_no = 0;
  for (auto line : detail::split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("hyperparameter line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    auto key = detail::trim(line.substr(0, eq));
    auto value = detail::trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("unknown hyperparameter '" + std::string(key) + "'");
    it->second(key, value);
  }
  h.validate();
  return h;
}

inline Hyperparams load_hyperparams(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open hyperparameter file " + path.string());
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_hyperparams(text);
}

}  // namespace entailkit
