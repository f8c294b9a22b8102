#pragma once

#include <array>
#include <span>
#include <vector>

#include "entailkit/learners/model.hpp"

namespace entailkit {

// Plurality vote; among tied labels the earliest vote (in member order) wins.
inline EntailmentLabel majority_vote(std::span<const EntailmentLabel> votes) {
  if (votes.empty()) throw Error("majority vote over zero members");
  std::array<std::size_t, kNumLabels> counts{};
  for (auto v : votes) ++counts[label_index(v)];
  std::size_t top = 0;
  for (auto c : counts) top = std::max(top, c);
  for (auto v : votes)
    if (counts[label_index(v)] == top) return v;
  return votes.front();
}

struct EnsembleModel {
  std::vector<TrainedModel> members;  // order = tie-break precedence

  std::vector<EntailmentLabel> votes(std::span<const double> x) const {
    std::vector<EntailmentLabel> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.predict(x));
    return out;
  }

  EntailmentLabel predict(std::span<const double> x) const {
    if (members.size() < 2) throw ConfigError("an ensemble needs at least two members");
    return majority_vote(votes(x));
  }
};

inline EntailmentLabel ensemble_predict(const EnsembleModel& e, std::span<const double> x) {
  return e.predict(x);
}

}  // namespace entailkit
