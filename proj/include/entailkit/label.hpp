#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace entailkit {

// Order matters: it is the row/column order of confusion matrices and the
// deterministic tie-break order of the per-class argmax rules.
enum class EntailmentLabel : int { Neutral = 0, Entailment = 1, Contradiction = 2 };

inline constexpr std::size_t kNumLabels = 3;

inline constexpr std::array<EntailmentLabel, kNumLabels> kAllLabels = {
    EntailmentLabel::Neutral, EntailmentLabel::Entailment,
    EntailmentLabel::Contradiction};

constexpr std::size_t label_index(EntailmentLabel l) noexcept {
  return static_cast<std::size_t>(l);
}

constexpr EntailmentLabel label_from_index(std::size_t i) noexcept {
  return static_cast<EntailmentLabel>(static_cast<int>(i));
}

constexpr std::string_view label_name(EntailmentLabel l) noexcept {
  switch (l) {
    case EntailmentLabel::Neutral:
      return "Neutral";
    case EntailmentLabel::Entailment:
      return "Entailment";
    case EntailmentLabel::Contradiction:
      return "Contradiction";
  }
  return "?";
}

// Case-insensitive; anything other than the three names is rejected.
inline std::optional<EntailmentLabel> parse_label(std::string_view s) {
  auto iequals = [](std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
             return std::tolower(static_cast<unsigned char>(x)) ==
                    std::tolower(static_cast<unsigned char>(y));
           });
  };
  for (auto l : kAllLabels)
    if (iequals(s, label_name(l))) return l;
  return std::nullopt;
}

}  // namespace entailkit
