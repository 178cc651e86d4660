#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughdm/subset.hpp"

namespace roughdm {

/// A labelled finite carrier. Element i is the i-th label.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  /// Labels "a", "b", ... or "1", "2", ... for quick construction.
  static std::shared_ptr<const Universe> letters(std::size_t n);
  static std::shared_ptr<const Universe> numbered(std::size_t n);
  static std::shared_ptr<const Universe> make(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }

  /// Builds a subset from labels; throws ParseError on an unknown label.
  Subset subset_of_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Subset& s) const;

  /// Compact notation: "ab" when every label is one character, "x1,x2"
  /// otherwise, and "∅" for the empty set.
  std::string format(const Subset& s) const;

  /// Inverse of format() for non-empty input; "∅" and "" denote the empty set.
  Subset parse(std::string_view text) const;

  bool single_char_labels() const noexcept { return single_char_; }

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  bool single_char_ = true;
};

using UniversePtr = std::shared_ptr<const Universe>;

}  // namespace roughdm
