#include "roughdm/universe.hpp"

#include <unordered_set>

namespace roughdm {

namespace {
constexpr std::string_view kEmptySymbol = "∅";
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw PreconditionError("universe must be non-empty");
  if (labels_.size() > kMaxUniverse) throw PreconditionError("universe larger than 64 elements");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw PreconditionError("empty element label");
    if (l.find_first_of(",|{} ") != std::string::npos || l == kEmptySymbol) {
      throw PreconditionError("label '" + l + "' contains a reserved character");
    }
    if (!seen.insert(l).second) throw PreconditionError("duplicate label '" + l + "'");
    if (l.size() != 1) single_char_ = false;
  }
}

std::shared_ptr<const Universe> Universe::letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < 26) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    } else {
      labels.push_back("x" + std::to_string(i));
    }
  }
  return make(std::move(labels));
}

std::shared_ptr<const Universe> Universe::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> labels) {
  return std::make_shared<const Universe>(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Subset Universe::subset_of_labels(const std::vector<std::string>& labels) const {
  Subset s = empty_set();
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw ParseError("unknown element label '" + l + "'");
    s = s.with(*i);
  }
  return s;
}

std::vector<std::string> Universe::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
  return out;
}

std::string Universe::format(const Subset& s) const {
  if (s.universe_size() != size()) throw UniverseMismatch("subset does not belong to this universe");
  if (s.is_empty()) return std::string(kEmptySymbol);
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!single_char_ && !out.empty()) out += ',';
    out += labels_[i];
  });
  return out;
}

Subset Universe::parse(std::string_view text) const {
  Subset s = empty_set();
  if (text.empty() || text == kEmptySymbol) return s;
  if (single_char_ && text.find(',') == std::string_view::npos) {
    for (char c : text) {
      auto i = index_of(std::string_view(&c, 1));
      if (!i) throw ParseError("unknown element label '" + std::string(1, c) + "'");
      s = s.with(*i);
    }
    return s;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    auto i = index_of(token);
    if (!i) throw ParseError("unknown element label '" + std::string(token) + "'");
    s = s.with(*i);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

}  // namespace roughdm
