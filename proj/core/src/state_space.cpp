#include "varbelief/state_space.hpp"

#include <stdexcept>
#include <unordered_set>

namespace varbelief {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("StateSpace: needs at least one state label");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw std::invalid_argument("StateSpace: state labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("StateSpace: duplicate state label '" + label + "'");
    }
  }
}

std::optional<std::size_t> StateSpace::index_of(std::string_view label) const {
  for (std::size_t s = 0; s < labels_.size(); ++s) {
    if (labels_[s] == label) return s;
  }
  return std::nullopt;
}

StateSpacePtr make_state_space(std::vector<std::string> labels) {
  return std::make_shared<const StateSpace>(std::move(labels));
}

}  // namespace varbelief
