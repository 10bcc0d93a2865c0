#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varbelief {

// Finite, ordered set of state labels. The order is fixed at construction
// and shared by every Distribution and Experiment built over the space;
// identity is by label, ordering by construction order.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

using StateSpacePtr = std::shared_ptr<const StateSpace>;

StateSpacePtr make_state_space(std::vector<std::string> labels);

}  // namespace varbelief
