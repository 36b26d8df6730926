#pragma once

#include <functional>
#include <vector>

#include "garside/element.hpp"

namespace garside {

// Proper nontrivial simples and, for each, the simples that may follow it in
// a left-weighted sequence.
class FollowerTable {
 public:
  explicit FollowerTable(const GroupPtr& group);

  const std::vector<Simple>& proper() const { return proper_; }
  const std::vector<Simple>& followers(Simple x) const { return followers_[x]; }

 private:
  std::vector<Simple> proper_;
  std::vector<std::vector<Simple>> followers_;
};

// Visits every left-weighted sequence of proper simples of length exactly
// len, in lexicographic order of simple ids.
void for_each_sequence(const GroupPtr& group, int len,
                       const std::function<void(const std::vector<Simple>&)>& visit);

// Elements Delta^0 x_1..x_r with r <= max_len, ordered by r then lexicographically.
std::vector<GarsideElement> positive_inf0_elements(const GroupPtr& group, int max_len);

// All elements with simple_length() <= radius, in shortlex order.
std::vector<GarsideElement> simple_length_ball(const GroupPtr& group, int radius);

}  // namespace garside
