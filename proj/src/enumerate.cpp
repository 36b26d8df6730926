#include "garside/enumerate.hpp"

#include <algorithm>

namespace garside {

FollowerTable::FollowerTable(const GroupPtr& group) {
  const CoxeterGroup& w = *group;
  for (Simple x = 1; x < w.order(); ++x)
    if (x != w.longest()) proper_.push_back(x);
  followers_.resize(w.order());
  for (Simple a : proper_)
    for (Simple b : proper_)
      if ((w.left_descents(b) & ~w.right_descents(a)) == 0) followers_[a].push_back(b);
}

void for_each_sequence(const GroupPtr& group, int len,
                       const std::function<void(const std::vector<Simple>&)>& visit) {
  if (len <= 0) {
    visit({});
    return;
  }
  const FollowerTable table(group);
  std::vector<Simple> seq;
  seq.reserve(len);
  std::function<void()> extend = [&] {
    if (static_cast<int>(seq.size()) == len) {
      visit(seq);
      return;
    }
    const auto& next = seq.empty() ? table.proper() : table.followers(seq.back());
    for (Simple x : next) {
      seq.push_back(x);
      extend();
      seq.pop_back();
    }
  };
  extend();
}

std::vector<GarsideElement> positive_inf0_elements(const GroupPtr& group, int max_len) {
  std::vector<GarsideElement> out;
  for (int r = 0; r <= max_len; ++r)
    for_each_sequence(group, r, [&](const std::vector<Simple>& seq) {
      out.push_back(GarsideElement::from_factors(group, 0, seq));
    });
  return out;
}

std::vector<GarsideElement> simple_length_ball(const GroupPtr& group, int radius) {
  std::vector<GarsideElement> out;
  if (radius < 0) return out;
  std::vector<std::vector<std::vector<Simple>>> by_len(radius + 1);
  for (int r = 0; r <= radius; ++r)
    for_each_sequence(group, r, [&](const std::vector<Simple>& seq) { by_len[r].push_back(seq); });
  for (int p = -radius; p <= radius; ++p)
    for (int r = 0; r <= radius; ++r) {
      const int len = std::max(p + r, 0) - std::min(p, 0);
      if (len > radius) continue;
      for (const auto& seq : by_len[r]) out.push_back(GarsideElement::from_factors(group, p, seq));
    }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace garside
