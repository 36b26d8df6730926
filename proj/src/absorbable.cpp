#include "garside/absorbable.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "garside/enumerate.hpp"
#include "garside/error.hpp"

namespace garside {

namespace {

bool inf0_sup(const GarsideElement& g, int len) { return g.inf() == 0 && g.sup() == len; }

// Simples z that may precede a given factor in a left-weighted sequence.
std::vector<std::vector<Simple>> predecessor_table(const GroupPtr& group) {
  const FollowerTable table(group);
  std::vector<std::vector<Simple>> pred(group->order());
  for (Simple z : table.proper())
    for (Simple b : table.followers(z)) pred[b].push_back(z);
  return pred;
}

// Depth-first search for witnesses, built from the right. The length-l
// suffix of any witness absorbs the length-l prefix of y, so partial suffixes
// failing that test are discarded.
class WitnessSearch {
 public:
  WitnessSearch(const GarsideElement& y, std::uint64_t bound, bool want_all)
      : y_(y), group_(y.group()), bound_(bound), want_all_(want_all),
        pred_(predecessor_table(group_)), proper_(FollowerTable(group_).proper()) {
    for (int l = 0; l <= y.canonical_length(); ++l) prefixes_.push_back(y.prefix(l));
  }

  // Returns false if the node budget ran out.
  bool run() {
    std::vector<Simple> suffix;  // stored reversed: suffix.back() is the leftmost factor
    return extend(suffix);
  }

  const std::vector<GarsideElement>& found() const { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend(std::vector<Simple>& rev) {
    const int len = y_.canonical_length();
    const auto& candidates = rev.empty() ? proper_ : pred_[rev.back()];
    for (Simple z : candidates) {
      if (++nodes_ > bound_) return false;
      rev.push_back(z);
      const int l = static_cast<int>(rev.size());
      std::vector<Simple> seq(rev.rbegin(), rev.rend());
      const GarsideElement s = GarsideElement::from_factors(group_, 0, seq);
      if (inf0_sup(s, l) && inf0_sup(s * prefixes_[l], l)) {
        if (l == len) {
          found_.push_back(s);
          if (!want_all_) {
            rev.pop_back();
            return true;
          }
        } else if (!extend(rev)) {
          rev.pop_back();
          return false;
        }
        if (!want_all_ && !found_.empty()) {
          rev.pop_back();
          return true;
        }
      }
      rev.pop_back();
    }
    return true;
  }

  GarsideElement y_;
  GroupPtr group_;
  std::uint64_t bound_;
  bool want_all_;
  std::vector<std::vector<Simple>> pred_;
  std::vector<Simple> proper_;
  std::vector<GarsideElement> prefixes_;
  std::vector<GarsideElement> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool absorbs(const GarsideElement& x, const GarsideElement& y) {
  require_same_group(x, y);
  const int len = y.canonical_length();
  if (y.inf() != 0 || len < 1) return false;
  return inf0_sup(x, len) && inf0_sup(x * y, len);
}

AbsorbableResult is_absorbable(const GarsideElement& y, std::uint64_t witness_bound) {
  if (y.is_identity()) throw Error(ErrorCode::IdentityInput, "the identity is not a valid input");
  AbsorbableResult result;
  GarsideElement target = y;
  if (y.inf() != 0) {
    if (y.sup() != 0) return result;
    target = y.inverse();
    result.inverted = true;
  }
  if (target.canonical_length() == 0) return result;
  WitnessSearch search(target, witness_bound, false);
  const bool complete = search.run();
  result.nodes_visited = search.nodes();
  if (!search.found().empty()) {
    result.verdict = Verdict::Yes;
    result.witness = search.found().front();
  } else {
    result.verdict = complete ? Verdict::No : Verdict::Unknown;
  }
  return result;
}

std::vector<GarsideElement> all_witnesses(const GarsideElement& y, std::uint64_t witness_bound) {
  if (y.is_identity()) throw Error(ErrorCode::IdentityInput, "the identity is not a valid input");
  if (y.inf() != 0) return {};
  WitnessSearch search(y, witness_bound, true);
  if (!search.run()) throw Error(ErrorCode::CapExceeded, "witness enumeration truncated");
  return search.found();
}

Census enumerate_absorbable(const GroupPtr& group, int sup_bound, std::uint64_t witness_bound) {
  Census census;
  const FollowerTable table(group);
  std::vector<GarsideElement> positive;
  // Prefixes of absorbable elements are absorbable, so only absorbable
  // sequences are extended.
  std::vector<std::vector<Simple>> level;
  for (Simple x : table.proper()) level.push_back({x});
  for (int len = 1; len <= sup_bound && !level.empty(); ++len) {
    std::vector<std::vector<Simple>> next;
    for (const auto& seq : level) {
      const GarsideElement y = GarsideElement::from_factors(group, 0, seq);
      const AbsorbableResult r = is_absorbable(y, witness_bound);
      if (r.verdict == Verdict::Unknown) census.truncated = true;
      if (r.verdict != Verdict::Yes) continue;
      positive.push_back(y);
      if (len == sup_bound) continue;
      for (Simple z : table.followers(seq.back())) {
        auto ext = seq;
        ext.push_back(z);
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  for (const GarsideElement& y : positive) {
    census.elements.push_back(y);
    census.elements.push_back(y.inverse());
  }
  std::sort(census.elements.begin(), census.elements.end(), shortlex_less);
  census.elements.erase(std::unique(census.elements.begin(), census.elements.end()),
                        census.elements.end());
  return census;
}

FatTriangle build_fat_triangle(const GarsideElement& x, const GarsideElement& y) {
  require_same_group(x, y);
  const int len = y.canonical_length();
  if (len == 0 || x.canonical_length() == 0)
    throw Error(ErrorCode::ZeroLength, "fat triangles need length L >= 1");
  if (!absorbs(x, y) || y.inf() != 0 || y.sup() != len)
    throw Error(ErrorCode::NotAnAbsorptionPair, x.render() + " does not absorb " + y.render());
  FatTriangle t;
  t.group = x.group();
  t.x = x;
  t.y = y;
  t.xy = x * y;
  t.length = len;
  for (int k = 0; k <= len; ++k) {
    t.side_x.push_back(x.prefix(k));
    t.side_y.push_back(x * y.prefix(k));
    t.side_xy.push_back(t.xy.prefix(k));
  }
  return t;
}

AbsorptionSymmetry absorption_symmetry(const GarsideElement& x, const GarsideElement& y) {
  if (!absorbs(x, y))
    throw Error(ErrorCode::NotAnAbsorptionPair, x.render() + " does not absorb " + y.render());
  const int len = y.canonical_length();
  const GarsideElement delta_l = GarsideElement::delta_power(x.group(), len);
  const GarsideElement xy_inv = (x * y).inverse();
  AbsorptionSymmetry s;
  s.pair2 = {y, xy_inv * delta_l};
  s.pair3 = {delta_l * xy_inv, x};
  s.both_verified = absorbs(s.pair2.first, s.pair2.second) && absorbs(s.pair3.first, s.pair3.second);
  return s;
}

}  // namespace garside
