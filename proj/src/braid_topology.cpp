#include "garside/braid_topology.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "garside/error.hpp"

namespace garside {

GroupPtr type_a_group(int n) {
  static std::mutex mutex;
  static std::map<int, GroupPtr> cache;
  std::lock_guard lock(mutex);
  GroupPtr& slot = cache[n];
  if (!slot) slot = CoxeterGroup::build(parse_group_spec("A" + std::to_string(n)));
  return slot;
}

std::string StandardCurve::render() const {
  return "c(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<StandardCurve> standard_curves(int n) {
  if (n < 2) throw Error(ErrorCode::RankTooSmall, "standard curves need n >= 2");
  std::vector<StandardCurve> out;
  for (int span = 1; span <= n; ++span)
    for (int i = 1; i + span <= n + 1; ++i)
      if (!(i == 1 && i + span == n + 1)) out.push_back({i, i + span});
  return out;
}

namespace {

void require_type_a(const GroupPtr& group) {
  if (group->graph().family_tag() != "A" + std::to_string(group->rank()))
    throw Error(ErrorCode::PreconditionViolated, "expected a type A group");
}

GenSet interval(int from, int to) {
  GenSet t = 0;
  for (int s = from; s <= to; ++s) t |= gen_bit(s - 1);
  return t;
}

GarsideElement delta_or_one(const GroupPtr& g, GenSet t) {
  return t == 0 ? GarsideElement(g) : delta_of(g, t);
}

GarsideElement power(const GarsideElement& x, int k) {
  GarsideElement out(x.group());
  const GarsideElement step = k < 0 ? x.inverse() : x;
  for (int j = 0; j < std::abs(k); ++j) out.right_multiply(step);
  return out;
}

}  // namespace

CurveDictionaryEntry curve_parabolic_dictionary(const GroupPtr& group, StandardCurve c) {
  require_type_a(group);
  const int n = group->rank();
  if (c.i < 1 || c.j <= c.i || c.j > n + 1 || (c.i == 1 && c.j == n + 1))
    throw Error(ErrorCode::IndexOutOfRange, "invalid curve " + c.render());
  CurveDictionaryEntry e;
  e.curve = c;
  e.t = interval(c.i, c.j - 1);
  e.subgroup = standard_parabolic(group, e.t);
  e.dehn_twist = power(delta_of(group, e.t), 2);
  return e;
}

ParabolicSubgroup act_on_parabolic(const GarsideElement& b, const ParabolicSubgroup& p) {
  return conjugate_parabolic(p, b);
}

ArcIdentity arc_stabilizer_words(int n, int i, int k, bool half) {
  if (n < 1 || i < 1 || i > n || k < 1 || (half && 2 * i != n + 1))
    throw Error(ErrorCode::IndexOutOfRange, "invalid (n, i, k, half)");
  const GroupPtr g = type_a_group(n);
  const auto run = [&](GarsideElement& acc, int top, int bottom) {
    for (int s = top; s >= bottom; --s) acc.right_multiply_letter(s - 1, 1);
  };
  GarsideElement block1(g), block2(g);
  for (int t = 1; t <= n - i + 1; ++t) run(block1, i + t - 1, t);
  for (int t = 1; t <= i; ++t) run(block2, n - i + t, t);

  const GarsideElement below = delta_or_one(g, interval(1, i - 1));
  const GarsideElement above = delta_or_one(g, interval(i + 1, n));
  const int e = half ? k : 2 * k;
  ArcIdentity out;
  out.tubular = power(half ? block1 : block1 * block2, k);
  out.twists = GarsideElement::delta_power(g, e) * power(below, -e) * power(above, -e);
  out.holds = out.tubular == out.twists;
  return out;
}

bool arc_stabilizer_identity(int n, int i, int k, bool half) {
  return arc_stabilizer_words(n, i, k, half).holds;
}

DoubledStrand double_first_strand_detail(const LetterWord& word, int n) {
  if (n < 2) throw Error(ErrorCode::RankTooSmall, "doubling needs n >= 2 strands");
  const GroupPtr in = type_a_group(n - 1);
  const GroupPtr out = type_a_group(n);
  // Delta letters are expanded into a reduced word.
  std::vector<std::pair<int, int>> letters;  // (1-based generator, sign)
  for (const Letter& l : word.letters) {
    const int sign = l.power < 0 ? -1 : 1;
    for (int r = 0; r < std::abs(l.power); ++r) {
      if (l.gen == kDeltaLetter) {
        std::vector<int> w = in->reduced_word(in->longest());
        if (sign < 0) std::reverse(w.begin(), w.end());
        for (int s : w) letters.emplace_back(s + 1, sign);
      } else {
        if (l.gen < 0 || l.gen >= in->rank())
          throw Error(ErrorCode::UnknownGenerator, "generator outside A_" + std::to_string(n - 1));
        letters.emplace_back(l.gen + 1, sign);
      }
    }
  }
  DoubledStrand result{GarsideElement(out), 0};
  int p = 1;
  for (const auto& [t, sign] : letters) {
    if (t + 1 < p) {
      result.image.right_multiply_letter(t - 1, sign);
    } else if (t > p) {
      result.image.right_multiply_letter(t, sign);
    } else if (t == p) {
      result.image.right_multiply_letter(t, sign);
      result.image.right_multiply_letter(t - 1, sign);
      result.tracked_crossings += sign;
      p = t + 1;
    } else {
      result.image.right_multiply_letter(t - 1, sign);
      result.image.right_multiply_letter(t, sign);
      result.tracked_crossings += sign;
      p = t;
    }
  }
  if (p != 1)
    throw Error(ErrorCode::NotPureAtStrandOne, "strand 1 ends at position " + std::to_string(p));
  return result;
}

GarsideElement double_first_strand(const LetterWord& word, int n) {
  return double_first_strand_detail(word, n).image;
}

std::vector<ParabolicFactor> delta_three_parabolic_factorization(const GroupPtr& group) {
  if (group->rank() < 3) throw Error(ErrorCode::PreconditionViolated, "rank must be >= 3");
  const CoxeterGraph& graph = group->graph();
  const GenSet all = full_set(group->rank());
  const auto usable = [&](Simple x) {
    const GenSet t = group->support(x);
    return x != group->identity() && t != all && graph.is_connected(t);
  };
  std::vector<Simple> simples(group->order());
  for (Simple x = 0; x < group->order(); ++x) simples[x] = x;
  // Longest first for u, shortest first for v; ties by reduced word.
  std::stable_sort(simples.begin(), simples.end(), [&](Simple a, Simple b) {
    if (group->length(a) != group->length(b)) return group->length(a) < group->length(b);
    return group->reduced_word(a) < group->reduced_word(b);
  });
  std::vector<Simple> longest_first = simples;
  std::stable_sort(longest_first.begin(), longest_first.end(), [&](Simple a, Simple b) {
    if (group->length(a) != group->length(b)) return group->length(a) > group->length(b);
    return group->reduced_word(a) < group->reduced_word(b);
  });
  for (Simple u : longest_first) {
    if (!usable(u)) continue;
    const Simple rest = group->right_complement(u);
    for (Simple v : simples) {
      if (!usable(v) || !group->divides(v, rest, Side::Left)) continue;
      const Simple w = group->multiply(group->inverse(v), rest);
      if (!usable(w)) continue;
      std::vector<ParabolicFactor> out;
      for (Simple x : {u, v, w})
        out.push_back({GarsideElement::from_simple(group, x), group->support(x)});
      return out;
    }
  }
  throw Error(ErrorCode::NotFoundWithinSearch, "no factorization into three parabolic simples");
}

}  // namespace garside
