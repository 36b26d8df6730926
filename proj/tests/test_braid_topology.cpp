#include <gtest/gtest.h>

#include <random>

#include "garside/braid_topology.hpp"
#include "garside/error.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

GarsideElement el(const GroupPtr& g, const std::string& w) { return parse_element(g, w); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

// A word in signed letters spelling the normal form.
std::vector<std::pair<int, int>> signed_letters(const GarsideElement& g) {
  const GroupPtr& grp = g.group();
  std::vector<std::pair<int, int>> out;
  const std::vector<int> w0 = grp->reduced_word(grp->longest());
  for (int k = 0; k < std::abs(g.inf()); ++k) {
    if (g.inf() > 0)
      for (int s : w0) out.emplace_back(s, 1);
    else
      for (auto it = w0.rbegin(); it != w0.rend(); ++it) out.emplace_back(*it, -1);
  }
  for (Simple x : g.factors())
    for (int s : grp->reduced_word(x)) out.emplace_back(s, 1);
  return out;
}

oracle::Burau burau_of(const GarsideElement& g) {
  return oracle::burau_word(g.group()->rank() + 1, signed_letters(g));
}

LetterWord random_word(std::mt19937_64& rng, int rank, int len) {
  LetterWord w;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({static_cast<int>(rng() % rank), rng() % 2 ? 1 : -1});
  return w;
}

// Position of the strand starting at 1 and the signed number of crossings it
// takes part in, by direct permutation tracking.
std::pair<int, int> track_strand(const LetterWord& w) {
  int pos = 1, crossings = 0;
  for (const Letter& l : w.letters) {
    const int t = l.gen + 1;
    if (t == pos || t + 1 == pos) {
      pos = t == pos ? t + 1 : t;
      crossings += l.power;
    }
  }
  return {pos, crossings};
}

LetterWord random_pure_at_one(std::mt19937_64& rng, int rank, int max_len) {
  for (;;) {
    LetterWord w = random_word(rng, rank, 1 + static_cast<int>(rng() % max_len));
    if (track_strand(w).first == 1) return w;
  }
}

}  // namespace

TEST(StandardCurves, ListingAndCounts) {
  const auto c3 = standard_curves(3);
  const std::vector<StandardCurve> expected{{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}};
  EXPECT_EQ(c3, expected);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(standard_curves(n).size(), static_cast<std::size_t>(n * (n + 1) / 2 - 1));
  EXPECT_EQ(code_of([] { standard_curves(1); }), ErrorCode::RankTooSmall);
  EXPECT_EQ(c3[3].render(), "c(1,3)");
}

TEST(CurveDictionary, Examples) {
  const GroupPtr a3 = type_a_group(3);
  const auto c12 = curve_parabolic_dictionary(a3, {1, 2});
  EXPECT_EQ(c12.subgroup, standard_parabolic(a3, gen_bit(0)));
  EXPECT_EQ(c12.dehn_twist, el(a3, "s1^2"));
  const auto c13 = curve_parabolic_dictionary(a3, {1, 3});
  EXPECT_EQ(c13.t, gen_bit(0) | gen_bit(1));
  EXPECT_EQ(c13.dehn_twist, el(a3, "s1 s2 s1 s1 s2 s1"));
  for (const StandardCurve& c : standard_curves(3)) {
    const auto e = curve_parabolic_dictionary(a3, c);
    for (int s : members(e.t)) {
      const GarsideElement x = el(a3, "s" + std::to_string(s + 1));
      EXPECT_EQ(x * e.dehn_twist, e.dehn_twist * x) << c.render();
    }
  }
  EXPECT_EQ(code_of([&] { curve_parabolic_dictionary(a3, {1, 4}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { curve_parabolic_dictionary(a3, {2, 2}); }), ErrorCode::IndexOutOfRange);
  const GroupPtr b3 = CoxeterGroup::build(parse_group_spec("B3"));
  EXPECT_EQ(code_of([&] { curve_parabolic_dictionary(b3, {1, 2}); }), ErrorCode::PreconditionViolated);
}

TEST(CurveDictionary, StabilizerIsTwistCentralizer) {
  std::mt19937_64 rng(5);
  for (int n : {3, 4}) {
    const GroupPtr g = type_a_group(n);
    const auto curves = standard_curves(n);
    for (int i = 0; i < 300; ++i) {
      GarsideElement x = normal_form(g, random_word(rng, n, 1 + static_cast<int>(rng() % 6)));
      // Bias towards stabilizer elements so both outcomes are exercised.
      const auto& c = curves[rng() % curves.size()];
      const auto e = curve_parabolic_dictionary(g, c);
      if (i % 2) x = x * e.dehn_twist * x.inverse();
      if (i % 4 == 1) x = e.subgroup.omega * GarsideElement::delta_power(g, 2);
      EXPECT_EQ(normalizer_membership(x, e.t), x * e.dehn_twist == e.dehn_twist * x)
          << c.render() << " " << x;
    }
  }
}

TEST(ActOnParabolic, ExamplesAndRightAction) {
  const GroupPtr a3 = type_a_group(3);
  const auto p1 = standard_parabolic(a3, gen_bit(0)), p3 = standard_parabolic(a3, gen_bit(2));
  EXPECT_EQ(act_on_parabolic(el(a3, "s1"), p3), p3);
  EXPECT_EQ(act_on_parabolic(el(a3, "D"), p1), p3);
  std::mt19937_64 rng(9);
  const auto subsets = a3->graph().proper_irreducible_subsets();
  for (int i = 0; i < 100; ++i) {
    const GarsideElement a = normal_form(a3, random_word(rng, 3, 5));
    const ParabolicSubgroup p = parabolic_from_conjugate(a, subsets[rng() % subsets.size()]);
    EXPECT_EQ(act_on_parabolic(el(a3, "D^2"), p), p);
    const GarsideElement b = normal_form(a3, random_word(rng, 3, 4));
    const GarsideElement c = normal_form(a3, random_word(rng, 3, 4));
    EXPECT_EQ(act_on_parabolic(c, act_on_parabolic(b, p)), act_on_parabolic(b * c, p));
  }
  const GroupPtr a2 = type_a_group(2);
  EXPECT_EQ(code_of([&] { act_on_parabolic(el(a2, "s1"), p1); }), ErrorCode::GroupMismatch);
}

TEST(ArcStabilizer, AllCases) {
  for (int n : {3, 4, 5})
    for (int i = 1; i <= n; ++i)
      for (int k : {1, 2})
        for (bool half : {false, true}) {
          if (half && 2 * i != n + 1) continue;
          const ArcIdentity a = arc_stabilizer_words(n, i, k, half);
          EXPECT_TRUE(a.holds) << n << " " << i << " " << k << " " << half;
          EXPECT_EQ(burau_of(a.tubular), burau_of(a.twists)) << n << " " << i << " " << k;
        }
  EXPECT_TRUE(arc_stabilizer_identity(3, 1, 1));
  EXPECT_TRUE(arc_stabilizer_identity(3, 2, 1, true));
  EXPECT_TRUE(arc_stabilizer_identity(4, 2, 2));
  EXPECT_EQ(code_of([] { arc_stabilizer_identity(3, 0, 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { arc_stabilizer_identity(3, 4, 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { arc_stabilizer_identity(3, 1, 0); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { arc_stabilizer_identity(4, 2, 1, true); }), ErrorCode::IndexOutOfRange);
}

TEST(DoubleStrand, Examples) {
  const GroupPtr a2 = type_a_group(2), a3 = type_a_group(3);
  EXPECT_TRUE(double_first_strand(LetterWord{}, 3).is_identity());
  EXPECT_EQ(double_first_strand(parse_word(a2->graph(), "s2"), 3), el(a3, "s3"));
  EXPECT_EQ(double_first_strand(parse_word(type_a_group(1)->graph(), "s1^2"), 2),
            el(a2, "D^2 s1^-2"));
  EXPECT_EQ(code_of([&] { double_first_strand(parse_word(a2->graph(), "s1"), 3); }),
            ErrorCode::NotPureAtStrandOne);
  EXPECT_EQ(double_first_strand(parse_word(a2->graph(), "D^2"), 3),
            double_first_strand(parse_word(a2->graph(), "s1 s2 s1 s1 s2 s1"), 3));
}

TEST(DoubleStrand, Properties) {
  std::mt19937_64 rng(17);
  for (int n : {3, 4}) {
    const GroupPtr out = type_a_group(n);
    for (int i = 0; i < 200; ++i) {
      const LetterWord b = random_pure_at_one(rng, n - 1, 8);
      const LetterWord c = random_pure_at_one(rng, n - 1, 8);
      const DoubledStrand db = double_first_strand_detail(b, n);
      EXPECT_TRUE(normalizer_membership(db.image, gen_bit(0)));
      EXPECT_EQ(db.tracked_crossings, track_strand(b).second);
      EXPECT_EQ(db.image.exponent_sum(), b.signed_length() + db.tracked_crossings);
      LetterWord bc = b;
      bc.letters.insert(bc.letters.end(), c.letters.begin(), c.letters.end());
      EXPECT_EQ(double_first_strand(bc, n), db.image * double_first_strand(c, n));
      GarsideElement pw(out);
      for (int k = 1; k <= 3; ++k) {
        pw = pw * db.image;
        EXPECT_TRUE(normalizer_membership(pw, gen_bit(0)));
      }
    }
  }
}

TEST(DeltaFactorization, Examples) {
  const GroupPtr a3 = type_a_group(3);
  const auto f = delta_three_parabolic_factorization(a3);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].element, el(a3, "s1 s2 s1"));
  EXPECT_EQ(f[1].element, el(a3, "s3"));
  EXPECT_EQ(f[2].element, el(a3, "s2 s1"));
  for (const char* spec : {"A3", "A4", "A5", "D4"}) {
    const GroupPtr g = CoxeterGroup::build(parse_group_spec(spec));
    const auto h = delta_three_parabolic_factorization(g);
    EXPECT_EQ(h[0].element * h[1].element * h[2].element, GarsideElement::delta_power(g, 1)) << spec;
    for (const auto& x : h) {
      EXPECT_TRUE(standard_membership(x.element, x.t));
      EXPECT_TRUE(g->graph().is_connected(x.t));
      EXPECT_NE(x.t, full_set(g->rank()));
    }
  }
  // The search is exhaustive over simple factors; B3 has no such triple.
  EXPECT_EQ(code_of([] {
              delta_three_parabolic_factorization(CoxeterGroup::build(parse_group_spec("B3")));
            }),
            ErrorCode::NotFoundWithinSearch);
  EXPECT_EQ(code_of([] { delta_three_parabolic_factorization(type_a_group(2)); }),
            ErrorCode::PreconditionViolated);
}
