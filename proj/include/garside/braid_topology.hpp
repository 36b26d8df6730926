#pragma once

#include <string>
#include <vector>

#include "garside/element.hpp"
#include "garside/parabolic.hpp"

namespace garside {

// Artin group of type A_n (the braid group on n+1 strands), built once per n.
GroupPtr type_a_group(int n);

// Round curve around punctures i..j, 1 <= i < j <= n+1, (i, j) != (1, n+1).
struct StandardCurve {
  int i = 0;
  int j = 0;
  std::string render() const;
  friend bool operator==(const StandardCurve&, const StandardCurve&) = default;
};

// Ordered by j - i, then i.
std::vector<StandardCurve> standard_curves(int n);

struct CurveDictionaryEntry {
  StandardCurve curve;
  GenSet t = 0;  // {s_i, ..., s_{j-1}}
  ParabolicSubgroup subgroup;
  GarsideElement dehn_twist;  // Delta_T^2
};

CurveDictionaryEntry curve_parabolic_dictionary(const GroupPtr& group, StandardCurve c);

// b^-1 P b.
ParabolicSubgroup act_on_parabolic(const GarsideElement& b, const ParabolicSubgroup& p);

struct ArcIdentity {
  GarsideElement tubular;  // product of the descending runs
  GarsideElement twists;   // Delta^.. Delta_<^.. Delta_>^..
  bool holds = false;
};

// In A_n: block1 = prod_{t=1}^{n-i+1} (s_{i+t-1} ... s_t) and
// block2 = prod_{t=1}^{i} (s_{n-i+t} ... s_t). The full identity is
// (block1 block2)^k = Delta^2k Delta_<^-2k Delta_>^-2k with Delta_< over
// s_1..s_{i-1} and Delta_> over s_{i+1}..s_n; the half identity (2i = n+1)
// is block1^k = Delta^k Delta_<^-k Delta_>^-k.
ArcIdentity arc_stabilizer_words(int n, int i, int k, bool half);
bool arc_stabilizer_identity(int n, int i, int k, bool half = false);

struct DoubledStrand {
  GarsideElement image;        // in A_n
  int tracked_crossings = 0;   // signed count of crossings of strand 1
};

// word is over A_{n-1} (n strands); the strand starting at position 1 is
// replaced by two parallel strands.
DoubledStrand double_first_strand_detail(const LetterWord& word, int n);
GarsideElement double_first_strand(const LetterWord& word, int n);

struct ParabolicFactor {
  GarsideElement element;
  GenSet t = 0;  // connected proper support
};

// Delta = u v w with each factor a simple in a proper irreducible standard
// parabolic.
std::vector<ParabolicFactor> delta_three_parabolic_factorization(const GroupPtr& group);

}  // namespace garside
