#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "garside/element.hpp"

namespace garside {

// Generators occurring in the normal form; Delta contributes all of S.
GenSet element_support(const GarsideElement& g);

// Left-coprime decomposition g = N^-1 P with N, P positive.
struct NpForm {
  GarsideElement n;
  GarsideElement p;
};
NpForm np_form(const GarsideElement& g);

struct MembershipResult {
  bool member = false;
  // Smallest m with Delta_T^m g positive, when the loop was run.
  int m = -1;
  // True when non-membership was certified by the np-form before the loop.
  bool certified_by_np_form = false;
};

// g in A_T. Runs the Delta_T^m loop up to the cap
// letters(g) + |inf(g)| * l(Delta_S); exceeding it raises CapExceeded.
MembershipResult standard_membership_detail(const GarsideElement& g, GenSet t);
bool standard_membership(const GarsideElement& g, GenSet t);

// g normalizes A_T, decided as g Omega_T == Omega_T g.
bool normalizer_membership(const GarsideElement& g, GenSet t);

// P = a^-1 A_T a, keyed by the normal form of a^-1 Omega_T a.
struct ParabolicSubgroup {
  GroupPtr group;
  GarsideElement omega;
  GarsideElement witness;
  GenSet t = 0;

  int rank() const { return popcount(t); }
  std::string key() const { return omega.render(); }
  std::string render() const;

  friend bool operator==(const ParabolicSubgroup& a, const ParabolicSubgroup& b) {
    return a.omega == b.omega;
  }
  friend bool operator<(const ParabolicSubgroup& a, const ParabolicSubgroup& b) {
    return shortlex_less(a.omega, b.omega);
  }
};

ParabolicSubgroup parabolic_from_conjugate(const GarsideElement& a, GenSet t);
ParabolicSubgroup standard_parabolic(const GroupPtr& group, GenSet t);

// "std:s1,s2" or "conj:(word):s1,s2" with P = word^-1 A_T word.
ParabolicSubgroup parse_parabolic(const GroupPtr& group, std::string_view text);

bool omega_commute_edge(const ParabolicSubgroup& p, const ParabolicSubgroup& q);

// b^-1 P b.
ParabolicSubgroup conjugate_parabolic(const ParabolicSubgroup& p, const GarsideElement& b);

// Omega key -> T for every proper irreducible standard parabolic.
std::map<std::string, GenSet> standard_omega_table(const GroupPtr& group);

struct Standardization {
  GarsideElement g;
  GenSet t1 = 0;
  GenSet t2 = 0;
};

// Searches g with simple_length(g) <= radius, shortlex order, such that
// g^-1 P g and g^-1 Q g are both standard.
Standardization simultaneous_standardize(const ParabolicSubgroup& p, const ParabolicSubgroup& q,
                                         int radius);

}  // namespace garside
