#include "garside/parabolic.hpp"

#include <algorithm>

#include "garside/enumerate.hpp"
#include "garside/error.hpp"

namespace garside {

GenSet element_support(const GarsideElement& g) {
  GenSet out = g.inf() != 0 ? full_set(g.group()->rank()) : 0;
  for (Simple x : g.factors()) out |= g.group()->support(x);
  return out;
}

NpForm np_form(const GarsideElement& g) {
  const GroupPtr& group = g.group();
  if (g.inf() >= 0) return {GarsideElement(group), g};
  const int m = -g.inf();
  const int k = std::min(m, g.canonical_length());
  const std::vector<Simple>& f = g.factors();
  const GarsideElement head = GarsideElement::from_factors(
      group, 0, std::vector<Simple>(f.begin(), f.begin() + k));
  const GarsideElement tail = GarsideElement::from_factors(
      group, 0, std::vector<Simple>(f.begin() + k, f.end()));
  return {head.inverse() * GarsideElement::delta_power(group, m), tail};
}

MembershipResult standard_membership_detail(const GarsideElement& g, GenSet t) {
  if (t == 0) throw Error(ErrorCode::EmptySubset, "membership in A_T for empty T");
  const GroupPtr& group = g.group();
  MembershipResult result;
  const NpForm np = np_form(g);
  if ((element_support(np.n) & ~t) != 0 || (element_support(np.p) & ~t) != 0) {
    result.certified_by_np_form = true;
    return result;
  }
  const GarsideElement delta_t = delta_of(group, t);
  const long delta_letters = static_cast<long>(std::abs(g.inf())) * group->max_length();
  long letters = delta_letters;
  for (Simple x : g.factors()) letters += group->length(x);
  const long cap = letters + delta_letters;
  GarsideElement h = g;
  for (long m = 0; m <= cap; ++m) {
    if (h.inf() >= 0) {
      result.m = static_cast<int>(m);
      result.member = (element_support(h) & ~t) == 0;
      return result;
    }
    h = delta_t * h;
  }
  throw Error(ErrorCode::CapExceeded, "membership loop exceeded its cap of " + std::to_string(cap));
}

bool standard_membership(const GarsideElement& g, GenSet t) {
  return standard_membership_detail(g, t).member;
}

bool normalizer_membership(const GarsideElement& g, GenSet t) {
  const GarsideElement omega = omega_of(g.group(), t).element;
  return g * omega == omega * g;
}

std::string ParabolicSubgroup::render() const {
  const std::string subset = "{" + group->graph().render_subset(t) + "}";
  if (witness.is_identity()) return "A" + subset;
  return "(" + witness.render() + ")^-1 A" + subset + " (" + witness.render() + ")";
}

ParabolicSubgroup parabolic_from_conjugate(const GarsideElement& a, GenSet t) {
  const GroupPtr& group = a.group();
  if (t == 0) throw Error(ErrorCode::EmptySubset, "parabolic of the empty subset");
  if ((t & ~full_set(group->rank())) != 0) throw Error(ErrorCode::UnknownGenerator, "subset out of range");
  if (t == full_set(group->rank())) throw Error(ErrorCode::ImproperSubset, "T must be a proper subset");
  const OmegaResult omega = omega_of(group, t);
  ParabolicSubgroup p;
  p.group = group;
  p.omega = a.inverse() * omega.element * a;
  p.witness = a;
  p.t = t;
  return p;
}

ParabolicSubgroup standard_parabolic(const GroupPtr& group, GenSet t) {
  return parabolic_from_conjugate(GarsideElement(group), t);
}

ParabolicSubgroup parse_parabolic(const GroupPtr& group, std::string_view text) {
  const std::string s(text);
  if (s.rfind("std:", 0) == 0) return standard_parabolic(group, parse_subset(group->graph(), s.substr(4)));
  if (s.rfind("conj:(", 0) == 0) {
    const auto close = s.find("):", 6);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "expected conj:(word):T in '" + s + "'");
    const GarsideElement a = parse_element(group, s.substr(6, close - 6));
    return parabolic_from_conjugate(a, parse_subset(group->graph(), s.substr(close + 2)));
  }
  throw Error(ErrorCode::ParseError, "parabolic literal must start with std: or conj:(");
}

bool omega_commute_edge(const ParabolicSubgroup& p, const ParabolicSubgroup& q) {
  require_same_group(p.omega, q.omega);
  if (p == q) throw Error(ErrorCode::SameVertex, "both arguments are the same parabolic subgroup");
  return p.omega * q.omega == q.omega * p.omega;
}

ParabolicSubgroup conjugate_parabolic(const ParabolicSubgroup& p, const GarsideElement& b) {
  require_same_group(p.omega, b);
  ParabolicSubgroup out = p;
  out.witness = p.witness * b;
  out.omega = b.inverse() * p.omega * b;
  return out;
}

std::map<std::string, GenSet> standard_omega_table(const GroupPtr& group) {
  std::map<std::string, GenSet> table;
  for (GenSet t : group->graph().proper_irreducible_subsets())
    table.emplace(standard_parabolic(group, t).key(), t);
  return table;
}

Standardization simultaneous_standardize(const ParabolicSubgroup& p, const ParabolicSubgroup& q,
                                         int radius) {
  if (p == q) throw Error(ErrorCode::SameVertex, "both arguments are the same parabolic subgroup");
  if (!omega_commute_edge(p, q))
    throw Error(ErrorCode::PreconditionViolated, "Omega_P and Omega_Q do not commute");
  const GroupPtr& group = p.group;
  const auto table = standard_omega_table(group);
  for (const GarsideElement& g : simple_length_ball(group, radius)) {
    const GarsideElement gi = g.inverse();
    const auto i1 = table.find((gi * p.omega * g).render());
    if (i1 == table.end()) continue;
    const auto i2 = table.find((gi * q.omega * g).render());
    if (i2 == table.end()) continue;
    return {g, i1->second, i2->second};
  }
  throw Error(ErrorCode::NotFoundWithinRadius,
              "no simultaneous standardizer with simple length <= " + std::to_string(radius));
}

}  // namespace garside
