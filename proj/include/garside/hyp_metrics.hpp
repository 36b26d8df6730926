#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "garside/absorbable.hpp"
#include "garside/element.hpp"
#include "garside/metric_graph.hpp"
#include "garside/parabolic.hpp"

namespace garside {

enum class GensetKind { XP, XNP, Xabs, Simples, FiniteSPlusDelta2, Custom };

std::string_view genset_kind_name(GensetKind kind);
GensetKind parse_genset_kind(std::string_view text);

// Membership predicate for an (infinite) symmetric generating set together
// with a bounded enumerator. Sizes are measured by simple_length.
class GeneratingSetOracle {
 public:
  using Predicate = std::function<Verdict(const GarsideElement&)>;

  GeneratingSetOracle(GroupPtr group, GensetKind kind,
                      std::uint64_t witness_bound = kDefaultWitnessBound);
  static GeneratingSetOracle custom(GroupPtr group, std::string name, Predicate member);

  const GroupPtr& group() const { return group_; }
  GensetKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::uint64_t witness_bound() const { return witness_bound_; }

  // Unknown only for Xabs when the witness search was truncated.
  Verdict verdict(const GarsideElement& g) const;
  bool membership(const GarsideElement& g) const { return verdict(g) == Verdict::Yes; }

  // Nontrivial members with simple_length <= bound, shortlex order.
  std::vector<GarsideElement> enumerate_up_to(int bound) const;

 private:
  GroupPtr group_;
  GensetKind kind_;
  std::string name_;
  std::uint64_t witness_bound_ = kDefaultWitnessBound;
  Predicate custom_;
};

GeneratingSetOracle genset_oracle(const GroupPtr& group, GensetKind kind,
                                  std::uint64_t witness_bound = kDefaultWitnessBound);
std::vector<GarsideElement> enumerate_genset(const GeneratingSetOracle& o, int len_bound);

// Cayley ball of a generating set. Vertices are reached from 1 by at most
// `radius` steps g -> g x with x a member of simple_length <= generator_len
// (default universe_len), never leaving simple_length <= universe_len.
MetricGraph bounded_ball_graph(const GeneratingSetOracle& o, int radius, int universe_len,
                               int generator_len = -1);

struct WordLength {
  enum class Kind { Exact, Upper, Unknown };
  Kind kind = Kind::Unknown;
  int value = -1;
  std::string render() const;
};

WordLength word_length_bound(const GarsideElement& g, const GeneratingSetOracle& o,
                             int universe_len);

// g Delta^-inf(g), the inf-0 representative of the coset g<Delta>.
GarsideElement coset_representative(const GarsideElement& g);
std::string coset_key(const GarsideElement& g);

// Cay(A, simples) / <Delta>: cosets with representatives of canonical
// length <= len_bound.
MetricGraph quotient_cayley_graph(const GroupPtr& group, int len_bound);

// Same vertices; edges by proper simples and by census absorbables of
// canonical length <= len_bound.
MetricGraph build_cal_graph(const GroupPtr& group, int len_bound,
                            std::uint64_t witness_bound = kDefaultWitnessBound);

struct CparabGraph {
  MetricGraph graph;
  std::vector<ParabolicSubgroup> subgroups;  // indexed like graph vertices
  int center = -1;
};

// omega_commute graph on the given subgroups (duplicates merged, shortlex
// order).
CparabGraph cparab_graph_on(std::vector<ParabolicSubgroup> subgroups);

// g^-1 A_T g for every proper irreducible T and canonical_length(g) <= conj_len.
std::vector<ParabolicSubgroup> parabolic_conjugates(const GroupPtr& group, int conj_len);

CparabGraph build_cparab_neighborhood(const ParabolicSubgroup& p0, int conj_len, int hops);

struct FatTriangleReport {
  int length = 0;
  int pair_checks = 0;
  int pair_failures = 0;
  int corner_checks = 0;
  int corner_failures = 0;
  std::vector<std::string> failures;  // first few, human readable
  bool passed() const { return pair_failures == 0 && corner_failures == 0; }
};

FatTriangleReport fat_triangle_distances(const FatTriangle& t, const MetricGraph& q);

struct DiameterBound {
  int diameter = 0;
  int images = 0;
  int vertices = 0;
  int conj_len = 0;
};

// Diameter of the given subgroups inside the C_parab truncation spanned by
// their conj_len neighbourhoods.
DiameterBound parabolic_set_diameter(const std::vector<ParabolicSubgroup>& images, int conj_len);

// Images of a triangle vertex v are v A_T v^-1 for proper irreducible T.
DiameterBound cparab_image_diameter(const FatTriangle& t, int conj_len);

struct DeltaEstimate {
  int twice_delta = 0;  // the defect is a half-integer
  bool exact = false;
  std::uint64_t tuples = 0;
  std::uint64_t seed = 0;
  double value() const { return twice_delta / 2.0; }
  std::string render() const;
};

DeltaEstimate estimate_delta(const MetricGraph& q, std::uint64_t sample, std::uint64_t seed = 1,
                             bool per_component = false);

struct QiOptions {
  int gsearch_radius = 2;
  int lipschitz_samples = 1000;
  int max_word = 4;
  std::uint64_t seed = 1;
};

struct QiReport {
  int m1 = 0;
  int m2 = 0;
  int m3 = 0;
  bool m2_exact = true;
  bool m3_exact = true;
  std::vector<int> a0;  // orbit representatives (indices into q)
  int samples = 0;
  int lipschitz_failures = 0;
  int max_distance = 0;
  std::uint64_t seed = 0;
};

// Quasi-isometry constants M1, M2, M3 for A acting on C_parab by
// g . P = g P g^-1. reps and edge_reps index q's vertices.
QiReport qi_constants(const CparabGraph& q, const std::vector<int>& reps,
                      const std::vector<std::pair<int, int>>& edge_reps, const QiOptions& opts = {});

// g . P = g P g^-1.
ParabolicSubgroup left_act(const GarsideElement& g, const ParabolicSubgroup& p);
bool stabilizes(const GarsideElement& g, const ParabolicSubgroup& p);

}  // namespace garside
