#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace garside {

// Subsets of generators are bitmasks; bit i is generator i.
using GenSet = std::uint32_t;

inline constexpr GenSet gen_bit(int s) { return GenSet{1} << s; }
inline constexpr GenSet full_set(int rank) {
  return rank >= 32 ? ~GenSet{0} : (gen_bit(rank) - 1);
}
int popcount(GenSet t);
std::vector<int> members(GenSet t);

inline constexpr std::uint64_t kDefaultOrderCap = 52000;

enum class Side { Left, Right };

// A Coxeter diagram. m(s,t) == 0 encodes infinity; the diagonal is 1.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  // Validates symmetry, diagonal and sphericity, and derives the family tag
  // (components joined by 'x', e.g. "A1xA1").
  static CoxeterGraph from_matrix(std::vector<std::string> labels,
                                  std::vector<std::vector<int>> matrix);

  int rank() const { return static_cast<int>(labels_.size()); }
  int m(int s, int t) const { return matrix_[s][t]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  const std::string& family_tag() const { return family_tag_; }

  // Index of a generator label, or -1.
  int index_of(std::string_view label) const;

  // Connectedness of the sub-diagram on T (edges where m >= 3).
  bool is_connected(GenSet t) const;
  bool is_irreducible() const { return is_connected(full_set(rank())); }

  // Proper (T != S), nonempty, connected subsets in increasing bitmask order.
  std::vector<GenSet> proper_irreducible_subsets() const;

  // Order of W by closed form per component; nullopt if it overflows 64 bits.
  std::optional<std::uint64_t> closed_form_order() const;

  // Whether the minimal central element of the irreducible group on this
  // diagram is Delta itself, read off from the family tag.
  bool delta_is_central() const;

  std::string render_subset(GenSet t) const;

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> matrix_;
  std::string family_tag_;
};

// Grammar: A<n>=1.. | B<n>=2.. | D<n>=4.. | E6|E7|E8 | F4 | H3 | H4 | I2(<m>=3..).
// Labels are s1..sn, or a,b for I2(m). I2(3) and I2(4) are tagged A2 and B2.
CoxeterGraph parse_group_spec(std::string_view spec);

struct GraphProperties {
  bool irreducible = false;
  std::uint64_t coxeter_order = 0;
  int rank = 0;
};

GraphProperties graph_properties(const CoxeterGraph& g,
                                 std::uint64_t order_cap = kDefaultOrderCap);

// Parses "s1,s3" (or "a,b") into a subset; an empty string gives EmptySubset.
GenSet parse_subset(const CoxeterGraph& g, std::string_view text);

using Simple = std::uint32_t;

enum class ElementModel { Auto, Family, Reflection };

struct BuildOptions {
  std::uint64_t order_cap = kDefaultOrderCap;
  ElementModel model = ElementModel::Auto;
};

// The finite Coxeter group W, enumerated breadth first from the identity with
// generators tried in index order. Element ids therefore depend only on the
// Coxeter system, not on the model used to enumerate it. Id 0 is the identity.
// These elements are exactly the Garside simples of the Artin group.
class CoxeterGroup {
 public:
  static std::shared_ptr<const CoxeterGroup> build(const CoxeterGraph& graph,
                                                   const BuildOptions& opts = {});

  // Rebuilds from a right-multiplication table (cache path). Returns nullptr
  // when the table is not a consistent enumeration of this graph.
  static std::shared_ptr<const CoxeterGroup> from_right_table(
      const CoxeterGraph& graph, std::vector<Simple> right_table);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return rank_; }
  std::size_t order() const { return length_.size(); }
  ElementModel model_used() const { return model_used_; }

  Simple identity() const { return 0; }
  Simple longest() const { return longest_; }
  Simple generator(int s) const { return right_[s]; }
  int max_length() const { return length_[longest_]; }

  int length(Simple w) const { return length_[w]; }
  Simple right_mul(Simple w, int s) const { return right_[w * rank_ + s]; }
  Simple left_mul(int s, Simple w) const { return left_[w * rank_ + s]; }
  GenSet right_descents(Simple w) const { return rdesc_[w]; }
  GenSet left_descents(Simple w) const { return ldesc_[w]; }
  GenSet descents(Simple w, Side side) const {
    return side == Side::Left ? ldesc_[w] : rdesc_[w];
  }
  GenSet support(Simple w) const { return support_[w]; }
  Simple inverse(Simple w) const { return inverse_[w]; }
  // w0 w w0.
  Simple tau(Simple w) const { return tau_[w]; }
  // w^-1 w0, so that w * right_complement(w) = w0.
  Simple right_complement(Simple w) const { return rcomp_[w]; }
  // w0 w^-1, so that left_complement(w) * w = w0.
  Simple left_complement(Simple w) const { return lcomp_[w]; }

  // Product in W; memoized, safe for concurrent callers.
  Simple multiply(Simple u, Simple v) const;
  Simple evaluate(std::span<const int> word) const;

  // Lexicographically least reduced word (by generator index).
  std::vector<int> reduced_word(Simple w) const;
  std::string render(Simple w) const;

  Simple longest_element(GenSet t) const;
  bool divides(Simple u, Simple v, Side side) const;
  bool in_parabolic(Simple w, GenSet t) const { return (support_[w] & ~t) == 0; }

  const std::vector<Simple>& right_table() const { return right_; }

  // Memo table access for persistence.
  std::vector<std::pair<std::uint64_t, Simple>> memo_snapshot() const;
  void preload_memo(std::span<const std::pair<std::uint64_t, Simple>> entries) const;

 private:
  CoxeterGroup() = default;
  void finish();

  CoxeterGraph graph_;
  int rank_ = 0;
  ElementModel model_used_ = ElementModel::Family;
  Simple longest_ = 0;
  std::vector<Simple> right_, left_;
  std::vector<int> length_;
  std::vector<Simple> parent_;
  std::vector<int> parent_gen_;
  std::vector<GenSet> rdesc_, ldesc_, support_;
  std::vector<Simple> inverse_, tau_, rcomp_, lcomp_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, Simple> memo_;
};

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

bool same_group(const CoxeterGroup& a, const CoxeterGroup& b);

// Value type for a single element of W tied to its group.
struct SimpleElement {
  GroupPtr group;
  Simple value = 0;

  int length() const { return group->length(value); }
  friend bool operator==(const SimpleElement& a, const SimpleElement& b) {
    return same_group(*a.group, *b.group) && a.value == b.value;
  }
};

SimpleElement element_multiply(const SimpleElement& u, const SimpleElement& v);
GenSet descents(const SimpleElement& w, Side side);
SimpleElement longest_element(const GroupPtr& g, GenSet t);
bool weak_order_divides(const SimpleElement& u, const SimpleElement& v, Side side);

}  // namespace garside
