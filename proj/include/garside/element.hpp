#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "garside/coxeter.hpp"

namespace garside {

// One letter of an input word. gen == kDeltaLetter stands for Delta.
struct Letter {
  int gen = 0;
  int power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline constexpr int kDeltaLetter = -1;

struct LetterWord {
  std::vector<Letter> letters;
  int signed_length() const;
};

// Tokens are separated by whitespace: gen, gen^k, gen^-k, gen^{-k}. The token
// "D" (optionally powered) is Delta. A leading '1' or an empty string is the
// identity. Greek "σi" is accepted as an alias of "si".
LetterWord parse_word(const CoxeterGraph& g, std::string_view text);

// An element of the Artin group in left normal form Delta^p x_1 ... x_r where
// every x_i is a proper nontrivial simple and each pair is left-weighted.
class GarsideElement {
 public:
  GarsideElement() = default;
  explicit GarsideElement(GroupPtr group) : group_(std::move(group)) {}

  static GarsideElement from_simple(GroupPtr group, Simple x);
  static GarsideElement delta_power(GroupPtr group, int k);
  static GarsideElement from_word(GroupPtr group, const LetterWord& word);
  // Builds from (p, factors) and renormalizes; factors may be any simples.
  static GarsideElement from_factors(GroupPtr group, int p, const std::vector<Simple>& factors);

  const GroupPtr& group() const { return group_; }
  int inf() const { return p_; }
  int sup() const { return p_ + static_cast<int>(factors_.size()); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  // max(sup, 0) - min(inf, 0): the word length over the simples and their
  // inverses.
  int simple_length() const;
  const std::vector<Simple>& factors() const { return factors_; }
  bool is_identity() const { return p_ == 0 && factors_.empty(); }
  bool is_positive() const { return p_ >= 0; }

  void right_multiply_simple(Simple x);
  void right_multiply_delta(int k);
  void right_multiply_letter(int gen, int sign);
  void right_multiply(const GarsideElement& h);

  GarsideElement operator*(const GarsideElement& h) const;
  GarsideElement inverse() const;
  // Delta^-k g Delta^k.
  GarsideElement tau(int k = 1) const;

  // Positive prefix Delta^p x_1..x_k (k clamped) of an element with p >= 0.
  GarsideElement prefix(int k) const;

  int exponent_sum() const;

  // "D^p | x1 | x2 | ..."
  std::string render() const;
  // Letter word that evaluates to this element (Delta as "D").
  std::string to_word() const;

  friend bool operator==(const GarsideElement& a, const GarsideElement& b);
  friend bool operator<(const GarsideElement& a, const GarsideElement& b);

 private:
  void normalize_tail(std::size_t from);

  GroupPtr group_;
  int p_ = 0;
  std::vector<Simple> factors_;
};

struct GarsideElementHash {
  std::size_t operator()(const GarsideElement& g) const noexcept;
};

// Spec-level operations.
GarsideElement normal_form(const GroupPtr& group, const LetterWord& w);
GarsideElement multiply(const GarsideElement& g, const GarsideElement& h);
GarsideElement invert(const GarsideElement& g);
int exponent_sum(const GarsideElement& g);
GarsideElement tau_twist(const GarsideElement& g);
bool are_equal(const GarsideElement& g, const GarsideElement& h);

GarsideElement delta_of(const GroupPtr& group, GenSet t);
struct OmegaResult {
  GarsideElement element;
  bool is_delta = false;
};
OmegaResult omega_of(const GroupPtr& group, GenSet t);

// Convenience: parse and normalize in one step.
GarsideElement parse_element(const GroupPtr& group, std::string_view text);

// Shortlex-style total order key used for deterministic output.
bool shortlex_less(const GarsideElement& a, const GarsideElement& b);

void require_same_group(const GarsideElement& g, const GarsideElement& h);

// For test frameworks and logging.
std::ostream& operator<<(std::ostream& os, const GarsideElement& g);

}  // namespace garside
