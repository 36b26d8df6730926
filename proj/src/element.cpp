#include "garside/element.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>
#include <sstream>

#include "garside/error.hpp"

namespace garside {

int LetterWord::signed_length() const {
  int total = 0;
  for (const Letter& l : letters) total += l.power;
  return total;
}

namespace {

// Splits "s1s2s1" or "aba" into labels by longest match.
std::vector<int> split_labels(const std::vector<std::string>& labels, std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      const std::string& label = labels[i];
      if (label.size() > best_len && text.substr(pos, label.size()) == label) {
        best = i;
        best_len = label.size();
      }
    }
    if (best < 0) return {};
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

std::string replace_sigma(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xCF &&
        static_cast<unsigned char>(text[i + 1]) == 0x83) {
      out += 's';
      ++i;
    } else if (text[i] == '|' || text[i] == '*' || text[i] == '.') {
      out += ' ';
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

LetterWord parse_word(const CoxeterGraph& g, std::string_view text) {
  LetterWord word;
  std::istringstream in(replace_sigma(text));
  std::string token;
  while (in >> token) {
    std::string name = token;
    int power = 1;
    const auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exp = token.substr(caret + 1);
      if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}') exp = exp.substr(1, exp.size() - 2);
      const auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
      if (ec != std::errc() || ptr != exp.data() + exp.size() || exp.empty())
        throw Error(ErrorCode::ParseError, "bad exponent in token '" + token + "'");
    }
    if (name.empty()) throw Error(ErrorCode::ParseError, "empty generator in token '" + token + "'");
    if (name == "1" || name == "e") continue;
    const int direct = g.index_of(name);
    if (direct >= 0) {
      if (power != 0) word.letters.push_back({direct, power});
      continue;
    }
    if (name == "D" || name == "Δ" || name == "Delta") {
      if (power != 0) word.letters.push_back({kDeltaLetter, power});
      continue;
    }
    std::vector<int> parts = split_labels(g.labels(), name);
    // Rank-2 graphs accept both the dihedral a, b and the s1, s2 spellings.
    if (parts.empty() && g.rank() == 2) {
      const bool dihedral = g.labels()[0] == "a";
      parts = split_labels(dihedral ? std::vector<std::string>{"s1", "s2"}
                                    : std::vector<std::string>{"a", "b"},
                           name);
    }
    if (parts.empty()) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) word.letters.push_back({parts[i], 1});
    if (power != 0) word.letters.push_back({parts.back(), power});
  }
  return word;
}

GarsideElement GarsideElement::from_simple(GroupPtr group, Simple x) {
  GarsideElement g(std::move(group));
  g.right_multiply_simple(x);
  return g;
}

GarsideElement GarsideElement::delta_power(GroupPtr group, int k) {
  GarsideElement g(std::move(group));
  g.p_ = k;
  return g;
}

GarsideElement GarsideElement::from_word(GroupPtr group, const LetterWord& word) {
  GarsideElement g(std::move(group));
  for (const Letter& l : word.letters) {
    if (l.gen == kDeltaLetter) {
      g.right_multiply_delta(l.power);
      continue;
    }
    if (l.gen < 0 || l.gen >= g.group_->rank())
      throw Error(ErrorCode::UnknownGenerator, "generator index out of range");
    const int sign = l.power > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(l.power); ++i) g.right_multiply_letter(l.gen, sign);
  }
  return g;
}

GarsideElement GarsideElement::from_factors(GroupPtr group, int p, const std::vector<Simple>& factors) {
  GarsideElement g = delta_power(std::move(group), p);
  for (Simple x : factors) g.right_multiply_simple(x);
  return g;
}

int GarsideElement::simple_length() const { return std::max(sup(), 0) - std::min(inf(), 0); }

void GarsideElement::right_multiply_simple(Simple x) {
  const CoxeterGroup& w = *group_;
  if (x == w.identity()) return;
  if (x == w.longest()) {
    right_multiply_delta(1);
    return;
  }
  factors_.push_back(x);
  normalize_tail(factors_.size() - 1);
}

// Restores left-weightedness after factors_[from] was appended, sweeping
// pairs right to left until one is already left-weighted.
void GarsideElement::normalize_tail(std::size_t from) {
  const CoxeterGroup& w = *group_;
  for (std::size_t i = from; i >= 1; --i) {
    Simple a = factors_[i - 1];
    Simple b = factors_[i];
    GenSet bad = w.left_descents(b) & ~w.right_descents(a);
    if (bad == 0) break;
    while (bad != 0) {
      const int t = std::countr_zero(bad);
      a = w.right_mul(a, t);
      b = w.left_mul(t, b);
      bad = w.left_descents(b) & ~w.right_descents(a);
    }
    factors_[i - 1] = a;
    factors_[i] = b;
  }
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead] == w.longest()) ++lead;
  if (lead > 0) {
    factors_.erase(factors_.begin(), factors_.begin() + lead);
    p_ += static_cast<int>(lead);
  }
  while (!factors_.empty() && factors_.back() == w.identity()) factors_.pop_back();
}

void GarsideElement::right_multiply_delta(int k) {
  p_ += k;
  if (k % 2 != 0)
    for (Simple& x : factors_) x = group_->tau(x);
}

void GarsideElement::right_multiply_letter(int gen, int sign) {
  const Simple s = group_->generator(gen);
  if (sign > 0) {
    right_multiply_simple(s);
  } else {
    right_multiply_simple(group_->right_complement(s));
    right_multiply_delta(-1);
  }
}

void GarsideElement::right_multiply(const GarsideElement& h) {
  require_same_group(*this, h);
  right_multiply_delta(h.p_);
  for (Simple y : h.factors_) right_multiply_simple(y);
}

GarsideElement GarsideElement::operator*(const GarsideElement& h) const {
  GarsideElement out = *this;
  out.right_multiply(h);
  return out;
}

GarsideElement GarsideElement::inverse() const {
  const CoxeterGroup& w = *group_;
  const int r = canonical_length();
  std::vector<Simple> inv;
  inv.reserve(r);
  for (int j = 0; j < r; ++j) {
    Simple x = w.left_complement(factors_[r - 1 - j]);
    if ((r - 1 - j + p_) % 2 != 0) x = w.tau(x);
    inv.push_back(x);
  }
  return from_factors(group_, -r - p_, inv);
}

GarsideElement GarsideElement::tau(int k) const {
  GarsideElement out = *this;
  if (k % 2 != 0)
    for (Simple& x : out.factors_) x = group_->tau(x);
  return out;
}

GarsideElement GarsideElement::prefix(int k) const {
  GarsideElement out(group_);
  out.p_ = p_;
  const int n = std::clamp(k, 0, canonical_length());
  out.factors_.assign(factors_.begin(), factors_.begin() + n);
  return out;
}

int GarsideElement::exponent_sum() const {
  int total = p_ * group_->max_length();
  for (Simple x : factors_) total += group_->length(x);
  return total;
}

std::string GarsideElement::render() const {
  std::string out = "D^" + std::to_string(p_);
  for (Simple x : factors_) out += " | " + group_->render(x);
  return out;
}

std::string GarsideElement::to_word() const {
  std::string out;
  if (p_ != 0) out = "D^" + std::to_string(p_);
  for (Simple x : factors_)
    for (int s : group_->reduced_word(x)) {
      if (!out.empty()) out += ' ';
      out += group_->graph().labels()[s];
    }
  return out.empty() ? "1" : out;
}

bool operator==(const GarsideElement& a, const GarsideElement& b) {
  return a.p_ == b.p_ && a.factors_ == b.factors_ &&
         (a.group_ == b.group_ || (a.group_ && b.group_ && same_group(*a.group_, *b.group_)));
}

bool operator<(const GarsideElement& a, const GarsideElement& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return a.factors_ < b.factors_;
}

std::size_t GarsideElementHash::operator()(const GarsideElement& g) const noexcept {
  std::size_t h = std::hash<int>()(g.inf()) * 0x9e3779b97f4a7c15ull;
  for (Simple x : g.factors()) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
  return h;
}

void require_same_group(const GarsideElement& g, const GarsideElement& h) {
  if (!g.group() || !h.group() || !same_group(*g.group(), *h.group()))
    throw Error(ErrorCode::GroupMismatch, "elements belong to different groups");
}

GarsideElement normal_form(const GroupPtr& group, const LetterWord& w) {
  return GarsideElement::from_word(group, w);
}

GarsideElement multiply(const GarsideElement& g, const GarsideElement& h) { return g * h; }
GarsideElement invert(const GarsideElement& g) { return g.inverse(); }
int exponent_sum(const GarsideElement& g) { return g.exponent_sum(); }
GarsideElement tau_twist(const GarsideElement& g) { return g.tau(1); }

bool are_equal(const GarsideElement& g, const GarsideElement& h) {
  require_same_group(g, h);
  return g == h;
}

GarsideElement delta_of(const GroupPtr& group, GenSet t) {
  if (t == 0) throw Error(ErrorCode::EmptySubset, "Delta of the empty subset");
  return GarsideElement::from_simple(group, group->longest_element(t));
}

OmegaResult omega_of(const GroupPtr& group, GenSet t) {
  if (t == 0) throw Error(ErrorCode::EmptySubset, "Omega of the empty subset");
  if (!group->graph().is_connected(t))
    throw Error(ErrorCode::ReducibleSubset, "subset " + group->graph().render_subset(t) +
                                                " is not irreducible");
  const GarsideElement d = delta_of(group, t);
  const GarsideElement d_inv = d.inverse();
  bool central = true;
  for (int s : members(t)) {
    const GarsideElement gen = GarsideElement::from_simple(group, group->generator(s));
    central = central && d * gen * d_inv == gen;
  }
  return {central ? d : d * d, central};
}

GarsideElement parse_element(const GroupPtr& group, std::string_view text) {
  return normal_form(group, parse_word(group->graph(), text));
}

std::ostream& operator<<(std::ostream& os, const GarsideElement& g) {
  return os << (g.group() ? g.render() : std::string("<empty>"));
}

bool shortlex_less(const GarsideElement& a, const GarsideElement& b) {
  if (a.simple_length() != b.simple_length()) return a.simple_length() < b.simple_length();
  return a < b;
}

}  // namespace garside
