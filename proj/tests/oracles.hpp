#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "garside/coxeter.hpp"

namespace oracle {

using Word = std::vector<int>;

// Shortlex-least reduced word for the element of W represented by a word,
// using only Tits' solution of the word problem: braid moves plus ss -> 1.
class TitsRewriter {
 public:
  explicit TitsRewriter(std::vector<std::vector<int>> m) : m_(std::move(m)) {}

  Word canonical(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Word result = reduce(w);
    memo_.emplace(w, result);
    return result;
  }

 private:
  Word reduce(const Word& w) {
    std::set<Word> seen{w};
    std::vector<Word> stack{w};
    while (!stack.empty()) {
      Word cur = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i] == cur[i + 1]) {
          Word shorter(cur.begin(), cur.begin() + i);
          shorter.insert(shorter.end(), cur.begin() + i + 2, cur.end());
          return canonical(shorter);
        }
      }
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const int s = cur[i];
        if (i + 1 >= cur.size()) break;
        const int t = cur[i + 1];
        const int mst = m_[s][t];
        if (i + mst > cur.size()) continue;
        bool alternating = true;
        for (int k = 0; k < mst && alternating; ++k)
          alternating = cur[i + k] == (k % 2 == 0 ? s : t);
        if (!alternating) continue;
        Word next = cur;
        for (int k = 0; k < mst; ++k) next[i + k] = (k % 2 == 0 ? t : s);
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    return *seen.begin();  // std::set orders lexicographically; all same length here
  }

  std::vector<std::vector<int>> m_;
  std::map<Word, Word> memo_;
};

}  // namespace oracle

namespace oracle {

// Left normal form of a positive word computed from scratch: enumerate the
// whole class of positive words equal to it (braid moves only), read off the
// simple prefixes, keep the unique longest one and recurse on the rest.
class PositiveGreedy {
 public:
  PositiveGreedy(std::vector<std::vector<int>> m, int rank)
      : m_(m), rank_(rank), tits_(std::move(m)) {
    // w0 is the longest element reachable by Tits canonical forms.
    Word w;
    for (;;) {
      bool grew = false;
      for (int s = 0; s < rank_ && !grew; ++s) {
        Word next = w;
        next.push_back(s);
        if (tits_.canonical(next).size() == next.size()) {
          w = next;
          grew = true;
        }
      }
      if (!grew) break;
    }
    w0_ = tits_.canonical(w);
  }

  const Word& w0() const { return w0_; }
  TitsRewriter& tits() { return tits_; }

  // tau on a generator: the letter of w0 s w0.
  int tau(int s) {
    Word w = w0_;
    w.push_back(s);
    w.insert(w.end(), w0_.begin(), w0_.end());
    const Word c = tits_.canonical(w);
    return c.at(0);
  }

  struct Result {
    int p = 0;
    std::vector<Word> factors;  // lex-least reduced words
  };

  Result positive(const Word& word) {
    Result r;
    Word rest = word;
    while (!rest.empty()) {
      std::set<Word> cls = braid_class(rest);
      Word head;
      std::set<Word> heads;
      for (const Word& w : cls)
        for (std::size_t k = 1; k <= w.size(); ++k) {
          Word pre(w.begin(), w.begin() + k);
          if (tits_.canonical(pre).size() != k) break;
          heads.insert(tits_.canonical(pre));
        }
      std::size_t best = 0;
      for (const Word& h : heads) best = std::max(best, h.size());
      int count = 0;
      for (const Word& h : heads)
        if (h.size() == best) {
          head = h;
          ++count;
        }
      if (count != 1) throw std::logic_error("oracle: head not unique");
      Word next;
      bool found = false;
      for (const Word& w : cls) {
        Word pre(w.begin(), w.begin() + best);
        if (tits_.canonical(pre) == head) {
          next.assign(w.begin() + best, w.end());
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("oracle: head lost");
      if (head.size() == w0_.size()) {
        if (!r.factors.empty()) throw std::logic_error("oracle: Delta after a proper factor");
        ++r.p;
      } else {
        r.factors.push_back(head);
      }
      rest = next;
    }
    return r;
  }

  // Signed letters: (generator, +1/-1). Each s^-1 becomes Delta^-1 times the
  // positive word for s w0, and the Deltas are pulled to the front.
  Result mixed(const std::vector<std::pair<int, int>>& letters) {
    int deltas = 0;
    Word pos;
    for (auto [s, sign] : letters) {
      if (sign > 0) {
        pos.push_back(s);
      } else {
        // s^-1 = (s w0) Delta^-1; the Delta^-1 moves left across pos.
        Word rc{s};
        rc.insert(rc.end(), w0_.begin(), w0_.end());
        rc = tits_.canonical(rc);
        pos.insert(pos.end(), rc.begin(), rc.end());
        for (int& x : pos) x = tau(x);
        ++deltas;
      }
    }
    Result r = positive(pos);
    r.p -= deltas;
    return r;
  }

 private:
  std::set<Word> braid_class(const Word& w) {
    std::set<Word> seen{w};
    std::vector<Word> stack{w};
    while (!stack.empty()) {
      Word cur = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        const int s = cur[i], t = cur[i + 1];
        if (s == t) continue;
        const int mst = m_[s][t];
        if (i + mst > cur.size()) continue;
        bool alternating = true;
        for (int k = 0; k < mst && alternating; ++k) alternating = cur[i + k] == (k % 2 == 0 ? s : t);
        if (!alternating) continue;
        Word next = cur;
        for (int k = 0; k < mst; ++k) next[i + k] = (k % 2 == 0 ? t : s);
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    return seen;
  }

  std::vector<std::vector<int>> m_;
  int rank_;
  TitsRewriter tits_;
  Word w0_;
};

}  // namespace oracle

namespace oracle {

// Laurent polynomials in t, keyed by exponent, zero coefficients dropped.
using Laurent = std::map<int, long long>;

inline Laurent laurent_add(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, c] : b)
    if ((r[e] += c) == 0) r.erase(e);
  return r;
}

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b)
      if ((r[e1 + e2] += c1 * c2) == 0) r.erase(e1 + e2);
  return r;
}

// Unreduced Burau representation of the braid group on `strands` strands.
// Faithful for 3 strands; for more strands equal braids still have equal
// matrices, so a mismatch certifies inequality.
using Burau = std::vector<std::vector<Laurent>>;

inline Burau burau_identity(int strands) {
  Burau m(strands, std::vector<Laurent>(strands));
  for (int i = 0; i < strands; ++i) m[i][i] = {{0, 1}};
  return m;
}

inline Burau burau_times(const Burau& a, const Burau& b) {
  const std::size_t n = a.size();
  Burau r(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].empty()) r[i][j] = laurent_add(r[i][j], laurent_mul(a[i][k], b[k][j]));
    }
  return r;
}

// sigma_{i+1}^{sign}, i zero-based.
inline Burau burau_generator(int strands, int i, int sign) {
  Burau m = burau_identity(strands);
  if (sign > 0) {
    m[i][i] = {{0, 1}, {1, -1}};
    m[i][i + 1] = {{1, 1}};
    m[i + 1][i] = {{0, 1}};
    m[i + 1][i + 1] = {};
  } else {
    m[i][i] = {};
    m[i][i + 1] = {{0, 1}};
    m[i + 1][i] = {{-1, 1}};
    m[i + 1][i + 1] = {{0, 1}, {-1, -1}};
  }
  return m;
}

inline Burau burau_word(int strands, const std::vector<std::pair<int, int>>& letters) {
  Burau m = burau_identity(strands);
  for (auto [s, sign] : letters) m = burau_times(m, burau_generator(strands, s, sign));
  return m;
}

}  // namespace oracle
