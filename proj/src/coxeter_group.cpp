#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>

#include "garside/coxeter.hpp"
#include "garside/error.hpp"
#include "garside/exact_ring.hpp"

namespace garside {
namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// A faithful right action of the generators on some finite set of states,
// together with the state of the identity.
struct Model {
  State identity;
  std::function<void(State&, int)> apply;
};

bool single_family(const CoxeterGraph& g, char family) {
  const std::string& tag = g.family_tag();
  return tag.find('x') == std::string::npos && !tag.empty() && tag[0] == family;
}

std::optional<Model> family_model(const CoxeterGraph& g) {
  const int n = g.rank();
  // Family models assume the standard labelling, so only graphs that are
  // literally the standard matrix qualify.
  auto matches = [&](const std::string& spec) {
    try {
      return parse_group_spec(spec).matrix() == g.matrix();
    } catch (const Error&) {
      return false;
    }
  };
  const std::string& tag = g.family_tag();
  if (n == 2 && g.m(0, 1) >= 3) {
    const int m = g.m(0, 1);
    Model model;
    model.identity = {0, 0};
    model.apply = [m](State& st, int s) {
      if (s == 0) {
        st[1] ^= 1;
      } else if (st[1] == 0) {
        st[0] = (st[0] + m - 1) % m;
        st[1] = 1;
      } else {
        st[0] = (st[0] + 1) % m;
        st[1] = 0;
      }
    };
    return model;
  }
  if (single_family(g, 'A') && matches(tag)) {
    Model model;
    model.identity.resize(n + 1);
    std::iota(model.identity.begin(), model.identity.end(), 1);
    model.apply = [](State& st, int s) { std::swap(st[s], st[s + 1]); };
    return model;
  }
  if (single_family(g, 'B') && matches(tag)) {
    Model model;
    model.identity.resize(n);
    std::iota(model.identity.begin(), model.identity.end(), 1);
    model.apply = [n](State& st, int s) {
      if (s == n - 1) {
        st[n - 1] = -st[n - 1];
      } else {
        std::swap(st[s], st[s + 1]);
      }
    };
    return model;
  }
  if (single_family(g, 'D') && matches(tag)) {
    Model model;
    model.identity.resize(n);
    std::iota(model.identity.begin(), model.identity.end(), 1);
    model.apply = [n](State& st, int s) {
      if (s == n - 1) {
        std::swap(st[n - 2], st[n - 1]);
        st[n - 2] = -st[n - 2];
        st[n - 1] = -st[n - 1];
      } else {
        std::swap(st[s], st[s + 1]);
      }
    };
    return model;
  }
  return std::nullopt;
}

// Geometric representation: W acts on the span of simple roots, and the
// matrix of w (columns are images of the simple roots) is the state.
Model reflection_model(const CoxeterGraph& g) {
  const int n = g.rank();
  int conductor = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) conductor = std::lcm(conductor, g.m(i, j));
  auto ring = std::make_shared<CosineRing>(conductor);
  const int d = ring->degree();
  // coeff[j][k] = 2cos(pi/m_jk) for j != k.
  auto coeff = std::make_shared<std::vector<std::vector<CosineRing::Value>>>(
      n, std::vector<CosineRing::Value>(n, ring->zero()));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (j != k) (*coeff)[j][k] = ring->two_cos_pi_over(g.m(j, k));

  Model model;
  model.identity.assign(static_cast<std::size_t>(n) * n * d, 0);
  const CosineRing::Value one = ring->from_int(1);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < d; ++c)
      model.identity[(static_cast<std::size_t>(i) * n + i) * d + c] = one[c];

  model.apply = [ring, coeff, n, d](State& st, int j) {
    auto entry = [&](int row, int col) {
      const std::size_t base = (static_cast<std::size_t>(row) * n + col) * d;
      return CosineRing::Value(st.begin() + base, st.begin() + base + d);
    };
    auto store = [&](int row, int col, const CosineRing::Value& v) {
      const std::size_t base = (static_cast<std::size_t>(row) * n + col) * d;
      std::copy(v.begin(), v.end(), st.begin() + base);
    };
    for (int row = 0; row < n; ++row) {
      const CosineRing::Value mj = entry(row, j);
      if (ring->is_zero(mj)) continue;
      for (int k = 0; k < n; ++k) {
        if (k == j || ring->is_zero((*coeff)[j][k])) continue;
        CosineRing::Value v = entry(row, k);
        ring->add_scaled(v, (*coeff)[j][k], mj);
        store(row, k, v);
      }
      store(row, j, ring->neg(mj));
    }
  };
  return model;
}

std::vector<Simple> enumerate(const Model& model, int rank, std::uint64_t cap) {
  std::unordered_map<State, Simple, StateHash> ids;
  std::vector<State> states{model.identity};
  ids.emplace(model.identity, 0);
  std::vector<Simple> right;
  for (std::size_t w = 0; w < states.size(); ++w) {
    for (int s = 0; s < rank; ++s) {
      State next = states[w];
      model.apply(next, s);
      auto [it, inserted] = ids.emplace(next, static_cast<Simple>(states.size()));
      if (inserted) {
        if (states.size() >= cap)
          throw Error(ErrorCode::OrderOverflow, "enumeration exceeded the cap");
        states.push_back(std::move(next));
      }
      right.push_back(it->second);
    }
  }
  return right;
}

}  // namespace

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(const CoxeterGraph& graph,
                                                        const BuildOptions& opts) {
  const auto order = graph.closed_form_order();
  if (!order || *order > opts.order_cap)
    throw Error(ErrorCode::OrderOverflow, "|W| for " + graph.family_tag() +
                                              " exceeds the cap of " +
                                              std::to_string(opts.order_cap));
  std::shared_ptr<CoxeterGroup> group(new CoxeterGroup());
  group->graph_ = graph;
  group->rank_ = graph.rank();
  std::optional<Model> model;
  if (opts.model != ElementModel::Reflection) model = family_model(graph);
  if (model) {
    group->model_used_ = ElementModel::Family;
  } else {
    if (opts.model == ElementModel::Family)
      throw Error(ErrorCode::PreconditionViolated,
                  "no combinatorial model for " + graph.family_tag());
    model = reflection_model(graph);
    group->model_used_ = ElementModel::Reflection;
  }
  group->right_ = enumerate(*model, group->rank_, *order + 1);
  if (group->right_.size() != *order * group->rank_)
    throw Error(ErrorCode::PreconditionViolated, "enumeration disagrees with the closed-form order");
  group->finish();
  return group;
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::from_right_table(
    const CoxeterGraph& graph, std::vector<Simple> right_table) {
  const int n = graph.rank();
  const auto order = graph.closed_form_order();
  if (!order || right_table.size() != *order * n) return nullptr;
  const std::size_t size = *order;
  for (Simple v : right_table)
    if (v >= size) return nullptr;
  // Ids must be in discovery order of a breadth-first search.
  Simple next = 1;
  std::vector<bool> seen(size, false);
  seen[0] = true;
  for (std::size_t w = 0; w < size; ++w)
    for (int s = 0; s < n; ++s) {
      const Simple v = right_table[w * n + s];
      if (!seen[v]) {
        if (v != next) return nullptr;
        seen[v] = true;
        ++next;
      }
    }
  if (next != size) return nullptr;
  for (std::size_t w = 0; w < size; ++w) {
    for (int s = 0; s < n; ++s) {
      if (right_table[right_table[w * n + s] * n + s] != w) return nullptr;
      for (int t = s + 1; t < n; ++t) {
        Simple x = static_cast<Simple>(w), y = static_cast<Simple>(w);
        for (int k = 0; k < graph.m(s, t); ++k) {
          x = right_table[x * n + (k % 2 == 0 ? s : t)];
          y = right_table[y * n + (k % 2 == 0 ? t : s)];
        }
        if (x != y) return nullptr;
      }
    }
  }
  std::shared_ptr<CoxeterGroup> group(new CoxeterGroup());
  group->graph_ = graph;
  group->rank_ = n;
  group->model_used_ = ElementModel::Auto;
  group->right_ = std::move(right_table);
  group->finish();
  return group;
}

void CoxeterGroup::finish() {
  const std::size_t size = right_.size() / rank_;
  const int n = rank_;
  length_.assign(size, -1);
  parent_.assign(size, 0);
  parent_gen_.assign(size, -1);
  length_[0] = 0;
  for (std::size_t w = 0; w < size; ++w)
    for (int s = 0; s < n; ++s) {
      const Simple v = right_[w * n + s];
      if (length_[v] < 0) {
        length_[v] = length_[w] + 1;
        parent_[v] = static_cast<Simple>(w);
        parent_gen_[v] = s;
      }
    }

  rdesc_.assign(size, 0);
  for (std::size_t w = 0; w < size; ++w)
    for (int s = 0; s < n; ++s)
      if (length_[right_[w * n + s]] < length_[w]) rdesc_[w] |= gen_bit(s);

  longest_ = static_cast<Simple>(
      std::max_element(length_.begin(), length_.end()) - length_.begin());

  left_.assign(size * n, 0);
  support_.assign(size, 0);
  inverse_.assign(size, 0);
  for (int s = 0; s < n; ++s) left_[s] = right_[s];
  for (std::size_t w = 1; w < size; ++w) {
    const Simple p = parent_[w];
    const int t = parent_gen_[w];
    for (int s = 0; s < n; ++s) left_[w * n + s] = right_[left_[p * n + s] * n + t];
    support_[w] = support_[p] | gen_bit(t);
    inverse_[w] = left_[inverse_[p] * n + t];
  }
  ldesc_.assign(size, 0);
  for (std::size_t w = 0; w < size; ++w)
    for (int s = 0; s < n; ++s)
      if (length_[left_[w * n + s]] < length_[w]) ldesc_[w] |= gen_bit(s);

  // Conjugation by w0 permutes the generators.
  const std::vector<int> w0_word = reduced_word(longest_);
  std::vector<int> tau_gen(n);
  for (int s = 0; s < n; ++s) {
    Simple x = right_[longest_ * n + s];
    for (int u : w0_word) x = right_[x * n + u];
    tau_gen[s] = static_cast<int>(std::find(right_.begin(), right_.begin() + n, x) - right_.begin());
  }
  tau_.assign(size, 0);
  rcomp_.assign(size, 0);
  rcomp_[0] = longest_;
  for (std::size_t w = 1; w < size; ++w) {
    const Simple p = parent_[w];
    const int t = parent_gen_[w];
    tau_[w] = right_[tau_[p] * n + tau_gen[t]];
    rcomp_[w] = left_[rcomp_[p] * n + t];
  }
  lcomp_.assign(size, 0);
  for (std::size_t w = 0; w < size; ++w) lcomp_[w] = tau_[rcomp_[w]];
}

Simple CoxeterGroup::multiply(Simple u, Simple v) const {
  if (v == 0) return u;
  if (u == 0) return v;
  if (length_[v] == 1) return right_mul(u, parent_gen_[v]);
  const std::uint64_t key = static_cast<std::uint64_t>(u) * order() + v;
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // Walk v back to the identity along parents, then apply the word forwards.
  std::vector<int> word;
  word.reserve(length_[v]);
  for (Simple x = v; x != 0; x = parent_[x]) word.push_back(parent_gen_[x]);
  Simple r = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = right_mul(r, *it);
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(key, r);
  return r;
}

Simple CoxeterGroup::evaluate(std::span<const int> word) const {
  Simple r = 0;
  for (int s : word) {
    if (s < 0 || s >= rank_) throw Error(ErrorCode::UnknownGenerator, "generator index out of range");
    r = right_mul(r, s);
  }
  return r;
}

std::vector<int> CoxeterGroup::reduced_word(Simple w) const {
  std::vector<int> word;
  while (w != 0) {
    const int s = std::countr_zero(ldesc_[w]);
    word.push_back(s);
    w = left_mul(s, w);
  }
  return word;
}

std::string CoxeterGroup::render(Simple w) const {
  if (w == 0) return "1";
  std::string out;
  for (int s : reduced_word(w)) out += graph_.labels()[s];
  return out;
}

Simple CoxeterGroup::longest_element(GenSet t) const {
  if (t == 0) throw Error(ErrorCode::EmptySubset, "longest element of the empty subset");
  t &= full_set(rank_);
  Simple w = 0;
  for (;;) {
    const GenSet free = t & ~rdesc_[w];
    if (free == 0) return w;
    w = right_mul(w, std::countr_zero(free));
  }
}

bool CoxeterGroup::divides(Simple u, Simple v, Side side) const {
  const Simple q = side == Side::Left ? multiply(inverse_[u], v) : multiply(v, inverse_[u]);
  return length_[u] + length_[q] == length_[v];
}

std::vector<std::pair<std::uint64_t, Simple>> CoxeterGroup::memo_snapshot() const {
  std::shared_lock lock(memo_mutex_);
  std::vector<std::pair<std::uint64_t, Simple>> out(memo_.begin(), memo_.end());
  std::sort(out.begin(), out.end());
  return out;
}

void CoxeterGroup::preload_memo(std::span<const std::pair<std::uint64_t, Simple>> entries) const {
  const std::uint64_t limit = static_cast<std::uint64_t>(order()) * order();
  std::unique_lock lock(memo_mutex_);
  for (const auto& [key, value] : entries)
    if (key < limit && value < order()) memo_.emplace(key, value);
}

bool same_group(const CoxeterGroup& a, const CoxeterGroup& b) {
  return &a == &b || a.graph() == b.graph();
}

namespace {
void require_same(const SimpleElement& u, const SimpleElement& v) {
  if (!u.group || !v.group || !same_group(*u.group, *v.group))
    throw Error(ErrorCode::GroupMismatch, "elements belong to different groups");
}
}  // namespace

SimpleElement element_multiply(const SimpleElement& u, const SimpleElement& v) {
  require_same(u, v);
  return {u.group, u.group->multiply(u.value, v.value)};
}

GenSet descents(const SimpleElement& w, Side side) { return w.group->descents(w.value, side); }

SimpleElement longest_element(const GroupPtr& g, GenSet t) {
  return {g, g->longest_element(t)};
}

bool weak_order_divides(const SimpleElement& u, const SimpleElement& v, Side side) {
  require_same(u, v);
  return u.group->divides(u.value, v.value, side);
}

}  // namespace garside
