#include "garside/hyp_metrics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "garside/enumerate.hpp"
#include "garside/error.hpp"
#include "garside/parallel.hpp"

namespace garside {

namespace {

bool is_delta_square_power(const GarsideElement& g) {
  return g.canonical_length() == 0 && g.inf() % 2 == 0;
}

bool is_dihedral(const GroupPtr& group) {
  return group->rank() == 2 && group->graph().is_irreducible();
}

std::string group_tag(const GroupPtr& group) { return group->graph().family_tag(); }

using ElementIndex = std::unordered_map<GarsideElement, int, GarsideElementHash>;

// Builds a graph whose vertex order is shortlex on the given elements.
// neighbors[i] lists indices into `elements`.
MetricGraph assemble(std::vector<GarsideElement> elements,
                     const std::vector<std::vector<int>>& neighbors,
                     const std::function<std::string(const GarsideElement&)>& key) {
  std::vector<int> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return shortlex_less(elements[a], elements[b]); });
  MetricGraph g;
  std::vector<int> pos(elements.size());
  for (int i : order) pos[i] = g.add_vertex(key(elements[i]));
  for (int i : order)
    for (int j : neighbors[i]) g.add_edge(pos[i], pos[j]);
  return g;
}

std::string render_element(const GarsideElement& g) { return g.render(); }

}  // namespace

std::string_view genset_kind_name(GensetKind kind) {
  switch (kind) {
    case GensetKind::XP: return "XP";
    case GensetKind::XNP: return "XNP";
    case GensetKind::Xabs: return "Xabs";
    case GensetKind::Simples: return "Simples";
    case GensetKind::FiniteSPlusDelta2: return "FiniteS_plus_Delta2";
    case GensetKind::Custom: return "Custom";
  }
  return "?";
}

GensetKind parse_genset_kind(std::string_view text) {
  for (GensetKind k : {GensetKind::XP, GensetKind::XNP, GensetKind::Xabs, GensetKind::Simples,
                       GensetKind::FiniteSPlusDelta2})
    if (text == genset_kind_name(k)) return k;
  throw Error(ErrorCode::ParseError, "unknown generating set '" + std::string(text) + "'");
}

GeneratingSetOracle::GeneratingSetOracle(GroupPtr group, GensetKind kind,
                                         std::uint64_t witness_bound)
    : group_(std::move(group)),
      kind_(kind),
      name_(genset_kind_name(kind)),
      witness_bound_(witness_bound) {
  if (kind == GensetKind::Custom)
    throw Error(ErrorCode::PreconditionViolated, "use GeneratingSetOracle::custom");
}

GeneratingSetOracle GeneratingSetOracle::custom(GroupPtr group, std::string name, Predicate member) {
  GeneratingSetOracle o(std::move(group), GensetKind::Simples);
  o.kind_ = GensetKind::Custom;
  o.name_ = std::move(name);
  o.custom_ = std::move(member);
  return o;
}

Verdict GeneratingSetOracle::verdict(const GarsideElement& g) const {
  if (g.group() && !same_group(*g.group(), *group_))
    throw Error(ErrorCode::GroupMismatch, "element and generating set use different groups");
  // The identity is the empty word in every kind.
  if (g.is_identity()) return Verdict::Yes;
  const auto yes = [](bool b) { return b ? Verdict::Yes : Verdict::No; };
  switch (kind_) {
    case GensetKind::XP:
      if (is_delta_square_power(g)) return Verdict::Yes;
      for (GenSet t : group_->graph().proper_irreducible_subsets())
        if (standard_membership(g, t)) return Verdict::Yes;
      return Verdict::No;
    case GensetKind::XNP:
      for (GenSet t : group_->graph().proper_irreducible_subsets())
        if (normalizer_membership(g, t)) return Verdict::Yes;
      return Verdict::No;
    case GensetKind::Xabs:
      if (is_dihedral(group_) && is_delta_square_power(g)) return Verdict::Yes;
      return is_absorbable(g, witness_bound_).verdict;
    case GensetKind::Simples:
      return yes(g.simple_length() <= 1);
    case GensetKind::FiniteSPlusDelta2: {
      if (is_delta_square_power(g)) return Verdict::Yes;
      const GarsideElement& h = g.inf() == 0 ? g : g.inverse();
      return yes(h.inf() == 0 && h.canonical_length() == 1 &&
                 group_->length(h.factors()[0]) == 1);
    }
    case GensetKind::Custom:
      return custom_(g);
  }
  return Verdict::No;
}

std::vector<GarsideElement> GeneratingSetOracle::enumerate_up_to(int bound) const {
  std::vector<GarsideElement> out;
  if (bound < 1) return out;
  const auto add_delta_squares = [&] {
    for (int k = 2; k <= bound; k += 2) {
      out.push_back(GarsideElement::delta_power(group_, k));
      out.push_back(GarsideElement::delta_power(group_, -k));
    }
  };
  switch (kind_) {
    case GensetKind::Simples:
      for (GarsideElement& g : simple_length_ball(group_, 1))
        if (!g.is_identity()) out.push_back(std::move(g));
      break;
    case GensetKind::FiniteSPlusDelta2:
      for (int s = 0; s < group_->rank(); ++s) {
        const auto x = GarsideElement::from_simple(group_, group_->generator(s));
        out.push_back(x);
        out.push_back(x.inverse());
      }
      add_delta_squares();
      break;
    case GensetKind::Xabs: {
      const Census census = enumerate_absorbable(group_, bound, witness_bound_);
      out = census.elements;
      if (is_dihedral(group_)) add_delta_squares();
      break;
    }
    default: {
      std::vector<GarsideElement> ball = simple_length_ball(group_, bound);
      std::vector<char> keep(ball.size(), 0);
      parallel_for(ball.size(), [&](std::size_t i) {
        keep[i] = !ball[i].is_identity() && membership(ball[i]);
      });
      for (std::size_t i = 0; i < ball.size(); ++i)
        if (keep[i]) out.push_back(std::move(ball[i]));
      break;
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

GeneratingSetOracle genset_oracle(const GroupPtr& group, GensetKind kind,
                                  std::uint64_t witness_bound) {
  return GeneratingSetOracle(group, kind, witness_bound);
}

std::vector<GarsideElement> enumerate_genset(const GeneratingSetOracle& o, int len_bound) {
  return o.enumerate_up_to(len_bound);
}

namespace {

// Breadth-first exploration of the universe simple_length <= universe_len.
// Stops after max_depth layers (or when exhausted, for max_depth < 0) or as
// soon as `target` is discovered.
struct BallSearch {
  std::vector<GarsideElement> elements;
  std::vector<int> depth;
  ElementIndex index;
  bool exhausted = false;

  int insert(const GarsideElement& g, int d) {
    const auto [it, inserted] = index.emplace(g, static_cast<int>(elements.size()));
    if (inserted) {
      elements.push_back(g);
      depth.push_back(d);
    }
    return it->second;
  }

  void run(const GroupPtr& group, const std::vector<GarsideElement>& gens, int universe_len,
           int max_depth, const GarsideElement* target) {
    insert(GarsideElement::delta_power(group, 0), 0);
    std::vector<int> frontier{0};
    for (int d = 0; max_depth < 0 || d < max_depth; ++d) {
      if (target && index.count(*target)) return;
      std::vector<std::vector<GarsideElement>> found(frontier.size());
      parallel_for(frontier.size(), [&](std::size_t i) {
        const GarsideElement& g = elements[frontier[i]];
        for (const GarsideElement& x : gens) {
          GarsideElement h = g * x;
          if (h.simple_length() <= universe_len) found[i].push_back(std::move(h));
        }
      });
      std::vector<int> next;
      for (auto& list : found)
        for (auto& h : list) {
          const std::size_t before = elements.size();
          const int id = insert(h, d + 1);
          if (elements.size() != before) next.push_back(id);
        }
      if (next.empty()) {
        exhausted = true;
        return;
      }
      frontier = std::move(next);
    }
  }
};

}  // namespace

MetricGraph bounded_ball_graph(const GeneratingSetOracle& o, int radius, int universe_len,
                               int generator_len) {
  if (radius < 0) throw Error(ErrorCode::PreconditionViolated, "radius must be >= 0");
  if (generator_len < 0) generator_len = universe_len;
  const std::vector<GarsideElement> gens = o.enumerate_up_to(generator_len);
  BallSearch search;
  search.run(o.group(), gens, universe_len, radius, nullptr);
  if (search.exhausted && *std::max_element(search.depth.begin(), search.depth.end()) < radius)
    throw Error(ErrorCode::UniverseTooSmall,
                "universe exhausted before radius " + std::to_string(radius));
  std::vector<std::vector<int>> nbrs(search.elements.size());
  parallel_for(search.elements.size(), [&](std::size_t i) {
    for (const GarsideElement& x : gens) {
      const auto it = search.index.find(search.elements[i] * x);
      if (it != search.index.end()) nbrs[i].push_back(it->second);
    }
  });
  MetricGraph g = assemble(search.elements, nbrs, render_element);
  auto& prov = g.provenance();
  prov["group"] = group_tag(o.group());
  prov["kind"] = "ball";
  prov["genset"] = o.name();
  prov["radius"] = std::to_string(radius);
  prov["universe_len"] = std::to_string(universe_len);
  prov["generator_len"] = std::to_string(generator_len);
  prov["distances"] = o.kind() == GensetKind::Xabs ? "upper (lower-approximation edges)" : "upper";
  return g;
}

std::string WordLength::render() const {
  switch (kind) {
    case Kind::Exact: return "exact " + std::to_string(value);
    case Kind::Upper: return "upper " + std::to_string(value);
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

WordLength word_length_bound(const GarsideElement& g, const GeneratingSetOracle& o,
                             int universe_len) {
  if (g.is_identity()) return {WordLength::Kind::Exact, 0};
  const Verdict v = o.verdict(g);
  if (v == Verdict::Yes) return {WordLength::Kind::Exact, 1};
  if (g.simple_length() > universe_len) return {};
  BallSearch search;
  search.run(o.group(), o.enumerate_up_to(universe_len), universe_len, -1, &g);
  const auto it = search.index.find(g);
  if (it == search.index.end()) return {};
  const int d = search.depth[it->second];
  // A definite non-member at distance 2 cannot be closer.
  if (d == 2 && v == Verdict::No) return {WordLength::Kind::Exact, 2};
  return {WordLength::Kind::Upper, d};
}

GarsideElement coset_representative(const GarsideElement& g) {
  GarsideElement r = g;
  r.right_multiply_delta(-g.inf());
  return r;
}

std::string coset_key(const GarsideElement& g) { return coset_representative(g).render(); }

namespace {

MetricGraph coset_graph(const GroupPtr& group, int len_bound,
                        const std::vector<GarsideElement>& steps) {
  std::vector<GarsideElement> verts = positive_inf0_elements(group, len_bound);
  ElementIndex index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], static_cast<int>(i));
  std::vector<std::vector<int>> nbrs(verts.size());
  parallel_for(verts.size(), [&](std::size_t i) {
    for (const GarsideElement& u : steps) {
      const GarsideElement h = coset_representative(verts[i] * u);
      if (h.canonical_length() > len_bound) continue;
      const auto it = index.find(h);
      if (it != index.end()) nbrs[i].push_back(it->second);
    }
  });
  MetricGraph g = assemble(std::move(verts), nbrs, render_element);
  g.provenance()["group"] = group_tag(group);
  g.provenance()["len_bound"] = std::to_string(len_bound);
  return g;
}

std::vector<GarsideElement> proper_simple_elements(const GroupPtr& group) {
  std::vector<GarsideElement> out;
  for (Simple x = 1; x < group->order(); ++x)
    if (x != group->longest()) out.push_back(GarsideElement::from_simple(group, x));
  return out;
}

}  // namespace

MetricGraph quotient_cayley_graph(const GroupPtr& group, int len_bound) {
  MetricGraph g = coset_graph(group, len_bound, proper_simple_elements(group));
  g.provenance()["kind"] = "quotient-cayley";
  g.provenance()["distances"] = "upper";
  return g;
}

MetricGraph build_cal_graph(const GroupPtr& group, int len_bound, std::uint64_t witness_bound) {
  std::vector<GarsideElement> steps = proper_simple_elements(group);
  const Census census = enumerate_absorbable(group, len_bound, witness_bound);
  steps.insert(steps.end(), census.elements.begin(), census.elements.end());
  MetricGraph g = coset_graph(group, len_bound, steps);
  g.provenance()["kind"] = "cal";
  g.provenance()["census_sup_bound"] = std::to_string(len_bound);
  g.provenance()["witness_bound"] = std::to_string(witness_bound);
  g.provenance()["census_truncated"] = census.truncated ? "yes" : "no";
  g.provenance()["distances"] = "upper (lower-approximation edges)";
  return g;
}

ParabolicSubgroup left_act(const GarsideElement& g, const ParabolicSubgroup& p) {
  return conjugate_parabolic(p, g.inverse());
}

bool stabilizes(const GarsideElement& g, const ParabolicSubgroup& p) {
  return g * p.omega == p.omega * g;
}

CparabGraph cparab_graph_on(std::vector<ParabolicSubgroup> subgroups) {
  std::stable_sort(subgroups.begin(), subgroups.end());
  subgroups.erase(std::unique(subgroups.begin(), subgroups.end()), subgroups.end());
  CparabGraph out;
  for (const auto& p : subgroups) out.graph.add_vertex(p.key());
  std::vector<std::vector<int>> nbrs(subgroups.size());
  parallel_for(subgroups.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < subgroups.size(); ++j)
      if (omega_commute_edge(subgroups[i], subgroups[j])) nbrs[i].push_back(static_cast<int>(j));
  });
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (int j : nbrs[i]) out.graph.add_edge(static_cast<int>(i), j);
  if (!subgroups.empty()) {
    out.graph.provenance()["group"] = group_tag(subgroups.front().group);
    out.graph.provenance()["kind"] = "cparab";
  }
  out.subgroups = std::move(subgroups);
  return out;
}

std::vector<ParabolicSubgroup> parabolic_conjugates(const GroupPtr& group, int conj_len) {
  std::vector<GarsideElement> conjugators;
  for (int e = 0; e <= 1; ++e)
    for (GarsideElement x : positive_inf0_elements(group, std::max(conj_len, 0))) {
      x = GarsideElement::delta_power(group, e) * x;
      conjugators.push_back(std::move(x));
    }
  const std::vector<GenSet> subsets = group->graph().proper_irreducible_subsets();
  std::vector<std::vector<ParabolicSubgroup>> found(conjugators.size());
  parallel_for(conjugators.size(), [&](std::size_t i) {
    for (GenSet t : subsets) found[i].push_back(parabolic_from_conjugate(conjugators[i], t));
  });
  std::vector<ParabolicSubgroup> out;
  std::set<std::string> seen;
  for (auto& list : found)
    for (auto& p : list)
      if (seen.insert(p.key()).second) out.push_back(std::move(p));
  return out;
}

CparabGraph build_cparab_neighborhood(const ParabolicSubgroup& p0, int conj_len, int hops) {
  std::vector<ParabolicSubgroup> all = parabolic_conjugates(p0.group, conj_len);
  all.push_back(p0);
  CparabGraph full = cparab_graph_on(std::move(all));
  const int c = full.graph.find(p0.key());
  const std::vector<int> dist = full.graph.bfs(c);
  std::vector<int> keep;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] >= 0 && dist[v] <= hops) keep.push_back(static_cast<int>(v));
  CparabGraph out;
  out.graph = full.graph.induced(keep);
  for (int v : keep) out.subgroups.push_back(full.subgroups[v]);
  out.center = out.graph.find(p0.key());
  auto& prov = out.graph.provenance();
  prov["center"] = p0.key();
  prov["conj_len"] = std::to_string(conj_len);
  prov["hops"] = std::to_string(hops);
  return out;
}

FatTriangleReport fat_triangle_distances(const FatTriangle& t, const MetricGraph& q) {
  const int len = t.length;
  const auto locate = [&](const std::vector<GarsideElement>& side) {
    std::vector<int> ids;
    for (const GarsideElement& v : side) {
      const int id = q.find(coset_key(v));
      if (id < 0)
        throw Error(ErrorCode::UniverseTooSmall, "triangle vertex " + v.render() + " not in graph");
      ids.push_back(id);
    }
    return ids;
  };
  const std::vector<int> sx = locate(t.side_x), sy = locate(t.side_y), sxy = locate(t.side_xy);
  std::vector<std::vector<int>> from_x(len + 1), from_y(len + 1);
  parallel_for(static_cast<std::size_t>(2 * (len + 1)), [&](std::size_t i) {
    if (i <= static_cast<std::size_t>(len))
      from_x[i] = q.bfs(sx[i]);
    else
      from_y[i - len - 1] = q.bfs(sy[i - len - 1]);
  });

  FatTriangleReport report;
  report.length = len;
  const auto check = [&](bool corner, int got, int expected, const std::string& what) {
    (corner ? report.corner_checks : report.pair_checks)++;
    if (got == expected) return;
    (corner ? report.corner_failures : report.pair_failures)++;
    if (report.failures.size() < 20)
      report.failures.push_back(what + ": distance " + std::to_string(got) + ", expected " +
                                std::to_string(expected));
  };
  const auto name = [](const char* side, int i) { return std::string(side) + "[" + std::to_string(i) + "]"; };
  for (int k = 0; k <= len; ++k)
    for (int j = 0; j <= len; ++j) {
      // side_x and side_xy meet at 1.
      check(false, from_x[k][sxy[j]], std::max(k, j), name("x", k) + "~" + name("xy", j));
      // side_x and side_y meet at x.
      check(false, from_x[k][sy[j]], std::max(len - k, j), name("x", k) + "~" + name("y", j));
      // side_y and side_xy meet at xy.
      check(false, from_y[k][sxy[j]], std::max(len - k, len - j), name("y", k) + "~" + name("xy", j));
    }
  for (int k = 0; k <= len; ++k) {
    check(true, from_x[0][sy[k]], len, "1~" + name("y", k));
    check(true, from_x[len][sxy[k]], len, "x~" + name("xy", k));
    check(true, from_y[len][sx[k]], len, "xy~" + name("x", k));
  }
  return report;
}

DiameterBound parabolic_set_diameter(const std::vector<ParabolicSubgroup>& images, int conj_len) {
  DiameterBound out;
  out.conj_len = conj_len;
  if (images.empty()) return out;
  const GroupPtr& group = images.front().group;
  const std::vector<ParabolicSubgroup> base = parabolic_conjugates(group, conj_len);
  std::vector<GarsideElement> translators;
  for (const auto& p : images) translators.push_back(p.witness.inverse());
  std::sort(translators.begin(), translators.end(), shortlex_less);
  translators.erase(std::unique(translators.begin(), translators.end()), translators.end());
  std::vector<ParabolicSubgroup> verts = images;
  std::vector<std::vector<ParabolicSubgroup>> moved(translators.size());
  parallel_for(translators.size(), [&](std::size_t i) {
    for (const auto& q : base) moved[i].push_back(left_act(translators[i], q));
  });
  for (auto& list : moved) verts.insert(verts.end(), list.begin(), list.end());
  const CparabGraph g = cparab_graph_on(std::move(verts));
  std::vector<int> ids;
  for (const auto& p : images) ids.push_back(g.graph.find(p.key()));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  out.images = static_cast<int>(ids.size());
  out.vertices = static_cast<int>(g.graph.vertex_count());
  for (int a : ids) {
    const std::vector<int> dist = g.graph.bfs(a);
    for (int b : ids) {
      if (dist[b] < 0)
        throw Error(ErrorCode::UniverseTooSmall,
                    "images disconnected at conj_len " + std::to_string(conj_len));
      out.diameter = std::max(out.diameter, dist[b]);
    }
  }
  return out;
}

DiameterBound cparab_image_diameter(const FatTriangle& t, int conj_len) {
  std::vector<GarsideElement> verts;
  for (const auto* side : {&t.side_x, &t.side_y, &t.side_xy})
    verts.insert(verts.end(), side->begin(), side->end());
  std::sort(verts.begin(), verts.end(), shortlex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<ParabolicSubgroup> images;
  for (GenSet s : t.group->graph().proper_irreducible_subsets()) {
    const ParabolicSubgroup std_p = standard_parabolic(t.group, s);
    for (const auto& v : verts) images.push_back(left_act(v, std_p));
  }
  return parabolic_set_diameter(images, conj_len);
}

std::string DeltaEstimate::render() const {
  std::ostringstream out;
  if (twice_delta % 2 == 0)
    out << twice_delta / 2;
  else
    out << twice_delta << "/2";
  out << (exact ? " (exact)" : " (sampled, seed " + std::to_string(seed) + ")");
  out << ", " << tuples << " tuples";
  return out.str();
}

namespace {

int four_point_defect(const std::vector<std::vector<int>>& d, int a, int b, int c, int e) {
  int s[3] = {d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
  std::sort(s, s + 3);
  return s[2] - s[1];
}

DeltaEstimate estimate_connected(const MetricGraph& q, std::uint64_t sample, std::uint64_t seed) {
  DeltaEstimate est;
  est.seed = seed;
  const std::uint64_t n = q.vertex_count();
  if (n < 4) {
    est.exact = true;
    return est;
  }
  std::vector<std::vector<int>> d(n);
  parallel_for(n, [&](std::size_t v) { d[v] = q.bfs(static_cast<int>(v)); });
  const long double total = static_cast<long double>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
  if (static_cast<long double>(sample) >= total) {
    est.exact = true;
    std::vector<int> best(n, 0);
    std::vector<std::uint64_t> counts(n, 0);
    parallel_for(n, [&](std::size_t a) {
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t e = c + 1; e < n; ++e) {
            best[a] = std::max(best[a], four_point_defect(d, a, b, c, e));
            ++counts[a];
          }
    });
    for (std::size_t a = 0; a < n; ++a) {
      est.twice_delta = std::max(est.twice_delta, best[a]);
      est.tuples += counts[a];
    }
    return est;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (std::uint64_t i = 0; i < sample; ++i) {
    std::uint64_t v[4];
    for (int k = 0; k < 4; ++k) {
      bool repeat;
      do {
        v[k] = pick(rng);
        repeat = std::find(v, v + k, v[k]) != v + k;
      } while (repeat);
    }
    est.twice_delta = std::max(
        est.twice_delta, four_point_defect(d, static_cast<int>(v[0]), static_cast<int>(v[1]),
                                           static_cast<int>(v[2]), static_cast<int>(v[3])));
    ++est.tuples;
  }
  return est;
}

}  // namespace

DeltaEstimate estimate_delta(const MetricGraph& q, std::uint64_t sample, std::uint64_t seed,
                             bool per_component) {
  if (q.connected()) return estimate_connected(q, sample, seed);
  if (!per_component)
    throw Error(ErrorCode::DisconnectedInput, "graph is disconnected; use per-component mode");
  const std::vector<int> comp = q.components();
  const int count = *std::max_element(comp.begin(), comp.end()) + 1;
  DeltaEstimate total;
  total.seed = seed;
  total.exact = true;
  for (int c = 0; c < count; ++c) {
    std::vector<int> verts;
    for (std::size_t v = 0; v < comp.size(); ++v)
      if (comp[v] == c) verts.push_back(static_cast<int>(v));
    const DeltaEstimate e = estimate_connected(q.induced(verts), sample, seed);
    total.twice_delta = std::max(total.twice_delta, e.twice_delta);
    total.tuples += e.tuples;
    total.exact = total.exact && e.exact;
  }
  return total;
}

namespace {

// Random elements of N(P) = c^-1 N(A_T) c for P = c^-1 A_T c: short words in
// A_T's generators, generators commuting with T, Delta^{+-2}, and Delta^{+-1}
// or Omega_T when they normalize A_T.
class StabilizerSampler {
 public:
  explicit StabilizerSampler(const ParabolicSubgroup& p) : p_(p) {
    const GroupPtr& g = p.group;
    const auto letter = [&](int s) { return GarsideElement::from_simple(g, g->generator(s)); };
    for (int s = 0; s < g->rank(); ++s) {
      bool commutes = true;
      for (int t : members(p.t)) commutes = commutes && (s == t || g->graph().m(s, t) == 2);
      if ((p.t & gen_bit(s)) || commutes) gens_.push_back(letter(s));
    }
    gens_.push_back(GarsideElement::delta_power(g, 2));
    GenSet image = 0;
    for (int t : members(p.t))
      for (int s = 0; s < g->rank(); ++s)
        if (g->tau(g->generator(t)) == g->generator(s)) image |= gen_bit(s);
    if (image == p.t) gens_.push_back(GarsideElement::delta_power(g, 1));
    gens_.push_back(omega_of(g, p.t).element);
  }

  GarsideElement sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> len(1, 3), which(0, static_cast<int>(gens_.size()) - 1),
        sign(0, 1);
    GarsideElement h = GarsideElement::delta_power(p_.group, 0);
    for (int k = len(rng); k > 0; --k) {
      const GarsideElement& x = gens_[which(rng)];
      h = h * (sign(rng) ? x : x.inverse());
    }
    return p_.witness.inverse() * h * p_.witness;
  }

 private:
  ParabolicSubgroup p_;
  std::vector<GarsideElement> gens_;
};

}  // namespace

QiReport qi_constants(const CparabGraph& q, const std::vector<int>& reps,
                      const std::vector<std::pair<int, int>>& edge_reps, const QiOptions& opts) {
  const int n = static_cast<int>(q.graph.vertex_count());
  if (reps.empty()) throw Error(ErrorCode::RepresentativeMissing, "empty representative set");
  for (int a : reps)
    if (a < 0 || a >= n) throw Error(ErrorCode::RepresentativeMissing, "representative not in graph");
  for (const auto& [u, v] : edge_reps)
    if (u < 0 || v < 0 || u >= n || v >= n || !q.graph.has_edge(u, v))
      throw Error(ErrorCode::RepresentativeMissing, "edge representative not in graph");

  QiReport report;
  report.seed = opts.seed;
  for (int a : reps) {
    const std::vector<int> dist = q.graph.bfs(a);
    for (int b : reps) {
      if (dist[b] < 0) throw Error(ErrorCode::DisconnectedInput, "representatives disconnected");
      report.m1 = std::max(report.m1, dist[b]);
    }
  }

  const GroupPtr& group = q.subgroups.front().group;
  std::vector<ParabolicSubgroup> a_set;
  std::set<std::string> a_keys;
  for (int a : reps) {
    a_set.push_back(q.subgroups[a]);
    a_keys.insert(q.subgroups[a].key());
  }
  const auto t_oracle = GeneratingSetOracle::custom(group, "T", [a_set](const GarsideElement& g) {
    for (const auto& p : a_set)
      if (stabilizes(g, p)) return Verdict::Yes;
    return Verdict::No;
  });
  const auto t_length = [&](const GarsideElement& g, bool& exact) {
    const WordLength w = word_length_bound(g, t_oracle, std::max(g.simple_length(), 1));
    if (w.kind != WordLength::Kind::Exact) exact = false;
    if (w.kind == WordLength::Kind::Unknown)
      throw Error(ErrorCode::NotFoundWithinSearch, "no T-word found for " + g.render());
    return w.value;
  };

  const std::vector<GarsideElement> ball = simple_length_ball(group, opts.gsearch_radius);
  std::vector<ParabolicSubgroup> a0;
  for (std::size_t i = 0; i < a_set.size(); ++i) {
    const GarsideElement* g_a = nullptr;
    for (const GarsideElement& g : ball) {
      const std::string key = left_act(g, a_set[i]).key();
      if (std::any_of(a0.begin(), a0.end(), [&](const auto& p) { return p.key() == key; })) {
        g_a = &g;
        break;
      }
    }
    if (!g_a) {
      a0.push_back(a_set[i]);
      report.a0.push_back(reps[i]);
      continue;
    }
    report.m2 = std::max(report.m2, t_length(*g_a, report.m2_exact));
  }

  // alpha with alpha^-1 . u in A.
  const auto translate_into_a = [&](const ParabolicSubgroup& u) -> const GarsideElement& {
    for (const GarsideElement& g : ball)
      if (a_keys.count(left_act(g.inverse(), u).key())) return g;
    throw Error(ErrorCode::RepresentativeMissing,
                "no translate of " + u.render() + " into A within radius " +
                    std::to_string(opts.gsearch_radius));
  };
  for (const auto& [u, v] : edge_reps)
    for (int end : {u, v})
      report.m3 = std::max(report.m3, t_length(translate_into_a(q.subgroups[end]), report.m3_exact));

  std::vector<StabilizerSampler> samplers;
  for (const auto& p : a_set) samplers.emplace_back(p);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> word_len(1, std::max(1, opts.max_word));
  std::uniform_int_distribution<int> which(0, static_cast<int>(a_set.size()) - 1);
  const ParabolicSubgroup& base = a_set.front();
  for (int s = 0; s < opts.lipschitz_samples; ++s) {
    const int len = word_len(rng);
    std::vector<GarsideElement> prefixes{GarsideElement::delta_power(group, 0)};
    for (int k = 0; k < len; ++k) {
      const int a = which(rng);
      const GarsideElement t = samplers[a].sample(rng);
      if (!stabilizes(t, a_set[a]))
        throw Error(ErrorCode::PreconditionViolated, "sampled element does not stabilize its vertex");
      prefixes.push_back(prefixes.back() * t);
    }
    std::vector<ParabolicSubgroup> verts;
    for (const auto& w : prefixes)
      for (const auto& p : q.subgroups) verts.push_back(left_act(w, p));
    const CparabGraph g = cparab_graph_on(std::move(verts));
    const int from = g.graph.find(base.key());
    const int to = g.graph.find(left_act(prefixes.back(), base).key());
    const int d = g.graph.bfs(from)[to];
    ++report.samples;
    report.max_distance = std::max(report.max_distance, d);
    if (d < 0 || d > 2 * report.m1 * len) ++report.lipschitz_failures;
  }
  return report;
}

}  // namespace garside
