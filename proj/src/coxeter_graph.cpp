#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <regex>
#include <sstream>

#include "garside/coxeter.hpp"
#include "garside/error.hpp"

namespace garside {

int popcount(GenSet t) { return std::popcount(t); }

std::vector<int> members(GenSet t) {
  std::vector<int> out;
  for (int s = 0; t != 0; ++s, t >>= 1)
    if (t & 1) out.push_back(s);
  return out;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void link(Matrix& m, int s, int t, int label) {
  m[s][t] = label;
  m[t][s] = label;
}

// Bourbaki labelling, 0-based.
Matrix family_matrix(char family, int n, int dihedral_m = 0) {
  Matrix m = identity_matrix(family == 'I' ? 2 : n);
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1, 3);
      link(m, n - 2, n - 1, 4);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1, 3);
      link(m, n - 3, n - 1, 3);
      break;
    case 'E':
      link(m, 0, 2, 3);
      link(m, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'F':
      link(m, 0, 1, 3);
      link(m, 1, 2, 4);
      link(m, 2, 3, 3);
      break;
    case 'H':
      link(m, 0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'I':
      link(m, 0, 1, dihedral_m);
      break;
    default:
      break;
  }
  return m;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct Candidate {
  std::string tag;
  Matrix matrix;
  std::uint64_t order;
};

std::vector<Candidate> candidates_of_rank(int k) {
  std::vector<Candidate> out;
  auto add = [&](std::string tag, Matrix m, std::uint64_t order) {
    out.push_back({std::move(tag), std::move(m), order});
  };
  add("A" + std::to_string(k), family_matrix('A', k), factorial(k + 1));
  if (k >= 2) add("B" + std::to_string(k), family_matrix('B', k), (std::uint64_t{1} << k) * factorial(k));
  if (k >= 4) add("D" + std::to_string(k), family_matrix('D', k), (std::uint64_t{1} << (k - 1)) * factorial(k));
  if (k == 6) add("E6", family_matrix('E', 6), 51840);
  if (k == 7) add("E7", family_matrix('E', 7), 2903040);
  if (k == 8) add("E8", family_matrix('E', 8), 696729600);
  if (k == 4) add("F4", family_matrix('F', 4), 1152);
  if (k == 3) add("H3", family_matrix('H', 3), 120);
  if (k == 4) add("H4", family_matrix('H', 4), 14400);
  return out;
}

bool isomorphic(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a[i][j] == b[c][image[j]];
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      if (place(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return place(0);
}

struct ComponentInfo {
  std::string tag;
  std::uint64_t order;
};

ComponentInfo classify_component(const Matrix& sub) {
  const int k = static_cast<int>(sub.size());
  if (k == 2) {
    const int label = sub[0][1];
    if (label == 0) throw Error(ErrorCode::NonSpherical, "dihedral label infinity");
    if (label == 3) return {"A2", 6};
    if (label == 4) return {"B2", 8};
    return {"I2(" + std::to_string(label) + ")", 2 * static_cast<std::uint64_t>(label)};
  }
  for (auto& cand : candidates_of_rank(k))
    if (isomorphic(sub, cand.matrix)) return {cand.tag, cand.order};
  throw Error(ErrorCode::NonSpherical, "component of rank " + std::to_string(k) +
                                           " is not of spherical type");
}

std::vector<std::vector<int>> components(const Matrix& m, GenSet t) {
  std::vector<std::vector<int>> comps;
  GenSet seen = 0;
  for (int s : members(t)) {
    if (seen & gen_bit(s)) continue;
    std::vector<int> comp{s};
    seen |= gen_bit(s);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int u : members(t))
        if (!(seen & gen_bit(u)) && (m[comp[i]][u] >= 3 || m[comp[i]][u] == 0)) {
          seen |= gen_bit(u);
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Matrix submatrix(const Matrix& m, const std::vector<int>& idx) {
  Matrix out(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = m[idx[i]][idx[j]];
  return out;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

}  // namespace

CoxeterGraph CoxeterGraph::from_matrix(std::vector<std::string> labels, Matrix matrix) {
  const std::size_t n = labels.size();
  if (n == 0 || n > 31) throw Error(ErrorCode::RankOutOfRange, "rank must be in 1..31");
  if (matrix.size() != n) throw Error(ErrorCode::ParseError, "matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error(ErrorCode::ParseError, "matrix is not square");
    if (matrix[i][i] != 1) throw Error(ErrorCode::ParseError, "diagonal entries must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) throw Error(ErrorCode::ParseError, "matrix is not symmetric");
      if (i != j && matrix[i][j] != 0 && matrix[i][j] < 2)
        throw Error(ErrorCode::ParseError, "off-diagonal entries must be >= 2 or infinity");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw Error(ErrorCode::ParseError, "duplicate generator label");

  CoxeterGraph g;
  g.labels_ = std::move(labels);
  g.matrix_ = std::move(matrix);
  std::string tag;
  for (const auto& comp : components(g.matrix_, full_set(static_cast<int>(n)))) {
    const ComponentInfo info = classify_component(submatrix(g.matrix_, comp));
    if (!tag.empty()) tag += "x";
    tag += info.tag;
  }
  g.family_tag_ = tag;
  return g;
}

int CoxeterGraph::index_of(std::string_view label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

bool CoxeterGraph::is_connected(GenSet t) const {
  if (t == 0) return false;
  return components(matrix_, t).size() == 1;
}

std::vector<GenSet> CoxeterGraph::proper_irreducible_subsets() const {
  std::vector<GenSet> out;
  const GenSet full = full_set(rank());
  for (GenSet t = 1; t < full; ++t)
    if (is_connected(t)) out.push_back(t);
  return out;
}

std::optional<std::uint64_t> CoxeterGraph::closed_form_order() const {
  std::uint64_t total = 1;
  for (const auto& comp : components(matrix_, full_set(rank()))) {
    const std::uint64_t order = classify_component(submatrix(matrix_, comp)).order;
    if (total > UINT64_MAX / order) return std::nullopt;
    total *= order;
  }
  return total;
}

bool CoxeterGraph::delta_is_central() const {
  for (const auto& comp : components(matrix_, full_set(rank()))) {
    const std::string tag = classify_component(submatrix(matrix_, comp)).tag;
    const char family = tag[0];
    bool central = true;
    if (family == 'A') {
      central = tag == "A1";
    } else if (family == 'D') {
      central = std::stoi(tag.substr(1)) % 2 == 0;
    } else if (tag == "E6") {
      central = false;
    } else if (family == 'I') {
      central = std::stoi(tag.substr(3)) % 2 == 0;
    }
    if (!central) return false;
  }
  return true;
}

std::string CoxeterGraph::render_subset(GenSet t) const {
  std::string out;
  for (int s : members(t)) {
    if (!out.empty()) out += ",";
    out += labels_[s];
  }
  return out;
}

CoxeterGraph parse_group_spec(std::string_view spec_view) {
  const std::string spec(spec_view);
  static const std::regex plain(R"(([A-Za-z])(\d+))");
  static const std::regex dihedral(R"(I2\((\d+|inf|oo)\))");
  std::smatch match;
  if (std::regex_match(spec, match, dihedral)) {
    const std::string arg = match[1];
    if (arg == "inf" || arg == "oo") throw Error(ErrorCode::NonSpherical, "I2(infinity)");
    const int mval = std::stoi(arg);
    if (mval < 3) throw Error(ErrorCode::RankOutOfRange, "I2(m) needs m >= 3: " + spec);
    return CoxeterGraph::from_matrix({"a", "b"}, family_matrix('I', 2, mval));
  }
  if (!std::regex_match(spec, match, plain))
    throw Error(ErrorCode::UnknownFamily, "unrecognized group spec '" + spec + "'");
  const char family = match[1].str()[0];
  const int n = std::stoi(match[2]);
  auto need = [&](bool ok) {
    if (!ok) throw Error(ErrorCode::RankOutOfRange, "rank out of range for " + spec);
  };
  switch (family) {
    case 'A': need(n >= 1); break;
    case 'B': need(n >= 2); break;
    case 'D': need(n >= 4); break;
    case 'E':
      if (n > 8) throw Error(ErrorCode::NonSpherical, spec + " is not of spherical type");
      need(n >= 6);
      break;
    case 'F':
      if (n > 4) throw Error(ErrorCode::NonSpherical, spec + " is not of spherical type");
      need(n == 4);
      break;
    case 'H':
      if (n > 4) throw Error(ErrorCode::NonSpherical, spec + " is not of spherical type");
      need(n >= 3);
      break;
    default:
      throw Error(ErrorCode::UnknownFamily, "unknown family in '" + spec + "'");
  }
  need(n <= 31);
  return CoxeterGraph::from_matrix(default_labels(n), family_matrix(family, n));
}

GraphProperties graph_properties(const CoxeterGraph& g, std::uint64_t order_cap) {
  GraphProperties props;
  props.rank = g.rank();
  props.irreducible = g.is_irreducible();
  const auto order = g.closed_form_order();
  if (!order || *order > order_cap)
    throw Error(ErrorCode::OrderOverflow,
                "|W| for " + g.family_tag() + " exceeds the cap of " + std::to_string(order_cap));
  props.coxeter_order = *order;
  return props;
}

GenSet parse_subset(const CoxeterGraph& g, std::string_view text) {
  GenSet t = 0;
  std::string token;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    int idx = g.index_of(token);
    // Rank-2 diagrams accept both the a, b and the s1, s2 spellings.
    if (idx < 0 && g.rank() == 2) {
      if (token == "a" || token == "s1") idx = 0;
      if (token == "b" || token == "s2") idx = 1;
    }
    if (idx < 0) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + token + "'");
    t |= gen_bit(idx);
  }
  if (t == 0) throw Error(ErrorCode::EmptySubset, "empty generator subset");
  return t;
}

}  // namespace garside
