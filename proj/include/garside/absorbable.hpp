#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "garside/element.hpp"

namespace garside {

inline constexpr std::uint64_t kDefaultWitnessBound = 10'000'000;

enum class Verdict { Yes, No, Unknown };

struct AbsorbableResult {
  Verdict verdict = Verdict::No;
  // For sup(y) = 0 the search runs on y^-1 and the witness absorbs y^-1.
  std::optional<GarsideElement> witness;
  bool inverted = false;
  std::uint64_t nodes_visited = 0;
};

// inf(x) = inf(xy) = 0 and sup(x) = sup(xy) = L, where y has inf 0 and
// canonical length L >= 1.
bool absorbs(const GarsideElement& x, const GarsideElement& y);

AbsorbableResult is_absorbable(const GarsideElement& y,
                               std::uint64_t witness_bound = kDefaultWitnessBound);

// All witnesses x absorbing y (inf 0, length L), in lexicographic order of
// factor sequences.
std::vector<GarsideElement> all_witnesses(const GarsideElement& y,
                                          std::uint64_t witness_bound = kDefaultWitnessBound);

struct Census {
  std::vector<GarsideElement> elements;  // shortlex order
  bool truncated = false;                // some verdict was Unknown
};

// Absorbable elements of canonical length <= sup_bound, both signs.
Census enumerate_absorbable(const GroupPtr& group, int sup_bound,
                            std::uint64_t witness_bound = kDefaultWitnessBound);

struct FatTriangle {
  GroupPtr group;
  GarsideElement x, y, xy;
  int length = 0;
  // side_x: 1 .. x by prefixes of x; side_y: x .. xy by x * prefixes of y;
  // side_xy: 1 .. xy by prefixes of xy. Each has length + 1 vertices.
  std::vector<GarsideElement> side_x, side_y, side_xy;
};

FatTriangle build_fat_triangle(const GarsideElement& x, const GarsideElement& y);

struct AbsorptionSymmetry {
  std::pair<GarsideElement, GarsideElement> pair2;  // (y, (xy)^-1 Delta^L)
  std::pair<GarsideElement, GarsideElement> pair3;  // (Delta^L (xy)^-1, x)
  bool both_verified = false;
};

AbsorptionSymmetry absorption_symmetry(const GarsideElement& x, const GarsideElement& y);

}  // namespace garside
