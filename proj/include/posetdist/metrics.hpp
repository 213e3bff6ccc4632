#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "posetdist/poset.hpp"

namespace posetdist {

enum class DistanceKind { Zigzag, UpDown, DownUp, Chebyshev };

inline constexpr DistanceKind kAllDistanceKinds[] = {DistanceKind::Zigzag, DistanceKind::UpDown,
                                                     DistanceKind::DownUp, DistanceKind::Chebyshev};

// "zigzag", "updown", "downup", "chebyshev"
std::string_view distance_kind_name(DistanceKind kind) noexcept;
// Accepts the names above plus "up-down"/"up_down" style spellings.
// Throws InvalidParameter.
DistanceKind parse_distance_kind(std::string_view text);

// Graph distance in the Hasse diagram. Throws Disconnected.
std::uint32_t zigzag_distance(const Poset& p, Element x, Element y);
// min over common upper bounds u of h(x,u) + h(y,u). Throws NoUpperBound.
std::uint32_t up_down_distance(const Poset& p, Element x, Element y);
// min over common lower bounds u of h(u,x) + h(u,y). Throws NoLowerBound.
std::uint32_t down_up_distance(const Poset& p, Element x, Element y);
// max(h(x, x v y), h(y, x v y)). Throws NoUpperBound / NoLeastUpperBound.
std::uint32_t chebyshev_distance(const Poset& p, Element x, Element y);

std::uint32_t distance(const Poset& p, DistanceKind kind, Element x, Element y);

// All-pairs table for one kind. Pairs where the distance is undefined keep
// the error code that a direct call would have thrown.
class DistanceTable {
 public:
  DistanceTable(const Poset& p, DistanceKind kind);

  DistanceKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return n_; }
  const std::optional<std::uint32_t>& at(Element x, Element y) const { return values_[x * n_ + y]; }
  // Throws the recorded error for undefined pairs.
  std::uint32_t value(Element x, Element y) const;
  // First undefined pair in index order, if any.
  std::optional<std::pair<Element, Element>> first_undefined() const;

 private:
  DistanceKind kind_;
  std::size_t n_;
  std::vector<std::optional<std::uint32_t>> values_;
  std::vector<ErrorCode> errors_;
  std::vector<std::string> messages_;
};

// Bottom-to-top element sequence, consecutive members in cover relation.
using Chain = std::vector<Element>;

// Every maximal chain exactly once, depth-first from minimal elements in
// index order, following upper covers in index order.
std::vector<Chain> maximal_chains(const Poset& p);

struct ChainViolation {
  Chain chain;
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint32_t distance = 0;  // d(chain[i], chain[j]); differs from j - i
};

struct ChainCompatibility {
  bool compatible = true;
  std::optional<ChainViolation> violation;  // first one found
};

ChainCompatibility chain_compatibility(const Poset& p, DistanceKind kind);
inline bool is_chain_compatible(const Poset& p, DistanceKind kind) {
  return chain_compatibility(p, kind).compatible;
}

struct TriangleViolation {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  std::uint32_t lhs = 0;  // d(x, z)
  std::uint32_t rhs = 0;  // d(x, y) + d(y, z)
};

// Ordered triples with x != z and y outside {x, z}, lexicographic in
// (x, y, z). Throws DistanceUndefined when some pair has no distance.
std::vector<TriangleViolation> triangle_violations(const Poset& p, DistanceKind kind);
std::vector<TriangleViolation> triangle_violations(const Poset& p, const DistanceTable& table);

struct DistanceComparisonRow {
  Element x = 0;
  Element y = 0;
  std::uint32_t zigzag = 0;
  std::uint32_t up_down = 0;
  std::optional<std::uint32_t> chebyshev;  // empty when x v y does not exist
};

struct DistanceComparison {
  std::vector<DistanceComparisonRow> rows;  // unordered pairs x < y by index
  bool zigzag_le_up_down = true;
  bool zigzag_eq_up_down = true;
  // Over pairs where Chebyshev is defined.
  bool chebyshev_le_up_down = true;
  bool chebyshev_le_zigzag = true;
  std::size_t chebyshev_undefined = 0;
};

// Requires upper filtering (throws NoUpperBound otherwise).
DistanceComparison compare_distances(const Poset& p);

struct KinshipResult {
  Element ancestor = 0;
  std::uint32_t h_ego = 0;
  std::uint32_t h_alter = 0;
  std::uint32_t civil = 0;
  std::uint32_t canon = 0;
};

// Poset must be a tree order with ancestors above descendants.
// Throws NotATreeOrder.
KinshipResult kinship(const Poset& p, Element ego, Element alter);

}  // namespace posetdist
