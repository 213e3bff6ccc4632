#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdist/enumerate.hpp"
#include "posetdist/metrics.hpp"
#include "posetdist/poset.hpp"

namespace posetdist {

enum class Proposition { P1, P2, P3, P4, P5, ChebSearch };

// "P1".."P5", "cheb-search"
std::string_view proposition_name(Proposition p) noexcept;
// Case-insensitive; accepts "cheb_search"/"CHEB_SEARCH". Throws InvalidParameter.
Proposition parse_proposition(std::string_view text);

// What a witness claims to show. Replaying re-runs exactly this check.
enum class WitnessCheck {
  // Triangle inequality fails for `kind`; elements {x, y, z}; values lhs, rhs.
  TriangleInequality,
  // Two maximal chains of one interval with different cardinalities;
  // elements {bottom, top}; chains {shorter, longer}.
  UnequalMaximalChains,
  // Jordan-Dedekind and zigzag chain-compatibility disagree; values jd, compatible.
  JordanDedekindVsCompatibility,
  // Jordan-Dedekind fails and no unequal-chain falsifier was produced.
  MissingFalsifier,
  // Semimodular join semilattice violating Jordan-Dedekind; elements {bottom, top}.
  SemimodularNotJordanDedekind,
  // Semimodularity, up-down metricity, and up-down == zigzag disagree;
  // values semimodular, updown_metric, updown_equals_zigzag.
  Prop4Equivalence,
  // Tree order not flagged semimodular.
  TreeNotSemimodular,
};

std::string_view witness_check_name(WitnessCheck c) noexcept;

struct Witness {
  Poset poset;
  WitnessCheck check = WitnessCheck::TriangleInequality;
  DistanceKind kind = DistanceKind::Zigzag;  // TriangleInequality only
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::int64_t>> values;
  std::vector<std::vector<std::string>> chains;

  std::optional<std::int64_t> value(std::string_view key) const;
};

// Re-evaluates the recorded check on the embedded poset; true iff the same
// violation (same elements and values) is reproduced.
bool replay(const Witness& w);

// When Jordan-Dedekind fails: the first interval (index order) holding two
// maximal chains of different cardinalities, with a shortest and a longest
// one. Such a pair rules out every chain-compatible distance.
std::optional<Witness> falsify_chain_compatibility(const Poset& p);

struct VerifyOptions {
  unsigned jobs = 1;
  std::size_t max_witnesses = 16;
};

struct VerifyReport {
  Proposition proposition = Proposition::P1;
  std::size_t n_max = 0;
  std::size_t scanned = 0;
  std::size_t relevant = 0;
  std::vector<std::size_t> relevant_by_size;  // index k holds size k + 1
  bool holds = false;
  // Witnesses beyond max_witnesses are counted in `violations` only.
  std::size_t violations = 0;
  std::vector<Witness> witnesses;
  // Extra counters reported alongside the verdict, in a fixed order.
  std::vector<std::pair<std::string, std::size_t>> observations;
  std::string method;
};

// Scans every poset with 1..n_max elements. Throws SizeCapExceeded for
// n_max > 8 and InvalidParameter for n_max == 0.
VerifyReport verify(Proposition prop, std::size_t n_max, const VerifyOptions& options = {});

}  // namespace posetdist
