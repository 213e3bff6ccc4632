#pragma once

#include <string>
#include <vector>

#include "posetdist/enumerate.hpp"
#include "posetdist/metrics.hpp"
#include "posetdist/poset.hpp"
#include "posetdist/verify.hpp"

// Text and JSON renderings shared by the C API and the command-line tool.
// JSON output has a fixed key order and no timestamps, so identical inputs
// render byte-identically.
namespace posetdist::render {

// {"elements": [...], "covers": [[lower, upper], ...]} with covers sorted.
std::string poset_json(const Poset& p);

std::string report_text(const StructuralReport& r);
std::string report_json(const StructuralReport& r);

std::string distance_json(const Poset& p, DistanceKind kind, Element x, Element y, std::uint32_t d);

std::string violations_text(const Poset& p, DistanceKind kind, const std::vector<TriangleViolation>& v);
std::string violations_json(const Poset& p, DistanceKind kind, const std::vector<TriangleViolation>& v);

std::string chains_text(const Poset& p, const std::vector<Chain>& chains);
std::string chains_json(const Poset& p, const std::vector<Chain>& chains);

std::string compatibility_text(const Poset& p, DistanceKind kind, const ChainCompatibility& c);
std::string compatibility_json(const Poset& p, DistanceKind kind, const ChainCompatibility& c);

std::string comparison_text(const Poset& p, const DistanceComparison& c);
std::string comparison_json(const Poset& p, const DistanceComparison& c);

std::string kinship_json(const Poset& p, Element ego, Element alter, const KinshipResult& k);

// Poset files separated by "# poset i code=HEX" headers.
std::string enumerated_text(const std::vector<EnumeratedPoset>& posets);
std::string enumerated_json(const std::vector<EnumeratedPoset>& posets);

std::string verify_text(const VerifyReport& r);
std::string verify_json(const VerifyReport& r);

}  // namespace posetdist::render
