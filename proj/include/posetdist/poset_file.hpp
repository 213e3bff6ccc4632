#pragma once

#include <string>
#include <string_view>

#include "posetdist/poset.hpp"

namespace posetdist {

// Line-oriented text format. '#' starts a comment running to end of line and
// blank lines are ignored. Data lines are either "a < b" (a strict order
// assertion, not necessarily a cover) or "element x" (declares x).
// Throws ParseError with a 1-based line number, plus the builder's errors.
Poset parse_poset_file(std::string_view text);

// Throws IoError.
Poset load_poset_file(const std::string& path);

// Emits the cover relation as "a < b" lines sorted by (lower, upper) name,
// then "element x" for each element on no cover edge, sorted by name.
std::string render_poset_file(const Poset& p);

}  // namespace posetdist
