#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetdist/poset.hpp"

namespace posetdist {

// Byte string identifying an isomorphism class: a 2-byte big-endian element
// count followed by the packed comparability bits of the closure under the
// lexicographically least labeling among those that respect an
// isomorphism-invariant vertex coloring.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::size_t element_count() const;
  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
};

CanonicalCode canonical_code(const Poset& p);
// Works on a bare closure matrix (reflexive partial order).
CanonicalCode canonical_code(const BoolMatrix& closure);

// Closure matrix of the canonical labeling encoded in `code`.
BoolMatrix decode_closure(const CanonicalCode& code);
// Canonical representative with elements named e0..e{n-1} in code order.
Poset poset_from_code(const CanonicalCode& code);

enum class Predicate {
  Connected,
  UpperFiltering,
  LowerFiltering,
  JoinSemilattice,
  Lattice,
  TreeOrder,
  Semimodular,
  JordanDedekind,
};

std::string_view predicate_name(Predicate p) noexcept;
// Accepts underscore or hyphen spellings. Throws InvalidParameter.
Predicate parse_predicate(std::string_view text);
bool predicate_value(const StructuralReport& report, Predicate p);

// Conjunction of (predicate, required value) terms; empty accepts all.
struct PosetFilter {
  std::vector<std::pair<Predicate, bool>> terms;

  bool empty() const noexcept { return terms.empty(); }
  bool accepts(const StructuralReport& report) const;
  bool accepts(const Poset& p) const;
};

// Comma-separated predicate names, each optionally prefixed by '!' for
// negation, e.g. "join_semilattice,!semimodular". Throws InvalidParameter.
PosetFilter parse_filter(std::string_view text);

inline constexpr std::size_t kMaxEnumerationSize = 8;

struct EnumerateOptions {
  unsigned jobs = 1;  // 0 picks the hardware concurrency
};

// One code per isomorphism class of n-element posets, ascending.
// Throws SizeCapExceeded for n > 8 and InvalidParameter for n == 0.
std::vector<CanonicalCode> enumerate_codes(std::size_t n, const EnumerateOptions& options = {});
// Element i holds the codes for size i + 1, for sizes 1..n_max.
std::vector<std::vector<CanonicalCode>> enumerate_codes_by_size(std::size_t n_max,
                                                                const EnumerateOptions& options = {});

struct EnumeratedPoset {
  CanonicalCode code;
  Poset poset;
  StructuralReport report;
};

// Representatives of n-element posets passing `filter`, in ascending
// canonical-code order.
std::vector<EnumeratedPoset> enumerate_posets(std::size_t n, const PosetFilter& filter = {},
                                              const EnumerateOptions& options = {});

// Builds representatives for `codes` (any order preserved) passing `filter`.
std::vector<EnumeratedPoset> materialize(const std::vector<CanonicalCode>& codes, const PosetFilter& filter = {},
                                         const EnumerateOptions& options = {});

unsigned resolve_jobs(unsigned jobs) noexcept;

// Runs body(i) for i in [0, count) across `jobs` threads. Each index is
// visited exactly once; the caller merges results by index.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace posetdist
