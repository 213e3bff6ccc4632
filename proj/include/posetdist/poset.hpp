#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetdist/error.hpp"

namespace posetdist {

// Elements are addressed by their dense build-time index; names are the
// user-visible identity.
using Element = std::size_t;

// Square boolean matrix stored as rows of 64-bit words. Entry (i, j) answers
// "i R j".
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v = true) {
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = v ? (w | mask) : (w & ~mask);
  }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }
  // row(i) |= row(k)
  void or_row(std::size_t i, std::size_t k) {
    for (std::size_t w = 0; w < words_; ++w) bits_[i * words_ + w] |= bits_[k * words_ + w];
  }

  BoolMatrix transposed() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Immutable finite partial order. Holds the reflexive-transitive closure, its
// transitive reduction (the cover relation), and the all-pairs height table.
class Poset {
 public:
  // `closure` must be reflexive, antisymmetric and transitive. Names must be
  // valid and unique; use PosetBuilder for unchecked input.
  Poset(std::vector<std::string> names, BoolMatrix closure);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }

  std::optional<Element> find(std::string_view name) const;
  // Throws UnknownElement.
  Element at(std::string_view name) const;

  bool leq(Element x, Element y) const { return closure_(x, y); }
  bool less(Element x, Element y) const { return x != y && closure_(x, y); }
  bool comparable(Element x, Element y) const { return closure_(x, y) || closure_(y, x); }
  // x is covered by y.
  bool covered_by(Element x, Element y) const { return cover_(x, y); }

  const std::vector<Element>& upper_covers(Element x) const { return up_.at(x); }
  const std::vector<Element>& lower_covers(Element x) const { return down_.at(x); }
  std::size_t cover_edge_count() const noexcept { return cover_edges_; }

  const BoolMatrix& closure() const noexcept { return closure_; }
  const BoolMatrix& cover() const noexcept { return cover_; }

  // Shortest cover path length between comparable elements, in either
  // argument order. Throws NotComparable.
  std::uint32_t height(Element x, Element y) const;
  // Longest cover path length between comparable elements.
  std::uint32_t longest_height(Element x, Element y) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.closure_ == b.closure_;
  }

 private:
  static constexpr std::int32_t kNone = -1;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  BoolMatrix closure_;
  BoolMatrix cover_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::size_t cover_edges_ = 0;
  // (lower, upper) -> path lengths; kNone when not lower <= upper.
  std::vector<std::int32_t> min_height_;
  std::vector<std::int32_t> max_height_;
};

// Validates a name token: nonempty, no whitespace, no '#'.
void validate_name(std::string_view name);

// Accumulates elements in first-mention order and strict-order assertions in
// any form (not necessarily covers).
class PosetBuilder {
 public:
  // Declares an element; repeating a declaration is a DuplicateElement error.
  PosetBuilder& element(std::string_view name);
  // Asserts lower < upper, mentioning either name for the first time if new.
  PosetBuilder& relation(std::string_view lower, std::string_view upper);

  // Throws CycleDetected, EmptyPoset.
  Poset build() const;

 private:
  Element intern(std::string_view name);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<bool> declared_;
  std::vector<std::pair<Element, Element>> relations_;
};

// Relations are mentioned before isolated declarations, so elements are
// ordered by first mention in `relations` and then in `isolated`.
Poset build_poset(const std::vector<std::pair<std::string, std::string>>& relations,
                  const std::vector<std::string>& isolated = {});

std::vector<Element> interval(const Poset& p, Element x, Element y);

// Least common upper bound. Throws NoUpperBound or NoLeastUpperBound.
Element join(const Poset& p, Element x, Element y);
std::optional<Element> try_join(const Poset& p, Element x, Element y);
std::optional<Element> try_meet(const Poset& p, Element x, Element y);

std::vector<Element> common_upper_bounds(const Poset& p, Element x, Element y);
std::vector<Element> common_lower_bounds(const Poset& p, Element x, Element y);

Poset dual(const Poset& p);

bool is_connected(const Poset& p);
bool has_upper_filtering(const Poset& p);
bool has_lower_filtering(const Poset& p);
bool is_join_semilattice(const Poset& p);
bool is_lattice(const Poset& p);
bool is_tree_order(const Poset& p);

// z covered by both x and y (x != y) forces x v y to cover both.
// Throws NotAJoinSemilattice.
bool is_semimodular_cover(const Poset& p);

enum class HeightForm {
  // For every ordered pair (x, y) with a common lower bound z:
  // h(x, x v y) <= h(z, y).
  Verbatim,
  // Per unordered pair, both h(x, x v y) <= h(z, y) and h(y, x v y) <= h(z, x).
  Symmetrized,
};

// Height characterization of semimodularity. Throws NotAJoinSemilattice.
bool is_semimodular_height(const Poset& p, HeightForm form = HeightForm::Verbatim);

// Every interval has all of its maximal chains of equal cardinality.
bool is_jordan_dedekind(const Poset& p);

struct StructuralReport {
  bool connected = false;
  bool upper_filtering = false;
  bool lower_filtering = false;
  bool join_semilattice = false;
  bool lattice = false;
  bool tree_order = false;
  bool semimodular = false;  // false whenever not a join semilattice
  bool jordan_dedekind = false;
  std::size_t element_count = 0;
  std::size_t cover_edge_count = 0;

  friend bool operator==(const StructuralReport&, const StructuralReport&) = default;
};

StructuralReport structural_report(const Poset& p);

}  // namespace posetdist
