#include "posetdist/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace posetdist {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NoUpperBound: return "NoUpperBound";
    case ErrorCode::NoLeastUpperBound: return "NoLeastUpperBound";
    case ErrorCode::NoLowerBound: return "NoLowerBound";
    case ErrorCode::NotAJoinSemilattice: return "NotAJoinSemilattice";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DistanceUndefined: return "DistanceUndefined";
    case ErrorCode::NotATreeOrder: return "NotATreeOrder";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j)) t.set(j, i);
  return t;
}

Poset::Poset(std::vector<std::string> names, BoolMatrix closure)
    : names_(std::move(names)), closure_(std::move(closure)) {
  const std::size_t n = names_.size();
  if (closure_.size() != n)
    throw PosetError(ErrorCode::InvalidParameter, "closure matrix size does not match element count");
  for (Element i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw PosetError(ErrorCode::DuplicateElement, "duplicate element '" + names_[i] + "'");
  }

  // Covers of x: strict up-set of x minus everything strictly above some
  // element of it.
  cover_ = BoolMatrix(n);
  up_.assign(n, {});
  down_.assign(n, {});
  BoolMatrix strict = closure_;
  for (Element x = 0; x < n; ++x) strict.set(x, x, false);
  const std::size_t words = strict.words_per_row();
  std::vector<std::uint64_t> shadow(words);
  for (Element x = 0; x < n; ++x) {
    std::fill(shadow.begin(), shadow.end(), 0);
    for (Element z = 0; z < n; ++z) {
      if (!strict(x, z)) continue;
      const auto r = strict.row(z);
      for (std::size_t w = 0; w < words; ++w) shadow[w] |= r[w];
    }
    for (Element y = 0; y < n; ++y) {
      if (strict(x, y) && !((shadow[y / 64] >> (y % 64)) & 1u)) {
        cover_.set(x, y);
        up_[x].push_back(y);
        down_[y].push_back(x);
        ++cover_edges_;
      }
    }
  }

  // A linear extension: strictly smaller elements have strictly smaller
  // down-sets.
  std::vector<std::size_t> below(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) below[x] += closure_(y, x) ? 1 : 0;
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });

  min_height_.assign(n * n, kNone);
  max_height_.assign(n * n, kNone);
  for (Element src = 0; src < n; ++src) {
    std::int32_t* mins = &min_height_[src * n];
    std::int32_t* maxs = &max_height_[src * n];
    std::deque<Element> queue{src};
    mins[src] = 0;
    while (!queue.empty()) {
      const Element v = queue.front();
      queue.pop_front();
      for (Element w : up_[v]) {
        if (mins[w] == kNone) {
          mins[w] = mins[v] + 1;
          queue.push_back(w);
        }
      }
    }
    maxs[src] = 0;
    for (Element v : order) {
      if (maxs[v] == kNone) continue;
      for (Element w : up_[v]) maxs[w] = std::max(maxs[w], maxs[v] + 1);
    }
  }
}

std::optional<Element> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw PosetError(ErrorCode::UnknownElement, "unknown element '" + std::string(name) + "'");
}

std::uint32_t Poset::height(Element x, Element y) const {
  if (closure_(y, x)) std::swap(x, y);
  const std::int32_t h = min_height_.at(x * size() + y);
  if (h == kNone)
    throw PosetError(ErrorCode::NotComparable, "'" + name(x) + "' and '" + name(y) + "' are not comparable");
  return static_cast<std::uint32_t>(h);
}

std::uint32_t Poset::longest_height(Element x, Element y) const {
  if (closure_(y, x)) std::swap(x, y);
  const std::int32_t h = max_height_.at(x * size() + y);
  if (h == kNone)
    throw PosetError(ErrorCode::NotComparable, "'" + name(x) + "' and '" + name(y) + "' are not comparable");
  return static_cast<std::uint32_t>(h);
}

void validate_name(std::string_view name) {
  if (name.empty()) throw PosetError(ErrorCode::EmptyName, "element name is empty");
  for (char c : name) {
    if (c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f')
      throw PosetError(ErrorCode::InvalidName,
                       "element name '" + std::string(name) + "' contains whitespace or '#'");
  }
}

Element PosetBuilder::intern(std::string_view name) {
  validate_name(name);
  auto [it, inserted] = index_.emplace(std::string(name), names_.size());
  if (inserted) {
    names_.emplace_back(name);
    declared_.push_back(false);
  }
  return it->second;
}

PosetBuilder& PosetBuilder::element(std::string_view name) {
  const Element e = intern(name);
  if (declared_[e])
    throw PosetError(ErrorCode::DuplicateElement, "element '" + std::string(name) + "' declared twice");
  declared_[e] = true;
  return *this;
}

PosetBuilder& PosetBuilder::relation(std::string_view lower, std::string_view upper) {
  const Element a = intern(lower);
  const Element b = intern(upper);
  relations_.emplace_back(a, b);
  return *this;
}

Poset PosetBuilder::build() const {
  const std::size_t n = names_.size();
  if (n == 0) throw PosetError(ErrorCode::EmptyPoset, "poset has no elements");
  BoolMatrix strict(n);
  for (auto [a, b] : relations_) strict.set(a, b);
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (strict(i, k)) strict.or_row(i, k);
  for (std::size_t i = 0; i < n; ++i) {
    if (strict(i, i))
      throw PosetError(ErrorCode::CycleDetected, "order relations imply '" + names_[i] + "' < '" + names_[i] + "'");
    strict.set(i, i);
  }
  return Poset(names_, std::move(strict));
}

Poset build_poset(const std::vector<std::pair<std::string, std::string>>& relations,
                  const std::vector<std::string>& isolated) {
  PosetBuilder builder;
  for (const auto& [a, b] : relations) builder.relation(a, b);
  for (const auto& name : isolated) builder.element(name);
  return builder.build();
}

std::vector<Element> interval(const Poset& p, Element x, Element y) {
  if (!p.leq(x, y))
    throw PosetError(ErrorCode::NotComparable, "interval requires '" + p.name(x) + "' <= '" + p.name(y) + "'");
  std::vector<Element> out;
  for (Element z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) out.push_back(z);
  return out;
}

std::vector<Element> common_upper_bounds(const Poset& p, Element x, Element y) {
  std::vector<Element> out;
  for (Element u = 0; u < p.size(); ++u)
    if (p.leq(x, u) && p.leq(y, u)) out.push_back(u);
  return out;
}

std::vector<Element> common_lower_bounds(const Poset& p, Element x, Element y) {
  std::vector<Element> out;
  for (Element u = 0; u < p.size(); ++u)
    if (p.leq(u, x) && p.leq(u, y)) out.push_back(u);
  return out;
}

namespace {

// Minimal elements of `set` under the order of p.
std::vector<Element> minimal_of(const Poset& p, const std::vector<Element>& set) {
  std::vector<Element> out;
  for (Element a : set) {
    bool minimal = true;
    for (Element b : set) {
      if (p.less(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

std::optional<Element> try_join(const Poset& p, Element x, Element y) {
  const auto mins = minimal_of(p, common_upper_bounds(p, x, y));
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

std::optional<Element> try_meet(const Poset& p, Element x, Element y) {
  const auto lower = common_lower_bounds(p, x, y);
  std::vector<Element> maxs;
  for (Element a : lower) {
    if (std::none_of(lower.begin(), lower.end(), [&](Element b) { return p.less(a, b); })) maxs.push_back(a);
  }
  if (maxs.size() != 1) return std::nullopt;
  return maxs.front();
}

Element join(const Poset& p, Element x, Element y) {
  const auto bounds = common_upper_bounds(p, x, y);
  if (bounds.empty())
    throw PosetError(ErrorCode::NoUpperBound,
                     "'" + p.name(x) + "' and '" + p.name(y) + "' have no common upper bound");
  const auto mins = minimal_of(p, bounds);
  if (mins.size() != 1)
    throw PosetError(ErrorCode::NoLeastUpperBound,
                     "'" + p.name(x) + "' and '" + p.name(y) + "' have " + std::to_string(mins.size()) +
                         " minimal upper bounds");
  return mins.front();
}

Poset dual(const Poset& p) { return Poset(p.names(), p.closure().transposed()); }

bool is_connected(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    for (const auto* nbrs : {&p.upper_covers(v), &p.lower_covers(v)}) {
      for (Element w : *nbrs) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push_back(w);
        }
      }
    }
  }
  return reached == n;
}

bool has_upper_filtering(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (common_upper_bounds(p, x, y).empty()) return false;
  return true;
}

bool has_lower_filtering(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (common_lower_bounds(p, x, y).empty()) return false;
  return true;
}

bool is_join_semilattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!try_join(p, x, y)) return false;
  return true;
}

bool is_lattice(const Poset& p) {
  if (!is_join_semilattice(p)) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!try_meet(p, x, y)) return false;
  return true;
}

bool is_tree_order(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (p.comparable(x, y)) continue;
      if (!try_join(p, x, y)) return false;
      if (!common_lower_bounds(p, x, y).empty()) return false;
    }
  }
  return true;
}

namespace {

void require_join_semilattice(const Poset& p) {
  if (!is_join_semilattice(p))
    throw PosetError(ErrorCode::NotAJoinSemilattice, "semimodularity is defined for join semilattices only");
}

}  // namespace

bool is_semimodular_cover(const Poset& p) {
  require_join_semilattice(p);
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      bool shared_lower_cover = false;
      for (Element z : p.lower_covers(x)) shared_lower_cover = shared_lower_cover || p.covered_by(z, y);
      if (!shared_lower_cover) continue;
      const Element j = join(p, x, y);
      if (!p.covered_by(x, j) || !p.covered_by(y, j)) return false;
    }
  }
  return true;
}

bool is_semimodular_height(const Poset& p, HeightForm form) {
  require_join_semilattice(p);
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = (form == HeightForm::Verbatim ? 0 : x + 1); y < n; ++y) {
      const auto lower = common_lower_bounds(p, x, y);
      if (lower.empty()) continue;
      const Element j = join(p, x, y);
      for (Element z : lower) {
        if (p.height(x, j) > p.height(z, y)) return false;
        if (form == HeightForm::Symmetrized && p.height(y, j) > p.height(z, x)) return false;
      }
    }
  }
  return true;
}

bool is_jordan_dedekind(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(x, y) && p.height(x, y) != p.longest_height(x, y)) return false;
  return true;
}

StructuralReport structural_report(const Poset& p) {
  StructuralReport r;
  r.element_count = p.size();
  r.cover_edge_count = p.cover_edge_count();
  r.connected = is_connected(p);
  r.upper_filtering = has_upper_filtering(p);
  r.lower_filtering = has_lower_filtering(p);
  r.join_semilattice = is_join_semilattice(p);
  r.lattice = r.join_semilattice && is_lattice(p);
  r.tree_order = is_tree_order(p);
  r.semimodular = r.join_semilattice && is_semimodular_cover(p);
  r.jordan_dedekind = is_jordan_dedekind(p);
  return r;
}

}  // namespace posetdist
