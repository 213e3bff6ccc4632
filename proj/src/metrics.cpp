#include "posetdist/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <string>

namespace posetdist {

namespace {

struct Outcome {
  std::optional<std::uint32_t> value;
  ErrorCode error = ErrorCode::DistanceUndefined;
  std::string message;
};

Outcome fail(ErrorCode code, std::string message) { return Outcome{std::nullopt, code, std::move(message)}; }

std::string pair_text(const Poset& p, Element x, Element y) {
  return "'" + p.name(x) + "' and '" + p.name(y) + "'";
}

// Undirected BFS over cover edges from src; unreachable entries stay max().
std::vector<std::uint32_t> hasse_bfs(const Poset& p, Element src) {
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(p.size(), kInf);
  std::deque<Element> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    for (const auto* nbrs : {&p.upper_covers(v), &p.lower_covers(v)}) {
      for (Element w : *nbrs) {
        if (dist[w] == kInf) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

Outcome zigzag_from(const Poset& p, const std::vector<std::uint32_t>& bfs, Element x, Element y) {
  if (bfs[y] == std::numeric_limits<std::uint32_t>::max())
    return fail(ErrorCode::Disconnected, pair_text(p, x, y) + " lie in different Hasse components");
  return Outcome{bfs[y]};
}

Outcome up_down(const Poset& p, Element x, Element y) {
  std::optional<std::uint32_t> best;
  for (Element u = 0; u < p.size(); ++u) {
    if (!p.leq(x, u) || !p.leq(y, u)) continue;
    const std::uint32_t d = p.height(x, u) + p.height(y, u);
    if (!best || d < *best) best = d;
  }
  if (!best) return fail(ErrorCode::NoUpperBound, pair_text(p, x, y) + " have no common upper bound");
  return Outcome{best};
}

Outcome down_up(const Poset& p, Element x, Element y) {
  std::optional<std::uint32_t> best;
  for (Element u = 0; u < p.size(); ++u) {
    if (!p.leq(u, x) || !p.leq(u, y)) continue;
    const std::uint32_t d = p.height(u, x) + p.height(u, y);
    if (!best || d < *best) best = d;
  }
  if (!best) return fail(ErrorCode::NoLowerBound, pair_text(p, x, y) + " have no common lower bound");
  return Outcome{best};
}

Outcome chebyshev(const Poset& p, Element x, Element y) {
  const auto bounds = common_upper_bounds(p, x, y);
  if (bounds.empty()) return fail(ErrorCode::NoUpperBound, pair_text(p, x, y) + " have no common upper bound");
  const auto j = try_join(p, x, y);
  if (!j) return fail(ErrorCode::NoLeastUpperBound, pair_text(p, x, y) + " have no least upper bound");
  return Outcome{std::max(p.height(x, *j), p.height(y, *j))};
}

Outcome compute(const Poset& p, DistanceKind kind, Element x, Element y) {
  switch (kind) {
    case DistanceKind::Zigzag: return zigzag_from(p, hasse_bfs(p, x), x, y);
    case DistanceKind::UpDown: return up_down(p, x, y);
    case DistanceKind::DownUp: return down_up(p, x, y);
    case DistanceKind::Chebyshev: return chebyshev(p, x, y);
  }
  return fail(ErrorCode::InvalidParameter, "unknown distance kind");
}

std::uint32_t unwrap(Outcome o) {
  if (!o.value) throw PosetError(o.error, o.message);
  return *o.value;
}

void check_element(const Poset& p, Element x) {
  if (x >= p.size())
    throw PosetError(ErrorCode::UnknownElement, "element index " + std::to_string(x) + " out of range");
}

}  // namespace

std::string_view distance_kind_name(DistanceKind kind) noexcept {
  switch (kind) {
    case DistanceKind::Zigzag: return "zigzag";
    case DistanceKind::UpDown: return "updown";
    case DistanceKind::DownUp: return "downup";
    case DistanceKind::Chebyshev: return "chebyshev";
  }
  return "unknown";
}

DistanceKind parse_distance_kind(std::string_view text) {
  std::string key;
  for (char c : text)
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "zigzag") return DistanceKind::Zigzag;
  if (key == "updown") return DistanceKind::UpDown;
  if (key == "downup") return DistanceKind::DownUp;
  if (key == "chebyshev" || key == "cheb") return DistanceKind::Chebyshev;
  throw PosetError(ErrorCode::InvalidParameter, "unknown distance kind '" + std::string(text) + "'");
}

std::uint32_t zigzag_distance(const Poset& p, Element x, Element y) {
  check_element(p, x);
  check_element(p, y);
  return unwrap(compute(p, DistanceKind::Zigzag, x, y));
}

std::uint32_t up_down_distance(const Poset& p, Element x, Element y) {
  check_element(p, x);
  check_element(p, y);
  return unwrap(up_down(p, x, y));
}

std::uint32_t down_up_distance(const Poset& p, Element x, Element y) {
  check_element(p, x);
  check_element(p, y);
  return unwrap(down_up(p, x, y));
}

std::uint32_t chebyshev_distance(const Poset& p, Element x, Element y) {
  check_element(p, x);
  check_element(p, y);
  return unwrap(chebyshev(p, x, y));
}

std::uint32_t distance(const Poset& p, DistanceKind kind, Element x, Element y) {
  check_element(p, x);
  check_element(p, y);
  return unwrap(compute(p, kind, x, y));
}

DistanceTable::DistanceTable(const Poset& p, DistanceKind kind)
    : kind_(kind), n_(p.size()), values_(n_ * n_), errors_(n_ * n_, ErrorCode::DistanceUndefined), messages_(n_ * n_) {
  for (Element x = 0; x < n_; ++x) {
    std::vector<std::uint32_t> bfs;
    if (kind == DistanceKind::Zigzag) bfs = hasse_bfs(p, x);
    for (Element y = 0; y < n_; ++y) {
      Outcome o;
      if (kind == DistanceKind::Zigzag) {
        o = zigzag_from(p, bfs, x, y);
      } else if (y < x) {
        // Every kind is symmetric by construction.
        values_[x * n_ + y] = values_[y * n_ + x];
        errors_[x * n_ + y] = errors_[y * n_ + x];
        messages_[x * n_ + y] = messages_[y * n_ + x];
        continue;
      } else {
        o = compute(p, kind, x, y);
      }
      values_[x * n_ + y] = o.value;
      errors_[x * n_ + y] = o.error;
      messages_[x * n_ + y] = std::move(o.message);
    }
  }
}

std::uint32_t DistanceTable::value(Element x, Element y) const {
  const auto& v = values_.at(x * n_ + y);
  if (!v) throw PosetError(errors_[x * n_ + y], messages_[x * n_ + y]);
  return *v;
}

std::optional<std::pair<Element, Element>> DistanceTable::first_undefined() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (!values_[x * n_ + y]) return std::pair{x, y};
  return std::nullopt;
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> chains;
  Chain path;
  auto extend = [&](auto&& self, Element v) -> void {
    path.push_back(v);
    if (p.upper_covers(v).empty()) {
      chains.push_back(path);
    } else {
      for (Element w : p.upper_covers(v)) self(self, w);
    }
    path.pop_back();
  };
  for (Element v = 0; v < p.size(); ++v)
    if (p.lower_covers(v).empty()) extend(extend, v);
  return chains;
}

ChainCompatibility chain_compatibility(const Poset& p, DistanceKind kind) {
  const DistanceTable table(p, kind);
  for (const Chain& c : maximal_chains(p)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const std::uint32_t d = table.value(c[i], c[j]);
        if (d != j - i) return ChainCompatibility{false, ChainViolation{c, i, j, d}};
      }
    }
  }
  return ChainCompatibility{};
}

std::vector<TriangleViolation> triangle_violations(const Poset& p, DistanceKind kind) {
  return triangle_violations(p, DistanceTable(p, kind));
}

std::vector<TriangleViolation> triangle_violations(const Poset& p, const DistanceTable& table) {
  if (auto bad = table.first_undefined()) {
    std::string why;
    try {
      table.value(bad->first, bad->second);
    } catch (const PosetError& e) {
      why = e.what();
    }
    throw PosetError(ErrorCode::DistanceUndefined,
                     std::string(distance_kind_name(table.kind())) + " distance is undefined: " + why);
  }
  std::vector<TriangleViolation> out;
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y == x) continue;
      for (Element z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const std::uint32_t lhs = *table.at(x, z);
        const std::uint32_t rhs = *table.at(x, y) + *table.at(y, z);
        if (lhs > rhs) out.push_back(TriangleViolation{x, y, z, lhs, rhs});
      }
    }
  }
  return out;
}

DistanceComparison compare_distances(const Poset& p) {
  if (!has_upper_filtering(p))
    throw PosetError(ErrorCode::NoUpperBound, "distance comparison requires the upper filtering property");
  const DistanceTable zz(p, DistanceKind::Zigzag);
  const DistanceTable ud(p, DistanceKind::UpDown);
  const DistanceTable ch(p, DistanceKind::Chebyshev);
  DistanceComparison out;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      DistanceComparisonRow row{x, y, zz.value(x, y), ud.value(x, y), ch.at(x, y)};
      out.zigzag_le_up_down = out.zigzag_le_up_down && row.zigzag <= row.up_down;
      out.zigzag_eq_up_down = out.zigzag_eq_up_down && row.zigzag == row.up_down;
      if (row.chebyshev) {
        out.chebyshev_le_up_down = out.chebyshev_le_up_down && *row.chebyshev <= row.up_down;
        out.chebyshev_le_zigzag = out.chebyshev_le_zigzag && *row.chebyshev <= row.zigzag;
      } else {
        ++out.chebyshev_undefined;
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

KinshipResult kinship(const Poset& p, Element ego, Element alter) {
  check_element(p, ego);
  check_element(p, alter);
  if (!is_tree_order(p))
    throw PosetError(ErrorCode::NotATreeOrder, "kinship requires a tree order with ancestors above descendants");
  KinshipResult r;
  r.ancestor = join(p, ego, alter);
  r.h_ego = p.height(ego, r.ancestor);
  r.h_alter = p.height(alter, r.ancestor);
  r.civil = up_down_distance(p, ego, alter);
  r.canon = chebyshev_distance(p, ego, alter);
  return r;
}

}  // namespace posetdist
