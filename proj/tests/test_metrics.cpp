#include <gtest/gtest.h>

#include <algorithm>

#include "posetdist/families.hpp"
#include "posetdist/metrics.hpp"
#include "posetdist/poset_file.hpp"

using namespace posetdist;

namespace {

std::uint32_t d(const Poset& p, DistanceKind kind, const char* x, const char* y) {
  return distance(p, kind, p.at(x), p.at(y));
}

// Grandparent g; parents p1, p2; p1's children c1, c2; p2's children c3, c4.
Poset family_tree() {
  return parse_poset_file("p1 < g\np2 < g\nc1 < p1\nc2 < p1\nc3 < p2\nc4 < p2\n");
}

}  // namespace

TEST(DistanceKinds, Names) {
  EXPECT_EQ(parse_distance_kind("up-down"), DistanceKind::UpDown);
  EXPECT_EQ(parse_distance_kind("UpDown"), DistanceKind::UpDown);
  EXPECT_EQ(parse_distance_kind("down_up"), DistanceKind::DownUp);
  EXPECT_EQ(parse_distance_kind("cheb"), DistanceKind::Chebyshev);
  for (DistanceKind k : kAllDistanceKinds) EXPECT_EQ(parse_distance_kind(distance_kind_name(k)), k);
  EXPECT_THROW(parse_distance_kind("euclid"), PosetError);
}

TEST(Zigzag, Examples) {
  EXPECT_EQ(d(pentagon(), DistanceKind::Zigzag, "a", "c"), 2u);
  EXPECT_EQ(d(chain(4), DistanceKind::Zigzag, "c0", "c3"), 3u);
  EXPECT_EQ(d(boolean_lattice(3), DistanceKind::Zigzag, "{1}", "{2}"), 2u);
  try {
    d(antichain(2), DistanceKind::Zigzag, "a0", "a1");
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(UpDown, Examples) {
  const Poset w = prop4_witness();
  EXPECT_EQ(d(w, DistanceKind::UpDown, "x", "z"), 3u);
  EXPECT_EQ(d(w, DistanceKind::UpDown, "x", "y"), 1u);
  EXPECT_EQ(d(w, DistanceKind::UpDown, "y", "z"), 1u);
  EXPECT_EQ(d(boolean_lattice(3), DistanceKind::UpDown, "{1}", "{2}"), 2u);
  EXPECT_EQ(d(chain(4), DistanceKind::UpDown, "c0", "c2"), 2u);
  try {
    d(antichain(2), DistanceKind::UpDown, "a0", "a1");
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoUpperBound);
  }
}

TEST(DownUp, Examples) {
  EXPECT_EQ(d(boolean_lattice(3), DistanceKind::DownUp, "{1}", "{2}"), 2u);
  EXPECT_EQ(d(chain(4), DistanceKind::DownUp, "c1", "c3"), 2u);
  EXPECT_EQ(d(dual(prop4_witness()), DistanceKind::DownUp, "x", "z"), 3u);
  try {
    d(antichain(2), DistanceKind::DownUp, "a0", "a1");
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoLowerBound);
  }
}

TEST(Chebyshev, Examples) {
  // Join is (2,1) itself and the product-order height from (0,0) is 3.
  EXPECT_EQ(d(grid({3, 3}), DistanceKind::Chebyshev, "(0,0)", "(2,1)"), 3u);
  EXPECT_EQ(d(grid({3, 3}), DistanceKind::Chebyshev, "(0,2)", "(1,0)"), 2u);
  EXPECT_EQ(d(family_tree(), DistanceKind::Chebyshev, "c1", "c2"), 1u);
  const Poset w = chebyshev_witness();
  EXPECT_EQ(d(w, DistanceKind::Chebyshev, "x", "z"), 3u);
  EXPECT_EQ(d(w, DistanceKind::Chebyshev, "x", "y") + d(w, DistanceKind::Chebyshev, "y", "z"), 2u);
  try {
    d(build_poset({{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}), DistanceKind::Chebyshev, "a", "b");
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoLeastUpperBound);
  }
}

TEST(Distances, UnknownElementIndex) {
  EXPECT_THROW(distance(chain(3), DistanceKind::Zigzag, 0, 7), PosetError);
}

TEST(Table, RecordsUndefined) {
  const DistanceTable t(antichain(3), DistanceKind::DownUp);
  ASSERT_TRUE(t.first_undefined().has_value());
  const auto [x, y] = *t.first_undefined();
  EXPECT_FALSE(t.at(x, y).has_value());
  EXPECT_THROW(t.value(x, y), PosetError);
  EXPECT_THROW(triangle_violations(antichain(3), DistanceKind::DownUp), PosetError);
}

TEST(Chains, Maximal) {
  const Poset c = chain(3);
  ASSERT_EQ(maximal_chains(c), (std::vector<Chain>{{0, 1, 2}}));

  const Poset p = pentagon();
  std::vector<std::vector<std::string>> named;
  for (const Chain& ch : maximal_chains(p)) {
    std::vector<std::string> n;
    for (Element e : ch) n.push_back(p.name(e));
    named.push_back(n);
  }
  std::sort(named.begin(), named.end());
  EXPECT_EQ(named, (std::vector<std::vector<std::string>>{{"0", "a", "1"}, {"0", "b", "c", "1"}}));

  EXPECT_EQ(maximal_chains(antichain(2)).size(), 2u);
}

TEST(Compatibility, Examples) {
  for (DistanceKind k : kAllDistanceKinds) EXPECT_TRUE(is_chain_compatible(chain(5), k));
  const Poset p = pentagon();
  const ChainCompatibility c = chain_compatibility(p, DistanceKind::Zigzag);
  ASSERT_FALSE(c.compatible);
  ASSERT_TRUE(c.violation.has_value());
  const ChainViolation& v = *c.violation;
  EXPECT_EQ(v.chain.size(), 4u);
  EXPECT_EQ(p.name(v.chain[v.i]), "0");
  EXPECT_EQ(p.name(v.chain[v.j]), "1");
  EXPECT_EQ(v.distance, 2u);
  EXPECT_TRUE(is_chain_compatible(boolean_lattice(3), DistanceKind::Zigzag));
}

TEST(Triangle, Examples) {
  EXPECT_TRUE(triangle_violations(boolean_lattice(3), DistanceKind::Chebyshev).empty());
  const Poset w = prop4_witness();
  const auto v = triangle_violations(w, DistanceKind::UpDown);
  const bool found = std::any_of(v.begin(), v.end(), [&](const TriangleViolation& t) {
    return w.name(t.x) == "x" && w.name(t.y) == "y" && w.name(t.z) == "z" && t.lhs == 3 && t.rhs == 2;
  });
  EXPECT_TRUE(found);
  for (const char* spec : {"pentagon", "boolean:3", "grid:3x4", "prop4-witness", "chebyshev-witness"})
    EXPECT_TRUE(triangle_violations(generate(parse_family_spec(spec)), DistanceKind::Zigzag).empty()) << spec;
  EXPECT_FALSE(triangle_violations(chebyshev_witness(), DistanceKind::Chebyshev).empty());
}

TEST(Triangle, LexicographicOrder) {
  const auto v = triangle_violations(prop4_witness(), DistanceKind::UpDown);
  for (std::size_t i = 1; i < v.size(); ++i)
    EXPECT_LT(std::tie(v[i - 1].x, v[i - 1].y, v[i - 1].z), std::tie(v[i].x, v[i].y, v[i].z));
}

TEST(Comparison, Examples) {
  const DistanceComparison b = compare_distances(boolean_lattice(3));
  EXPECT_TRUE(b.zigzag_le_up_down);
  EXPECT_TRUE(b.zigzag_eq_up_down);
  EXPECT_TRUE(b.chebyshev_le_up_down);
  EXPECT_EQ(b.rows.size(), 8u * 7u / 2u);

  const DistanceComparison c = compare_distances(chain(4));
  for (const auto& r : c.rows) {
    EXPECT_EQ(r.zigzag, r.up_down);
    EXPECT_EQ(r.chebyshev, std::optional<std::uint32_t>(r.zigzag));
  }

  const DistanceComparison w = compare_distances(prop4_witness());
  EXPECT_TRUE(w.zigzag_le_up_down);
  EXPECT_FALSE(w.zigzag_eq_up_down);

  // Chebyshev is not bounded by zigzag in general.
  EXPECT_FALSE(compare_distances(chebyshev_witness()).chebyshev_le_zigzag);
  EXPECT_THROW(compare_distances(antichain(2)), PosetError);
}

TEST(Kinship, Degrees) {
  const Poset t = family_tree();
  auto k = [&](const char* a, const char* b) { return kinship(t, t.at(a), t.at(b)); };
  EXPECT_EQ(k("c1", "p1").civil, 1u);
  EXPECT_EQ(k("c1", "p1").canon, 1u);
  EXPECT_EQ(k("c1", "c2").civil, 2u);
  EXPECT_EQ(k("c1", "c2").canon, 1u);
  EXPECT_EQ(k("c1", "p2").civil, 3u);
  EXPECT_EQ(k("c1", "p2").canon, 2u);
  EXPECT_EQ(k("c1", "c3").civil, 4u);
  EXPECT_EQ(k("c1", "c3").canon, 2u);
  EXPECT_EQ(t.name(k("c1", "c3").ancestor), "g");
  EXPECT_EQ(k("c1", "c3").h_ego, 2u);
  EXPECT_EQ(k("c4", "c4").civil, 0u);
  EXPECT_THROW(kinship(pentagon(), 0, 1), PosetError);
}
