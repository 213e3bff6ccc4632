// Library results checked against the brute-force oracle over every poset
// of up to five elements, plus randomized larger instances.
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "posetdist/enumerate.hpp"
#include "posetdist/families.hpp"
#include "posetdist/metrics.hpp"

using namespace posetdist;

namespace {

std::vector<Poset> all_posets(std::size_t n_max) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const auto& code : enumerate_codes(n)) out.push_back(poset_from_code(code));
  return out;
}

std::optional<std::uint32_t> try_distance(const Poset& p, DistanceKind k, Element x, Element y) {
  try {
    return distance(p, k, x, y);
  } catch (const PosetError&) {
    return std::nullopt;
  }
}

std::optional<std::uint32_t> widen(std::optional<int> v) {
  if (!v || *v < 0) return std::nullopt;
  return static_cast<std::uint32_t>(*v);
}

}  // namespace

class Exhaustive : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { posets_ = new std::vector<Poset>(all_posets(5)); }
  static void TearDownTestSuite() {
    delete posets_;
    posets_ = nullptr;
  }
  static std::vector<Poset>* posets_;
};
std::vector<Poset>* Exhaustive::posets_ = nullptr;

TEST_F(Exhaustive, CoversAndHeights) {
  for (const Poset& p : *posets_) {
    const auto r = oracle::from_poset(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        ASSERT_EQ(p.covered_by(x, y), oracle::covers(r, x, y));
        if (!p.leq(x, y)) continue;
        const auto sizes = oracle::chain_sizes(r, x, y);
        ASSERT_EQ(p.height(x, y), static_cast<std::uint32_t>(*sizes.begin() - 1));
        ASSERT_EQ(p.longest_height(x, y), static_cast<std::uint32_t>(*sizes.rbegin() - 1));
      }
  }
}

TEST_F(Exhaustive, PredicatesMatchOracle) {
  for (const Poset& p : *posets_) {
    const auto r = oracle::from_poset(p);
    const StructuralReport rep = structural_report(p);
    ASSERT_EQ(rep.upper_filtering, oracle::upper_filtering(r));
    ASSERT_EQ(rep.lower_filtering, oracle::lower_filtering(r));
    ASSERT_EQ(rep.join_semilattice, oracle::join_semilattice(r));
    ASSERT_EQ(rep.tree_order, oracle::tree_order(r));
    ASSERT_EQ(rep.jordan_dedekind, oracle::jordan_dedekind(r));
    if (rep.join_semilattice) ASSERT_EQ(rep.semimodular, oracle::semimodular(r));
    bool connected = true;
    for (int y = 1; y < r.n; ++y) connected = connected && oracle::zigzag(r, 0, y) >= 0;
    ASSERT_EQ(rep.connected, connected);
    ASSERT_EQ(rep.lattice, oracle::join_semilattice(r) && oracle::join_semilattice(oracle::from_poset(dual(p))));
  }
}

TEST_F(Exhaustive, SemimodularFormsAgree) {
  for (const Poset& p : *posets_) {
    if (!is_join_semilattice(p)) continue;
    const bool cover = is_semimodular_cover(p);
    ASSERT_EQ(is_semimodular_height(p, HeightForm::Verbatim), cover);
    ASSERT_EQ(is_semimodular_height(p, HeightForm::Symmetrized), cover);
  }
}

TEST_F(Exhaustive, JoinsMatchOracle) {
  for (const Poset& p : *posets_) {
    const auto r = oracle::from_poset(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        const auto j = oracle::join(r, x, y);
        const auto mine = try_join(p, x, y);
        ASSERT_EQ(mine.has_value(), j.has_value());
        if (j) ASSERT_EQ(*mine, static_cast<Element>(*j));
      }
  }
}

TEST_F(Exhaustive, DistancesMatchOracle) {
  for (const Poset& p : *posets_) {
    const auto r = oracle::from_poset(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        ASSERT_EQ(try_distance(p, DistanceKind::Zigzag, x, y), widen(oracle::zigzag(r, x, y)));
        ASSERT_EQ(try_distance(p, DistanceKind::UpDown, x, y), widen(oracle::up_down(r, x, y)));
        ASSERT_EQ(try_distance(p, DistanceKind::DownUp, x, y), widen(oracle::down_up(r, x, y)));
        ASSERT_EQ(try_distance(p, DistanceKind::Chebyshev, x, y), widen(oracle::chebyshev(r, x, y)));
      }
  }
}

TEST_F(Exhaustive, SymmetryIdentityAndDuality) {
  for (const Poset& p : *posets_) {
    const Poset d = dual(p);
    for (DistanceKind k : kAllDistanceKinds) {
      const DistanceTable t(p, k);
      for (Element x = 0; x < p.size(); ++x) {
        if (t.at(x, x)) ASSERT_EQ(*t.at(x, x), 0u);
        for (Element y = 0; y < p.size(); ++y) {
          ASSERT_EQ(t.at(x, y), t.at(y, x));
          if (t.at(x, y) && x != y) ASSERT_GT(*t.at(x, y), 0u);
        }
      }
    }
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        ASSERT_EQ(try_distance(p, DistanceKind::UpDown, x, y), try_distance(d, DistanceKind::DownUp, x, y));
  }
}

TEST_F(Exhaustive, TreeOrdersAreSemimodularSemilattices) {
  for (const Poset& p : *posets_) {
    if (!is_tree_order(p)) continue;
    ASSERT_TRUE(is_join_semilattice(p));
    ASSERT_TRUE(is_semimodular_cover(p));
  }
}

TEST_F(Exhaustive, HeightConcatenationUnderJordanDedekind) {
  for (const Poset& p : *posets_) {
    if (!is_jordan_dedekind(p)) continue;
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        for (Element z = 0; z < p.size(); ++z)
          if (p.leq(x, y) && p.leq(y, z)) ASSERT_EQ(p.height(x, z), p.height(x, y) + p.height(y, z));
  }
}

TEST(Randomized, ClosureAndCoverConsistency) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Poset p = random_poset(12, 0.15 + 0.02 * static_cast<double>(seed % 10), seed);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        if (x != y) ASSERT_FALSE(p.leq(x, y) && p.leq(y, x));
        for (Element z = 0; z < p.size(); ++z)
          if (p.leq(x, y) && p.leq(y, z)) ASSERT_TRUE(p.leq(x, z));
        if (p.covered_by(x, y)) {
          ASSERT_EQ(p.height(x, y), 1u);
          ASSERT_EQ(p.longest_height(x, y), 1u);
        }
      }
    // Reachability over covers reproduces the closure.
    for (Element x = 0; x < p.size(); ++x) {
      std::vector<bool> seen(p.size(), false);
      std::vector<Element> stack{x};
      seen[x] = true;
      while (!stack.empty()) {
        const Element v = stack.back();
        stack.pop_back();
        for (Element w : p.upper_covers(v))
          if (!seen[w]) stack.push_back(w), seen[w] = true;
      }
      for (Element y = 0; y < p.size(); ++y) ASSERT_EQ(seen[y], p.leq(x, y));
    }
  }
}

TEST(Randomized, DistancesMatchOracleOnLargerPosets) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Poset p = random_poset(9, 0.35, seed);
    const auto r = oracle::from_poset(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        ASSERT_EQ(try_distance(p, DistanceKind::UpDown, x, y), widen(oracle::up_down(r, x, y)));
        ASSERT_EQ(try_distance(p, DistanceKind::Chebyshev, x, y), widen(oracle::chebyshev(r, x, y)));
        ASSERT_EQ(try_distance(p, DistanceKind::Zigzag, x, y), widen(oracle::zigzag(r, x, y)));
      }
  }
}
