#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracle.hpp"
#include "posetdist/enumerate.hpp"
#include "posetdist/families.hpp"

using namespace posetdist;

namespace {

Poset relabel(const Poset& p, const std::vector<std::size_t>& perm) {
  BoolMatrix m(p.size());
  std::vector<std::string> names(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    names[perm[i]] = p.name(i);
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) m.set(perm[i], perm[j]);
  }
  return Poset(std::move(names), std::move(m));
}

bool isomorphic_by_permutation(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == b.leq(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Canonical, RelabelingInvariant) {
  const Poset c = chain(3);
  EXPECT_EQ(canonical_code(c), canonical_code(relabel(c, {2, 0, 1})));
  EXPECT_EQ(canonical_code(c), canonical_code(relabel(c, {1, 2, 0})));
  EXPECT_NE(canonical_code(c), canonical_code(antichain(3)));
  for (const char* spec : {"boolean:3", "grid:2x3", "pentagon", "chebyshev-witness", "random:9:0.35:4"}) {
    const Poset p = generate(parse_family_spec(spec));
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::rotate(perm.begin(), perm.begin() + 2, perm.end());
    EXPECT_EQ(canonical_code(p), canonical_code(relabel(p, perm))) << spec;
  }
}

TEST(Canonical, DualityExamples) {
  const Poset p = pentagon();
  const Poset d = dual(p);
  // The pentagon turns out to be self-dual: the exhaustive check agrees.
  EXPECT_TRUE(isomorphic_by_permutation(p, d));
  EXPECT_EQ(canonical_code(p), canonical_code(d));
  const Poset y = build_poset({{"a", "c"}, {"b", "c"}, {"c", "d"}});
  EXPECT_FALSE(isomorphic_by_permutation(y, dual(y)));
  EXPECT_NE(canonical_code(y), canonical_code(dual(y)));
  EXPECT_EQ(canonical_code(boolean_lattice(2)), canonical_code(dual(boolean_lattice(2))));
}

TEST(Canonical, DecodeRoundTrip) {
  const Poset p = chebyshev_witness();
  const CanonicalCode code = canonical_code(p);
  EXPECT_EQ(code.element_count(), p.size());
  const Poset back = poset_from_code(code);
  EXPECT_EQ(canonical_code(back), code);
  EXPECT_TRUE(isomorphic_by_permutation(p, back));
  EXPECT_THROW(decode_closure(CanonicalCode({0, 3})), PosetError);
}

TEST(Enumerate, CountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_codes(n).size(), expected[n - 1]) << n;
}

TEST(Enumerate, LabeledOracleCounts) {
  const std::size_t labeled[] = {1, 3, 19, 219, 4231};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(oracle::labeled_posets(n).size(), labeled[n - 1]) << n;
}

// Each oracle class maps to exactly one enumerated code, and every code is hit.
TEST(Enumerate, ClassForClassAgainstOracle) {
  for (int n = 1; n <= 5; ++n) {
    const auto reps = oracle::iso_classes(n);
    const auto codes = enumerate_codes(n);
    std::set<CanonicalCode> from_oracle;
    for (const auto& r : reps) from_oracle.insert(canonical_code(oracle::to_poset(r)));
    EXPECT_EQ(from_oracle.size(), reps.size()) << n;
    EXPECT_EQ(std::set<CanonicalCode>(codes.begin(), codes.end()), from_oracle) << n;
  }
}

TEST(Enumerate, OracleCountSix) { EXPECT_EQ(oracle::iso_classes(6).size(), enumerate_codes(6).size()); }

TEST(Enumerate, SortedAndDecodable) {
  const auto codes = enumerate_codes(5);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  for (const auto& c : codes) EXPECT_EQ(canonical_code(poset_from_code(c)), c);
}

TEST(Enumerate, TreeOrderFilterMatchesOracle) {
  std::size_t oracle_trees = 0;
  for (const auto& r : oracle::iso_classes(4)) oracle_trees += oracle::tree_order(r);
  EXPECT_EQ(enumerate_posets(4, parse_filter("tree_order")).size(), oracle_trees);
}

TEST(Enumerate, Filters) {
  const PosetFilter f = parse_filter("join_semilattice,!semimodular");
  ASSERT_EQ(f.terms.size(), 2u);
  for (const auto& ep : enumerate_posets(5, f)) {
    EXPECT_TRUE(ep.report.join_semilattice);
    EXPECT_FALSE(ep.report.semimodular);
  }
  EXPECT_EQ(enumerate_posets(4, parse_filter("")).size(), 16u);
  EXPECT_EQ(enumerate_posets(5, parse_filter("lattice")).size(), 5u);
  EXPECT_THROW(parse_filter("shiny"), PosetError);
}

TEST(Enumerate, Bounds) {
  EXPECT_THROW(enumerate_codes(0), PosetError);
  try {
    enumerate_codes(kMaxEnumerationSize + 1);
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCapExceeded);
  }
}

TEST(Enumerate, JobsDoNotChangeResults) {
  const auto one = enumerate_codes(7, {1});
  EXPECT_EQ(enumerate_codes(7, {4}), one);
  EXPECT_EQ(enumerate_codes(7, {0}), one);
  const auto a = enumerate_posets(6, parse_filter("connected"), {1});
  const auto b = enumerate_posets(6, parse_filter("connected"), {3});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].code, b[i].code);
    EXPECT_EQ(a[i].report, b[i].report);
  }
}

TEST(Parallel, CoversEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw PosetError(ErrorCode::InvalidParameter, "boom");
               }),
               PosetError);
}
