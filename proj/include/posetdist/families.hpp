#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "posetdist/poset.hpp"

namespace posetdist {

enum class Family { Chain, Antichain, Boolean, Grid, Pentagon, Prop4Witness, ChebyshevWitness, Random };

struct FamilySpec {
  Family family = Family::Chain;
  std::vector<std::size_t> dims;  // chain/antichain: {n}; boolean: {k}; grid: extents; random: {n}
  double probability = 0.0;       // random only
  std::uint64_t seed = 0;         // random only

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Parses "chain:5", "antichain:3", "boolean:3", "grid:3x4", "pentagon",
// "prop4-witness", "chebyshev-witness", "random:8:0.3:42". The random seed may
// be omitted, in which case `default_seed` is used. Throws InvalidParameter.
FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed = 0);
std::string to_string(const FamilySpec& spec);

// Throws InvalidParameter for out-of-range parameters.
Poset generate(const FamilySpec& spec);

Poset chain(std::size_t n);                      // c0 < c1 < ... ; n >= 1
Poset antichain(std::size_t n);                  // a0, a1, ... ; n >= 1
Poset boolean_lattice(std::size_t k);            // subsets named {}, {1}, {1,2}, ...; k <= 10
Poset grid(const std::vector<std::size_t>& dims);  // tuples named (i,j,...); each extent >= 2
Poset pentagon();                                // 0<a<1, 0<b<c<1
Poset prop4_witness();                           // y<x, y<z, x<t<w, z<w
Poset chebyshev_witness();                       // y<x, y<z, x<t1<t2<w, z<w
// Independent edge probability over a strict upper-triangular matrix on
// r0..r{n-1}, then transitively closed. Reproducible for a given seed.
Poset random_poset(std::size_t n, double p, std::uint64_t seed);

}  // namespace posetdist
