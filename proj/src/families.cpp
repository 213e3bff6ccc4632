#include "posetdist/families.hpp"

#include <charconv>
#include <cmath>
#include <random>

namespace posetdist {

namespace {

constexpr std::size_t kMaxBooleanRank = 10;
constexpr std::size_t kMaxGeneratedElements = 1024;

[[noreturn]] void invalid(const std::string& message) { throw PosetError(ErrorCode::InvalidParameter, message); }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    invalid("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

double parse_probability(std::string_view text) {
  const double p = parse_number<double>(text, "probability");
  if (!(p >= 0.0 && p <= 1.0)) invalid("probability must lie in [0, 1]");
  return p;
}

void require_count(std::size_t n, std::string_view family) {
  if (n < 1) invalid(std::string(family) + " needs at least one element");
  if (n > kMaxGeneratedElements) invalid(std::string(family) + " size exceeds " + std::to_string(kMaxGeneratedElements));
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed) {
  const auto parts = split(text, ':');
  const std::string_view head = parts.front();
  FamilySpec spec;
  auto expect_args = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi)
      invalid("family '" + std::string(head) + "' takes " + std::to_string(lo) +
              (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s): '" + std::string(text) + "'");
  };
  if (head == "chain" || head == "antichain" || head == "boolean") {
    expect_args(1, 1);
    spec.family = head == "chain" ? Family::Chain : head == "antichain" ? Family::Antichain : Family::Boolean;
    spec.dims = {parse_number<std::size_t>(parts[1], "size")};
  } else if (head == "grid") {
    expect_args(1, 1);
    spec.family = Family::Grid;
    for (auto d : split(parts[1], 'x')) spec.dims.push_back(parse_number<std::size_t>(d, "grid extent"));
  } else if (head == "pentagon") {
    expect_args(0, 0);
    spec.family = Family::Pentagon;
  } else if (head == "prop4-witness" || head == "prop4_witness") {
    expect_args(0, 0);
    spec.family = Family::Prop4Witness;
  } else if (head == "chebyshev-witness" || head == "chebyshev_witness") {
    expect_args(0, 0);
    spec.family = Family::ChebyshevWitness;
  } else if (head == "random") {
    expect_args(2, 3);
    spec.family = Family::Random;
    spec.dims = {parse_number<std::size_t>(parts[1], "size")};
    spec.probability = parse_probability(parts[2]);
    spec.seed = parts.size() == 4 ? parse_number<std::uint64_t>(parts[3], "seed") : default_seed;
  } else {
    invalid("unknown family '" + std::string(head) + "'");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  auto dim = [&](std::size_t i) { return std::to_string(spec.dims.at(i)); };
  switch (spec.family) {
    case Family::Chain: return "chain:" + dim(0);
    case Family::Antichain: return "antichain:" + dim(0);
    case Family::Boolean: return "boolean:" + dim(0);
    case Family::Grid: {
      std::string out = "grid:";
      for (std::size_t i = 0; i < spec.dims.size(); ++i) out += (i ? "x" : "") + dim(i);
      return out;
    }
    case Family::Pentagon: return "pentagon";
    case Family::Prop4Witness: return "prop4-witness";
    case Family::ChebyshevWitness: return "chebyshev-witness";
    case Family::Random: {
      char buf[64];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, spec.probability);
      return "random:" + dim(0) + ":" + std::string(buf, ptr) + ":" + std::to_string(spec.seed);
    }
  }
  return "";
}

Poset generate(const FamilySpec& spec) {
  auto single = [&]() {
    if (spec.dims.size() != 1) invalid("family takes exactly one size parameter");
    return spec.dims.front();
  };
  switch (spec.family) {
    case Family::Chain: return chain(single());
    case Family::Antichain: return antichain(single());
    case Family::Boolean: return boolean_lattice(single());
    case Family::Grid: return grid(spec.dims);
    case Family::Pentagon: return pentagon();
    case Family::Prop4Witness: return prop4_witness();
    case Family::ChebyshevWitness: return chebyshev_witness();
    case Family::Random: return random_poset(single(), spec.probability, spec.seed);
  }
  invalid("unknown family");
}

Poset chain(std::size_t n) {
  require_count(n, "chain");
  std::vector<std::string> names;
  BoolMatrix closure(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) closure.set(i, j);
  }
  return Poset(std::move(names), std::move(closure));
}

Poset antichain(std::size_t n) {
  require_count(n, "antichain");
  std::vector<std::string> names;
  BoolMatrix closure(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i));
    closure.set(i, i);
  }
  return Poset(std::move(names), std::move(closure));
}

Poset boolean_lattice(std::size_t k) {
  if (k > kMaxBooleanRank) invalid("boolean rank must be at most " + std::to_string(kMaxBooleanRank));
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string name = "{";
    bool first = true;
    for (std::size_t bit = 0; bit < k; ++bit) {
      if (mask & (std::size_t{1} << bit)) {
        name += (first ? "" : ",") + std::to_string(bit + 1);
        first = false;
      }
    }
    names.push_back(name + "}");
  }
  BoolMatrix closure(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((a & b) == a) closure.set(a, b);
  return Poset(std::move(names), std::move(closure));
}

Poset grid(const std::vector<std::size_t>& dims) {
  if (dims.empty()) invalid("grid needs at least one extent");
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d < 2) invalid("grid extents must be at least 2");
    if (n > kMaxGeneratedElements / d) invalid("grid size exceeds " + std::to_string(kMaxGeneratedElements));
    n *= d;
  }
  // Mixed-radix coordinates, first coordinate most significant.
  std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(dims.size()));
  std::vector<std::string> names;
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t c = dims.size(); c-- > 0;) {
      coords[idx][c] = rest % dims[c];
      rest /= dims[c];
    }
    std::string name = "(";
    for (std::size_t c = 0; c < dims.size(); ++c) name += (c ? "," : "") + std::to_string(coords[idx][c]);
    names.push_back(name + ")");
  }
  BoolMatrix closure(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t c = 0; c < dims.size() && le; ++c) le = coords[a][c] <= coords[b][c];
      if (le) closure.set(a, b);
    }
  }
  return Poset(std::move(names), std::move(closure));
}

Poset pentagon() { return build_poset({{"0", "a"}, {"a", "1"}, {"0", "b"}, {"b", "c"}, {"c", "1"}}); }

Poset prop4_witness() { return build_poset({{"y", "x"}, {"y", "z"}, {"x", "t"}, {"t", "w"}, {"z", "w"}}); }

Poset chebyshev_witness() {
  return build_poset({{"y", "x"}, {"y", "z"}, {"x", "t1"}, {"t1", "t2"}, {"t2", "w"}, {"z", "w"}});
}

Poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  require_count(n, "random");
  if (!(p >= 0.0 && p <= 1.0)) invalid("probability must lie in [0, 1]");
  // Uniform doubles from the top 53 bits keep the stream identical across
  // standard libraries, unlike std::bernoulli_distribution.
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  BoolMatrix closure(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("r" + std::to_string(i));
    closure.set(i, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) closure.set(i, j);
    }
  }
  // Edges only go from lower to higher index, so one pass in decreasing i
  // closes transitively.
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (closure(i, j)) closure.or_row(i, j);
  return Poset(std::move(names), std::move(closure));
}

}  // namespace posetdist
