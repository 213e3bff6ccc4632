#include "posetdist/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace posetdist {

namespace {

using Colors = std::vector<std::size_t>;

// Replaces each signature by its rank among the distinct signatures.
template <typename Sig>
Colors rank_signatures(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors out(sigs.size());
  for (std::size_t v = 0; v < sigs.size(); ++v)
    out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
  return out;
}

std::size_t count_distinct(const Colors& c) {
  Colors s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Isomorphism-invariant vertex coloring: degree data seeded, then refined by
// the color multisets of down-sets, up-sets and covers until stable.
Colors invariant_colors(const BoolMatrix& le) {
  const std::size_t n = le.size();
  auto less = [&](std::size_t a, std::size_t b) { return a != b && le(a, b); };
  BoolMatrix cover(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t z = 0; z < n && !between; ++z) between = less(a, z) && less(z, b);
      if (!between) cover.set(a, b);
    }

  std::vector<std::vector<std::size_t>> seed(n, std::vector<std::size_t>(4, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      seed[v][0] += less(w, v);
      seed[v][1] += less(v, w);
      seed[v][2] += cover(w, v);
      seed[v][3] += cover(v, w);
    }
  Colors colors = rank_signatures(seed);

  std::size_t classes = count_distinct(colors);
  while (classes < n) {
    std::vector<std::vector<std::size_t>> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> below, above, lc, uc;
      for (std::size_t w = 0; w < n; ++w) {
        if (less(w, v)) below.push_back(colors[w]);
        if (less(v, w)) above.push_back(colors[w]);
        if (cover(w, v)) lc.push_back(colors[w]);
        if (cover(v, w)) uc.push_back(colors[w]);
      }
      auto& s = sigs[v];
      s.push_back(colors[v]);
      for (auto* part : {&below, &above, &lc, &uc}) {
        std::sort(part->begin(), part->end());
        s.push_back(n + part->size());  // separator carrying the length
        s.insert(s.end(), part->begin(), part->end());
      }
    }
    Colors refined = rank_signatures(sigs);
    const std::size_t refined_classes = count_distinct(refined);
    if (refined_classes == classes) break;
    colors = std::move(refined);
    classes = refined_classes;
  }
  return colors;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const BoolMatrix& le, Colors colors)
      : le_(le), n_(le.size()), colors_(std::move(colors)), slots_(colors_), used_(n_, false), perm_(n_),
        current_(n_ * (n_ ? n_ - 1 : 0)) {
    std::sort(slots_.begin(), slots_.end());
  }

  std::vector<std::uint8_t> run() {
    descend(0);
    return best_;
  }

 private:
  static std::size_t offset(std::size_t i) { return i * (i - 1); }

  // Swapping two incomparable vertices with identical relations to every
  // other vertex is an automorphism, so only one of them needs trying.
  bool twins(std::size_t u, std::size_t w) const {
    if (le_(u, w) || le_(w, u)) return false;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == u || x == w) continue;
      if (le_(u, x) != le_(w, x) || le_(x, u) != le_(x, w)) return false;
    }
    return true;
  }

  // best_ can change anywhere below a node, so each candidate prefix is
  // compared afresh rather than carrying a "strictly less" flag down.
  void descend(std::size_t depth) {
    if (depth == n_) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || colors_[v] != slots_[depth]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); })) continue;
      tried.push_back(v);

      const std::size_t base = offset(depth);
      for (std::size_t j = 0; j < depth; ++j) {
        current_[base + 2 * j] = le_(perm_[j], v);
        current_[base + 2 * j + 1] = le_(v, perm_[j]);
      }
      const std::size_t end = base + 2 * depth;
      if (!best_.empty() &&
          std::lexicographical_compare(best_.begin(), best_.begin() + end, current_.begin(), current_.begin() + end))
        continue;
      used_[v] = true;
      perm_[depth] = v;
      descend(depth + 1);
      used_[v] = false;
    }
  }

  const BoolMatrix& le_;
  std::size_t n_;
  Colors colors_;
  Colors slots_;
  std::vector<bool> used_;
  std::vector<std::size_t> perm_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
};

void check_size(std::size_t n) {
  if (n == 0) throw PosetError(ErrorCode::InvalidParameter, "enumeration size must be at least 1");
  if (n > kMaxEnumerationSize)
    throw PosetError(ErrorCode::SizeCapExceeded,
                     "enumeration is capped at " + std::to_string(kMaxEnumerationSize) + " elements");
}

}  // namespace

std::size_t CanonicalCode::element_count() const {
  if (bytes_.size() < 2) return 0;
  return (std::size_t{bytes_[0]} << 8) | bytes_[1];
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

CanonicalCode canonical_code(const BoolMatrix& closure) {
  const std::size_t n = closure.size();
  if (n > 0xffff) throw PosetError(ErrorCode::SizeCapExceeded, "canonical codes support at most 65535 elements");
  std::vector<std::uint8_t> bits = n ? CanonicalSearch(closure, invariant_colors(closure)).run()
                                     : std::vector<std::uint8_t>{};
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n & 0xff)};
  bytes.resize(2 + (bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[2 + i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return CanonicalCode(std::move(bytes));
}

CanonicalCode canonical_code(const Poset& p) { return canonical_code(p.closure()); }

BoolMatrix decode_closure(const CanonicalCode& code) {
  const std::size_t n = code.element_count();
  const auto& bytes = code.bytes();
  if (bytes.size() != 2 + (n * (n ? n - 1 : 0) + 7) / 8)
    throw PosetError(ErrorCode::InvalidParameter, "malformed canonical code");
  auto bit = [&](std::size_t i) { return (bytes[2 + i / 8] >> (7 - i % 8)) & 1u; };
  BoolMatrix le(n);
  for (std::size_t i = 0; i < n; ++i) {
    le.set(i, i);
    const std::size_t base = i * (i ? i - 1 : 0);
    for (std::size_t j = 0; j < i; ++j) {
      if (bit(base + 2 * j)) le.set(j, i);
      if (bit(base + 2 * j + 1)) le.set(i, j);
    }
  }
  return le;
}

Poset poset_from_code(const CanonicalCode& code) {
  BoolMatrix le = decode_closure(code);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < le.size(); ++i) names.push_back("e" + std::to_string(i));
  return Poset(std::move(names), std::move(le));
}

std::string_view predicate_name(Predicate p) noexcept {
  switch (p) {
    case Predicate::Connected: return "connected";
    case Predicate::UpperFiltering: return "upper_filtering";
    case Predicate::LowerFiltering: return "lower_filtering";
    case Predicate::JoinSemilattice: return "join_semilattice";
    case Predicate::Lattice: return "lattice";
    case Predicate::TreeOrder: return "tree_order";
    case Predicate::Semimodular: return "semimodular";
    case Predicate::JordanDedekind: return "jordan_dedekind";
  }
  return "unknown";
}

Predicate parse_predicate(std::string_view text) {
  std::string key(text);
  std::replace(key.begin(), key.end(), '-', '_');
  for (Predicate p : {Predicate::Connected, Predicate::UpperFiltering, Predicate::LowerFiltering,
                      Predicate::JoinSemilattice, Predicate::Lattice, Predicate::TreeOrder, Predicate::Semimodular,
                      Predicate::JordanDedekind}) {
    if (key == predicate_name(p)) return p;
  }
  throw PosetError(ErrorCode::InvalidParameter, "unknown predicate '" + std::string(text) + "'");
}

bool predicate_value(const StructuralReport& r, Predicate p) {
  switch (p) {
    case Predicate::Connected: return r.connected;
    case Predicate::UpperFiltering: return r.upper_filtering;
    case Predicate::LowerFiltering: return r.lower_filtering;
    case Predicate::JoinSemilattice: return r.join_semilattice;
    case Predicate::Lattice: return r.lattice;
    case Predicate::TreeOrder: return r.tree_order;
    case Predicate::Semimodular: return r.semimodular;
    case Predicate::JordanDedekind: return r.jordan_dedekind;
  }
  return false;
}

bool PosetFilter::accepts(const StructuralReport& report) const {
  return std::all_of(terms.begin(), terms.end(),
                     [&](const auto& t) { return predicate_value(report, t.first) == t.second; });
}

bool PosetFilter::accepts(const Poset& p) const { return empty() || accepts(structural_report(p)); }

PosetFilter parse_filter(std::string_view text) {
  PosetFilter filter;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(start, end - start);
    while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (!term.empty()) {
      bool value = true;
      if (term.front() == '!') {
        value = false;
        term.remove_prefix(1);
      }
      filter.terms.emplace_back(parse_predicate(term), value);
    } else if (!text.empty()) {
      throw PosetError(ErrorCode::InvalidParameter, "empty predicate in filter '" + std::string(text) + "'");
    }
    start = end + 1;
  }
  return filter;
}

unsigned resolve_jobs(unsigned jobs) noexcept {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::vector<CanonicalCode>> enumerate_codes_by_size(std::size_t n_max, const EnumerateOptions& options) {
  check_size(n_max);
  BoolMatrix single(1);
  single.set(0, 0);
  std::vector<std::vector<CanonicalCode>> levels{{canonical_code(single)}};

  for (std::size_t k = 1; k < n_max; ++k) {
    const std::vector<CanonicalCode>& level = levels.back();
    // Every (k+1)-poset is a k-poset plus a new maximal element placed on top
    // of some down-closed subset.
    std::vector<std::vector<CanonicalCode>> found(level.size());
    parallel_for(level.size(), options.jobs, [&](std::size_t idx) {
      const BoolMatrix base = decode_closure(level[idx]);
      std::vector<CanonicalCode>& out = found[idx];
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool down_closed = true;
        for (std::size_t d = 0; d < k && down_closed; ++d) {
          if (!(mask >> d & 1u)) continue;
          for (std::size_t e = 0; e < k && down_closed; ++e)
            if (base(e, d) && !(mask >> e & 1u)) down_closed = false;
        }
        if (!down_closed) continue;
        BoolMatrix grown(k + 1);
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b)
            if (base(a, b)) grown.set(a, b);
          if (mask >> a & 1u) grown.set(a, k);
        }
        grown.set(k, k);
        out.push_back(canonical_code(grown));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<CanonicalCode> next;
    for (auto& part : found) next.insert(next.end(), part.begin(), part.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<CanonicalCode> enumerate_codes(std::size_t n, const EnumerateOptions& options) {
  return std::move(enumerate_codes_by_size(n, options).back());
}

std::vector<EnumeratedPoset> materialize(const std::vector<CanonicalCode>& codes, const PosetFilter& filter,
                                         const EnumerateOptions& options) {
  std::vector<std::optional<EnumeratedPoset>> slots(codes.size());
  parallel_for(codes.size(), options.jobs, [&](std::size_t i) {
    Poset p = poset_from_code(codes[i]);
    StructuralReport report = structural_report(p);
    if (filter.accepts(report)) slots[i] = EnumeratedPoset{codes[i], std::move(p), report};
  });
  std::vector<EnumeratedPoset> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::vector<EnumeratedPoset> enumerate_posets(std::size_t n, const PosetFilter& filter,
                                              const EnumerateOptions& options) {
  return materialize(enumerate_codes(n, options), filter, options);
}

}  // namespace posetdist
