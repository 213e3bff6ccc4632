#include "posetdist/verify.hpp"

#include <algorithm>
#include <cctype>

namespace posetdist {

namespace {

std::vector<std::string> names_of(const Poset& p, const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (Element e : elems) out.push_back(p.name(e));
  return out;
}

Witness triangle_witness(const Poset& p, DistanceKind kind, const TriangleViolation& v) {
  Witness w{p, WitnessCheck::TriangleInequality, kind};
  w.elements = names_of(p, {v.x, v.y, v.z});
  w.values = {{"lhs", v.lhs}, {"rhs", v.rhs}};
  return w;
}

std::optional<Witness> first_triangle_witness(const Poset& p, DistanceKind kind) {
  const auto violations = triangle_violations(p, kind);
  if (violations.empty()) return std::nullopt;
  return triangle_witness(p, kind, violations.front());
}

bool updown_equals_zigzag(const Poset& p) {
  const DistanceTable zz(p, DistanceKind::Zigzag);
  const DistanceTable ud(p, DistanceKind::UpDown);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (zz.at(x, y) != ud.at(x, y)) return false;
  return true;
}

// Cover paths from bottom to top, i.e. the maximal chains of [bottom, top].
std::vector<Chain> interval_chains(const Poset& p, Element bottom, Element top) {
  std::vector<Chain> out;
  Chain path;
  auto walk = [&](auto&& self, Element v) -> void {
    path.push_back(v);
    if (v == top) {
      out.push_back(path);
    } else {
      for (Element w : p.upper_covers(v))
        if (p.leq(w, top)) self(self, w);
    }
    path.pop_back();
  };
  walk(walk, bottom);
  return out;
}

bool is_cover_path(const Poset& p, const std::vector<std::string>& names, Element bottom, Element top) {
  if (names.empty()) return false;
  std::vector<Element> elems;
  for (const auto& n : names) {
    const auto e = p.find(n);
    if (!e) return false;
    elems.push_back(*e);
  }
  if (elems.front() != bottom || elems.back() != top) return false;
  for (std::size_t i = 0; i + 1 < elems.size(); ++i)
    if (!p.covered_by(elems[i], elems[i + 1])) return false;
  return true;
}

struct PosetOutcome {
  bool relevant = false;
  std::optional<Witness> witness;
  std::vector<std::size_t> counters;  // parallel to the proposition's observation names
};

std::vector<std::string> observation_names(Proposition prop) {
  switch (prop) {
    case Proposition::P1: return {"tree_orders", "flagged_semimodular", "chebyshev_metric"};
    case Proposition::P2: return {"jordan_dedekind", "not_jordan_dedekind", "zigzag_chain_compatible", "falsifiers"};
    case Proposition::P3: return {"join_semilattices", "semimodular", "jordan_dedekind"};
    case Proposition::P4: return {"semimodular", "not_semimodular", "updown_metric", "updown_equals_zigzag"};
    case Proposition::P5: return {"semimodular", "chebyshev_metric"};
    case Proposition::ChebSearch:
      return {"join_semilattices", "chebyshev_violating", "not_semimodular", "not_semimodular_chebyshev_metric"};
  }
  return {};
}

std::string method_text(Proposition prop) {
  switch (prop) {
    case Proposition::P1:
      return "every tree order: Chebyshev distance has no triangle violation, and the tree order is flagged "
             "semimodular (so the semimodular Chebyshev check covers it as well)";
    case Proposition::P2:
      return "every poset with upper or lower filtering: Jordan-Dedekind <=> zigzag distance is chain-compatible; "
             "existence of some chain-compatible distance is decided by that equivalence plus, whenever "
             "Jordan-Dedekind fails, two maximal chains of one interval with different cardinalities, which no "
             "chain-compatible distance can satisfy";
    case Proposition::P3: return "every semimodular join semilattice satisfies Jordan-Dedekind";
    case Proposition::P4:
      return "every join semilattice: semimodular <=> up-down distance is a metric <=> up-down equals zigzag "
             "for all pairs";
    case Proposition::P5: return "every semimodular join semilattice: Chebyshev distance has no triangle violation";
    case Proposition::ChebSearch:
      return "search for a join semilattice whose Chebyshev distance violates the triangle inequality; holds means "
             "a witness was found";
  }
  return "";
}

PosetOutcome evaluate(Proposition prop, const EnumeratedPoset& ep) {
  const Poset& p = ep.poset;
  const StructuralReport& r = ep.report;
  PosetOutcome out;
  out.counters.assign(observation_names(prop).size(), 0);
  auto& c = out.counters;
  switch (prop) {
    case Proposition::P1: {
      if (!r.tree_order) break;
      out.relevant = true;
      c[0] = 1;
      c[1] = r.semimodular;
      auto triangle = first_triangle_witness(p, DistanceKind::Chebyshev);
      c[2] = !triangle;
      if (!r.semimodular) {
        out.witness = Witness{p, WitnessCheck::TreeNotSemimodular};
      } else {
        out.witness = std::move(triangle);
      }
      break;
    }
    case Proposition::P2: {
      if (!r.upper_filtering && !r.lower_filtering) break;
      out.relevant = true;
      const bool jd = r.jordan_dedekind;
      const bool compatible = is_chain_compatible(p, DistanceKind::Zigzag);
      c[0] = jd;
      c[1] = !jd;
      c[2] = compatible;
      if (jd != compatible) {
        Witness w{p, WitnessCheck::JordanDedekindVsCompatibility};
        w.values = {{"jordan_dedekind", jd}, {"compatible", compatible}};
        out.witness = std::move(w);
      } else if (!jd) {
        auto falsifier = falsify_chain_compatibility(p);
        if (falsifier && replay(*falsifier)) {
          c[3] = 1;
        } else {
          out.witness = Witness{p, WitnessCheck::MissingFalsifier};
        }
      }
      break;
    }
    case Proposition::P3: {
      if (!r.join_semilattice) break;
      c[0] = 1;
      if (!r.semimodular) break;
      out.relevant = true;
      c[1] = 1;
      c[2] = r.jordan_dedekind;
      if (!r.jordan_dedekind) {
        Witness w{p, WitnessCheck::SemimodularNotJordanDedekind};
        if (auto f = falsify_chain_compatibility(p)) {
          w.elements = f->elements;
          w.chains = f->chains;
        }
        out.witness = std::move(w);
      }
      break;
    }
    case Proposition::P4: {
      if (!r.join_semilattice) break;
      out.relevant = true;
      const bool semimodular = r.semimodular;
      const bool metric = triangle_violations(p, DistanceKind::UpDown).empty();
      const bool equal = updown_equals_zigzag(p);
      c[0] = semimodular;
      c[1] = !semimodular;
      c[2] = metric;
      c[3] = equal;
      if (semimodular != metric || metric != equal) {
        Witness w{p, WitnessCheck::Prop4Equivalence};
        w.values = {{"semimodular", semimodular}, {"updown_metric", metric}, {"updown_equals_zigzag", equal}};
        out.witness = std::move(w);
      }
      break;
    }
    case Proposition::P5: {
      if (!r.semimodular) break;
      out.relevant = true;
      c[0] = 1;
      out.witness = first_triangle_witness(p, DistanceKind::Chebyshev);
      c[1] = !out.witness;
      break;
    }
    case Proposition::ChebSearch: {
      if (!r.join_semilattice) break;
      out.relevant = true;
      c[0] = 1;
      out.witness = first_triangle_witness(p, DistanceKind::Chebyshev);
      c[1] = out.witness.has_value();
      c[2] = !r.semimodular;
      c[3] = !r.semimodular && !out.witness;
      break;
    }
  }
  return out;
}

}  // namespace

std::string_view proposition_name(Proposition p) noexcept {
  switch (p) {
    case Proposition::P1: return "P1";
    case Proposition::P2: return "P2";
    case Proposition::P3: return "P3";
    case Proposition::P4: return "P4";
    case Proposition::P5: return "P5";
    case Proposition::ChebSearch: return "cheb-search";
  }
  return "unknown";
}

Proposition parse_proposition(std::string_view text) {
  std::string key;
  for (char ch : text) key.push_back(ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (key == "p1") return Proposition::P1;
  if (key == "p2") return Proposition::P2;
  if (key == "p3") return Proposition::P3;
  if (key == "p4") return Proposition::P4;
  if (key == "p5") return Proposition::P5;
  if (key == "cheb-search") return Proposition::ChebSearch;
  throw PosetError(ErrorCode::InvalidParameter, "unknown proposition '" + std::string(text) + "'");
}

std::string_view witness_check_name(WitnessCheck c) noexcept {
  switch (c) {
    case WitnessCheck::TriangleInequality: return "triangle_inequality";
    case WitnessCheck::UnequalMaximalChains: return "unequal_maximal_chains";
    case WitnessCheck::JordanDedekindVsCompatibility: return "jordan_dedekind_vs_chain_compatibility";
    case WitnessCheck::MissingFalsifier: return "missing_falsifier";
    case WitnessCheck::SemimodularNotJordanDedekind: return "semimodular_not_jordan_dedekind";
    case WitnessCheck::Prop4Equivalence: return "updown_equivalence";
    case WitnessCheck::TreeNotSemimodular: return "tree_not_semimodular";
  }
  return "unknown";
}

std::optional<std::int64_t> Witness::value(std::string_view key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  return std::nullopt;
}

std::optional<Witness> falsify_chain_compatibility(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      const auto chains = interval_chains(p, x, y);
      const auto [shortest, longest] = std::minmax_element(
          chains.begin(), chains.end(), [](const Chain& a, const Chain& b) { return a.size() < b.size(); });
      if (shortest->size() == longest->size()) continue;
      Witness w{p, WitnessCheck::UnequalMaximalChains};
      w.elements = names_of(p, {x, y});
      w.chains = {names_of(p, *shortest), names_of(p, *longest)};
      w.values = {{"shorter", static_cast<std::int64_t>(shortest->size())},
                  {"longer", static_cast<std::int64_t>(longest->size())}};
      return w;
    }
  }
  return std::nullopt;
}

bool replay(const Witness& w) {
  const Poset& p = w.poset;
  try {
    switch (w.check) {
      case WitnessCheck::TriangleInequality: {
        if (w.elements.size() != 3) return false;
        const Element x = p.at(w.elements[0]), y = p.at(w.elements[1]), z = p.at(w.elements[2]);
        const auto lhs = static_cast<std::int64_t>(distance(p, w.kind, x, z));
        const auto rhs = static_cast<std::int64_t>(distance(p, w.kind, x, y) + distance(p, w.kind, y, z));
        return lhs > rhs && w.value("lhs") == lhs && w.value("rhs") == rhs;
      }
      case WitnessCheck::UnequalMaximalChains: {
        if (w.elements.size() != 2 || w.chains.size() != 2) return false;
        const Element bottom = p.at(w.elements[0]), top = p.at(w.elements[1]);
        const auto& a = w.chains[0];
        const auto& b = w.chains[1];
        return is_cover_path(p, a, bottom, top) && is_cover_path(p, b, bottom, top) && a.size() != b.size() &&
               w.value("shorter") == static_cast<std::int64_t>(a.size()) &&
               w.value("longer") == static_cast<std::int64_t>(b.size());
      }
      case WitnessCheck::JordanDedekindVsCompatibility: {
        const bool jd = is_jordan_dedekind(p);
        const bool compatible = is_chain_compatible(p, DistanceKind::Zigzag);
        return jd != compatible && w.value("jordan_dedekind") == jd && w.value("compatible") == compatible;
      }
      case WitnessCheck::MissingFalsifier: {
        const auto f = falsify_chain_compatibility(p);
        return !is_jordan_dedekind(p) && (!f || !replay(*f));
      }
      case WitnessCheck::SemimodularNotJordanDedekind:
        return is_join_semilattice(p) && is_semimodular_cover(p) && !is_jordan_dedekind(p);
      case WitnessCheck::Prop4Equivalence: {
        if (!is_join_semilattice(p)) return false;
        const bool semimodular = is_semimodular_cover(p);
        const bool metric = triangle_violations(p, DistanceKind::UpDown).empty();
        const bool equal = updown_equals_zigzag(p);
        return !(semimodular == metric && metric == equal) && w.value("semimodular") == semimodular &&
               w.value("updown_metric") == metric && w.value("updown_equals_zigzag") == equal;
      }
      case WitnessCheck::TreeNotSemimodular:
        return is_tree_order(p) && !(is_join_semilattice(p) && is_semimodular_cover(p));
    }
  } catch (const PosetError&) {
    return false;
  }
  return false;
}

VerifyReport verify(Proposition prop, std::size_t n_max, const VerifyOptions& options) {
  const EnumerateOptions eopts{options.jobs};
  const auto levels = enumerate_codes_by_size(n_max, eopts);

  VerifyReport report;
  report.proposition = prop;
  report.n_max = n_max;
  report.method = method_text(prop);
  const auto names = observation_names(prop);
  std::vector<std::size_t> totals(names.size(), 0);

  for (const auto& codes : levels) {
    const auto posets = materialize(codes, {}, eopts);
    std::vector<PosetOutcome> outcomes(posets.size());
    parallel_for(posets.size(), options.jobs, [&](std::size_t i) { outcomes[i] = evaluate(prop, posets[i]); });

    std::size_t relevant_here = 0;
    for (auto& o : outcomes) {
      ++report.scanned;
      for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += o.counters[k];
      if (!o.relevant) continue;
      ++relevant_here;
      if (!o.witness) continue;
      ++report.violations;
      if (report.witnesses.size() < options.max_witnesses) report.witnesses.push_back(std::move(*o.witness));
    }
    report.relevant += relevant_here;
    report.relevant_by_size.push_back(relevant_here);
  }

  for (std::size_t k = 0; k < names.size(); ++k) report.observations.emplace_back(names[k], totals[k]);
  report.holds = prop == Proposition::ChebSearch ? !report.witnesses.empty() : report.witnesses.empty();
  return report;
}

}  // namespace posetdist
