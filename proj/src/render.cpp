#include "posetdist/render.hpp"

#include <algorithm>

#include "json.hpp"
#include "posetdist/poset_file.hpp"

namespace posetdist::render {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string flag(bool b) { return b ? "true" : "false"; }

Json cover_edges(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.upper_covers(x)) covers.emplace_back(p.name(x), p.name(y));
  std::sort(covers.begin(), covers.end());
  Json out = Json::array();
  for (const auto& [a, b] : covers) out.push_back(Json::array({a, b}));
  return out;
}

Json chain_names(const Poset& p, const Chain& c) {
  Json out = Json::array();
  for (Element e : c) out.push_back(p.name(e));
  return out;
}

std::string chain_line(const Poset& p, const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " < " : "") + p.name(c[i]);
  return out;
}

Json report_object(const StructuralReport& r) {
  return Json{{"connected", r.connected},
              {"upper_filtering", r.upper_filtering},
              {"lower_filtering", r.lower_filtering},
              {"join_semilattice", r.join_semilattice},
              {"lattice", r.lattice},
              {"tree_order", r.tree_order},
              {"semimodular", r.semimodular},
              {"jordan_dedekind", r.jordan_dedekind},
              {"element_count", r.element_count},
              {"cover_edge_count", r.cover_edge_count}};
}

Json witness_object(const Witness& w) {
  Json detail{{"check", witness_check_name(w.check)}};
  if (w.check == WitnessCheck::TriangleInequality) detail["kind"] = distance_kind_name(w.kind);
  detail["elements"] = w.elements;
  Json values = Json::object();
  for (const auto& [k, v] : w.values) values[k] = v;
  detail["values"] = values;
  detail["chains"] = w.chains;
  return Json{{"poset", cover_edges(w.poset)}, {"detail", detail}};
}

}  // namespace

std::string poset_json(const Poset& p) {
  return dump(Json{{"elements", p.names()}, {"covers", cover_edges(p)}});
}

std::string report_text(const StructuralReport& r) {
  const Json obj = report_object(r);
  std::string out;
  for (const auto& [key, value] : obj.items()) out += key + "=" + value.dump() + "\n";
  return out;
}

std::string report_json(const StructuralReport& r) { return dump(report_object(r)); }

std::string distance_json(const Poset& p, DistanceKind kind, Element x, Element y, std::uint32_t d) {
  return dump(Json{{"kind", distance_kind_name(kind)}, {"x", p.name(x)}, {"y", p.name(y)}, {"distance", d}});
}

std::string violations_text(const Poset& p, DistanceKind kind, const std::vector<TriangleViolation>& v) {
  std::string out = "kind=" + std::string(distance_kind_name(kind)) + "\n";
  out += "metric=" + flag(v.empty()) + "\n";
  out += "violations=" + std::to_string(v.size()) + "\n";
  for (const auto& t : v) {
    const auto &x = p.name(t.x), &y = p.name(t.y), &z = p.name(t.z);
    out += "d(" + x + "," + z + ")=" + std::to_string(t.lhs) + " > d(" + x + "," + y + ")+d(" + y + "," + z +
           ")=" + std::to_string(t.rhs) + "\n";
  }
  return out;
}

std::string violations_json(const Poset& p, DistanceKind kind, const std::vector<TriangleViolation>& v) {
  Json list = Json::array();
  for (const auto& t : v)
    list.push_back(Json{{"x", p.name(t.x)}, {"y", p.name(t.y)}, {"z", p.name(t.z)}, {"lhs", t.lhs}, {"rhs", t.rhs}});
  return dump(Json{{"kind", distance_kind_name(kind)}, {"metric", v.empty()}, {"violations", list}});
}

std::string chains_text(const Poset& p, const std::vector<Chain>& chains) {
  std::string out;
  for (const auto& c : chains) out += chain_line(p, c) + "\n";
  return out;
}

std::string chains_json(const Poset& p, const std::vector<Chain>& chains) {
  Json list = Json::array();
  for (const auto& c : chains) list.push_back(chain_names(p, c));
  return dump(Json{{"chains", list}});
}

std::string compatibility_text(const Poset& p, DistanceKind kind, const ChainCompatibility& c) {
  std::string out = "kind=" + std::string(distance_kind_name(kind)) + "\n";
  out += "chain_compatible=" + flag(c.compatible) + "\n";
  if (c.violation) {
    const auto& v = *c.violation;
    out += "chain: " + chain_line(p, v.chain) + "\n";
    out += "d(" + p.name(v.chain[v.i]) + "," + p.name(v.chain[v.j]) + ")=" + std::to_string(v.distance) +
           " != " + std::to_string(v.j - v.i) + "\n";
  }
  return out;
}

std::string compatibility_json(const Poset& p, DistanceKind kind, const ChainCompatibility& c) {
  Json j{{"kind", distance_kind_name(kind)}, {"chain_compatible", c.compatible}};
  if (c.violation) {
    const auto& v = *c.violation;
    j["violation"] = Json{{"chain", chain_names(p, v.chain)},
                          {"x", p.name(v.chain[v.i])},
                          {"y", p.name(v.chain[v.j])},
                          {"chain_distance", v.j - v.i},
                          {"distance", v.distance}};
  } else {
    j["violation"] = nullptr;
  }
  return dump(j);
}

std::string comparison_text(const Poset& p, const DistanceComparison& c) {
  std::string out = "x y zigzag updown chebyshev\n";
  for (const auto& r : c.rows) {
    out += p.name(r.x) + " " + p.name(r.y) + " " + std::to_string(r.zigzag) + " " + std::to_string(r.up_down) + " " +
           (r.chebyshev ? std::to_string(*r.chebyshev) : "undefined") + "\n";
  }
  out += "zigzag_le_updown=" + flag(c.zigzag_le_up_down) + "\n";
  out += "zigzag_eq_updown=" + flag(c.zigzag_eq_up_down) + "\n";
  out += "chebyshev_le_updown=" + flag(c.chebyshev_le_up_down) + "\n";
  out += "chebyshev_le_zigzag=" + flag(c.chebyshev_le_zigzag) + "\n";
  out += "chebyshev_undefined=" + std::to_string(c.chebyshev_undefined) + "\n";
  return out;
}

std::string comparison_json(const Poset& p, const DistanceComparison& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row{{"x", p.name(r.x)}, {"y", p.name(r.y)}, {"zigzag", r.zigzag}, {"updown", r.up_down}};
    row["chebyshev"] = r.chebyshev ? Json(*r.chebyshev) : Json("undefined");
    rows.push_back(row);
  }
  return dump(Json{{"pairs", rows},
                   {"summary",
                    {{"zigzag_le_updown", c.zigzag_le_up_down},
                     {"zigzag_eq_updown", c.zigzag_eq_up_down},
                     {"chebyshev_le_updown", c.chebyshev_le_up_down},
                     {"chebyshev_le_zigzag", c.chebyshev_le_zigzag},
                     {"chebyshev_undefined", c.chebyshev_undefined}}}});
}

std::string kinship_json(const Poset& p, Element ego, Element alter, const KinshipResult& k) {
  return dump(Json{{"ego", p.name(ego)},
                   {"alter", p.name(alter)},
                   {"ancestor", p.name(k.ancestor)},
                   {"h_ego", k.h_ego},
                   {"h_alter", k.h_alter},
                   {"civil", k.civil},
                   {"canon", k.canon}});
}

std::string enumerated_text(const std::vector<EnumeratedPoset>& posets) {
  std::string out;
  for (std::size_t i = 0; i < posets.size(); ++i) {
    out += "# poset " + std::to_string(i + 1) + " code=" + posets[i].code.hex() + "\n";
    out += render_poset_file(posets[i].poset);
    out += "\n";
  }
  return out;
}

std::string enumerated_json(const std::vector<EnumeratedPoset>& posets) {
  Json list = Json::array();
  for (const auto& ep : posets)
    list.push_back(Json{{"code", ep.code.hex()}, {"elements", ep.poset.names()}, {"covers", cover_edges(ep.poset)}});
  return dump(Json{{"count", posets.size()}, {"posets", list}});
}

std::string verify_text(const VerifyReport& r) {
  std::string out;
  out += "proposition: " + std::string(proposition_name(r.proposition)) + "\n";
  out += "method: " + r.method + "\n";
  out += "n_max: " + std::to_string(r.n_max) + "\n";
  out += "scanned: " + std::to_string(r.scanned) + "\n";
  out += "relevant: " + std::to_string(r.relevant) + "\n";
  out += "relevant_by_size:";
  for (auto c : r.relevant_by_size) out += " " + std::to_string(c);
  out += "\n";
  for (const auto& [k, v] : r.observations) out += "observed " + k + ": " + std::to_string(v) + "\n";
  out += "violations: " + std::to_string(r.violations) + "\n";
  out += "holds: " + flag(r.holds) + "\n";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const Witness& w = r.witnesses[i];
    out += "witness " + std::to_string(i + 1) + ": " + std::string(witness_check_name(w.check));
    if (w.check == WitnessCheck::TriangleInequality) out += " kind=" + std::string(distance_kind_name(w.kind));
    out += "\n";
    if (!w.elements.empty()) {
      out += "  elements:";
      for (const auto& e : w.elements) out += " " + e;
      out += "\n";
    }
    for (const auto& [k, v] : w.values) out += "  " + k + "=" + std::to_string(v) + "\n";
    for (const auto& c : w.chains) {
      out += "  chain:";
      for (std::size_t j = 0; j < c.size(); ++j) out += (j ? " < " : " ") + c[j];
      out += "\n";
    }
    out += "  poset:\n";
    std::string body = render_poset_file(w.poset);
    std::size_t start = 0;
    while (start < body.size()) {
      const std::size_t end = body.find('\n', start);
      out += "    " + body.substr(start, end - start) + "\n";
      start = end + 1;
    }
  }
  return out;
}

std::string verify_json(const VerifyReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_object(w));
  Json observations = Json::object();
  for (const auto& [k, v] : r.observations) observations[k] = v;
  return dump(Json{{"proposition", proposition_name(r.proposition)},
                   {"n_max", r.n_max},
                   {"scanned", r.scanned},
                   {"relevant", r.relevant},
                   {"holds", r.holds},
                   {"witnesses", witnesses},
                   {"violations", r.violations},
                   {"relevant_by_size", r.relevant_by_size},
                   {"observations", observations},
                   {"method", r.method}});
}

}  // namespace posetdist::render
