#include "posetdist/posetdist.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "posetdist/enumerate.hpp"
#include "posetdist/families.hpp"
#include "posetdist/metrics.hpp"
#include "posetdist/poset_file.hpp"
#include "posetdist/render.hpp"
#include "posetdist/verify.hpp"

struct pd_poset {
  posetdist::Poset poset;
};

namespace {

using namespace posetdist;

thread_local std::string g_last_error;

pd_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return PD_ERR_PARSE;
    case ErrorCode::CycleDetected: return PD_ERR_CYCLE_DETECTED;
    case ErrorCode::DuplicateElement: return PD_ERR_DUPLICATE_ELEMENT;
    case ErrorCode::EmptyName: return PD_ERR_EMPTY_NAME;
    case ErrorCode::InvalidName: return PD_ERR_INVALID_NAME;
    case ErrorCode::EmptyPoset: return PD_ERR_EMPTY_POSET;
    case ErrorCode::UnknownElement: return PD_ERR_UNKNOWN_ELEMENT;
    case ErrorCode::NotComparable: return PD_ERR_NOT_COMPARABLE;
    case ErrorCode::NoUpperBound: return PD_ERR_NO_UPPER_BOUND;
    case ErrorCode::NoLeastUpperBound: return PD_ERR_NO_LEAST_UPPER_BOUND;
    case ErrorCode::NoLowerBound: return PD_ERR_NO_LOWER_BOUND;
    case ErrorCode::NotAJoinSemilattice: return PD_ERR_NOT_A_JOIN_SEMILATTICE;
    case ErrorCode::Disconnected: return PD_ERR_DISCONNECTED;
    case ErrorCode::DistanceUndefined: return PD_ERR_DISTANCE_UNDEFINED;
    case ErrorCode::NotATreeOrder: return PD_ERR_NOT_A_TREE_ORDER;
    case ErrorCode::InvalidParameter: return PD_ERR_INVALID_PARAMETER;
    case ErrorCode::SizeCapExceeded: return PD_ERR_SIZE_CAP_EXCEEDED;
    case ErrorCode::IoError: return PD_ERR_IO;
  }
  return PD_ERR_INTERNAL;
}

template <typename F>
pd_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return PD_OK;
  } catch (const PosetError& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PD_ERR_INTERNAL;
  }
}

pd_status null_argument() {
  g_last_error = "required argument is null";
  return PD_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

DistanceKind to_kind(pd_distance_kind kind) {
  switch (kind) {
    case PD_ZIGZAG: return DistanceKind::Zigzag;
    case PD_UP_DOWN: return DistanceKind::UpDown;
    case PD_DOWN_UP: return DistanceKind::DownUp;
    case PD_CHEBYSHEV: return DistanceKind::Chebyshev;
  }
  throw PosetError(ErrorCode::InvalidParameter, "unknown distance kind " + std::to_string(static_cast<int>(kind)));
}

pd_distance_kind from_kind(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::Zigzag: return PD_ZIGZAG;
    case DistanceKind::UpDown: return PD_UP_DOWN;
    case DistanceKind::DownUp: return PD_DOWN_UP;
    case DistanceKind::Chebyshev: return PD_CHEBYSHEV;
  }
  return PD_ZIGZAG;
}

bool json(pd_format f) { return f == PD_FORMAT_JSON; }

PosetFilter filter_from(const char* text) { return text ? parse_filter(text) : PosetFilter{}; }

}  // namespace

extern "C" {

const char* pd_status_name(pd_status status) {
  switch (status) {
    case PD_OK: return "Ok";
    case PD_ERR_PARSE: return "ParseError";
    case PD_ERR_CYCLE_DETECTED: return "CycleDetected";
    case PD_ERR_DUPLICATE_ELEMENT: return "DuplicateElement";
    case PD_ERR_EMPTY_NAME: return "EmptyName";
    case PD_ERR_INVALID_NAME: return "InvalidName";
    case PD_ERR_EMPTY_POSET: return "EmptyPoset";
    case PD_ERR_UNKNOWN_ELEMENT: return "UnknownElement";
    case PD_ERR_NOT_COMPARABLE: return "NotComparable";
    case PD_ERR_NO_UPPER_BOUND: return "NoUpperBound";
    case PD_ERR_NO_LEAST_UPPER_BOUND: return "NoLeastUpperBound";
    case PD_ERR_NO_LOWER_BOUND: return "NoLowerBound";
    case PD_ERR_NOT_A_JOIN_SEMILATTICE: return "NotAJoinSemilattice";
    case PD_ERR_DISCONNECTED: return "Disconnected";
    case PD_ERR_DISTANCE_UNDEFINED: return "DistanceUndefined";
    case PD_ERR_NOT_A_TREE_ORDER: return "NotATreeOrder";
    case PD_ERR_INVALID_PARAMETER: return "InvalidParameter";
    case PD_ERR_SIZE_CAP_EXCEEDED: return "SizeCapExceeded";
    case PD_ERR_IO: return "IoError";
    case PD_ERR_NULL_ARGUMENT: return "NullArgument";
    case PD_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* pd_last_error(void) { return g_last_error.c_str(); }

void pd_string_free(char* s) { std::free(s); }

pd_status pd_poset_parse(const char* text, pd_poset** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new pd_poset{parse_poset_file(text)}; });
}

pd_status pd_poset_load(const char* path, pd_poset** out) {
  if (!path || !out) return null_argument();
  return guarded([&] { *out = new pd_poset{load_poset_file(path)}; });
}

pd_status pd_poset_generate(const char* family_spec, uint64_t default_seed, pd_poset** out) {
  if (!family_spec || !out) return null_argument();
  return guarded([&] { *out = new pd_poset{generate(parse_family_spec(family_spec, default_seed))}; });
}

pd_status pd_poset_dual(const pd_poset* poset, pd_poset** out) {
  if (!poset || !out) return null_argument();
  return guarded([&] { *out = new pd_poset{dual(poset->poset)}; });
}

void pd_poset_free(pd_poset* poset) { delete poset; }

size_t pd_poset_size(const pd_poset* poset) { return poset ? poset->poset.size() : 0; }

const char* pd_poset_element_name(const pd_poset* poset, size_t index) {
  if (!poset || index >= poset->poset.size()) return nullptr;
  return poset->poset.name(index).c_str();
}

pd_status pd_poset_render(const pd_poset* poset, char** out) {
  if (!poset || !out) return null_argument();
  return guarded([&] { *out = copy_string(render_poset_file(poset->poset)); });
}

pd_status pd_poset_render_json(const pd_poset* poset, char** out) {
  if (!poset || !out) return null_argument();
  return guarded([&] { *out = copy_string(render::poset_json(poset->poset)); });
}

pd_status pd_poset_leq(const pd_poset* poset, const char* x, const char* y, int* out) {
  if (!poset || !x || !y || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    *out = p.leq(p.at(x), p.at(y)) ? 1 : 0;
  });
}

pd_status pd_poset_height(const pd_poset* poset, const char* x, const char* y, uint32_t* out) {
  if (!poset || !x || !y || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    *out = p.height(p.at(x), p.at(y));
  });
}

pd_status pd_poset_join(const pd_poset* poset, const char* x, const char* y, const char** out) {
  if (!poset || !x || !y || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    *out = p.name(join(p, p.at(x), p.at(y))).c_str();
  });
}

pd_status pd_poset_canonical_code(const pd_poset* poset, char** out_hex) {
  if (!poset || !out_hex) return null_argument();
  return guarded([&] { *out_hex = copy_string(canonical_code(poset->poset).hex()); });
}

pd_status pd_poset_report(const pd_poset* poset, pd_structural_report* out) {
  if (!poset || !out) return null_argument();
  return guarded([&] {
    const StructuralReport r = structural_report(poset->poset);
    *out = pd_structural_report{r.connected,        r.upper_filtering, r.lower_filtering, r.join_semilattice,
                                r.lattice,          r.tree_order,      r.semimodular,     r.jordan_dedekind,
                                r.element_count,    r.cover_edge_count};
  });
}

pd_status pd_poset_report_render(const pd_poset* poset, pd_format format, char** out) {
  if (!poset || !out) return null_argument();
  return guarded([&] {
    const StructuralReport r = structural_report(poset->poset);
    *out = copy_string(json(format) ? render::report_json(r) : render::report_text(r));
  });
}

pd_status pd_parse_distance_kind(const char* text, pd_distance_kind* out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = from_kind(parse_distance_kind(text)); });
}

pd_status pd_distance(const pd_poset* poset, pd_distance_kind kind, const char* x, const char* y, uint32_t* out) {
  if (!poset || !x || !y || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    *out = distance(p, to_kind(kind), p.at(x), p.at(y));
  });
}

pd_status pd_distance_render(const pd_poset* poset, pd_distance_kind kind, const char* x, const char* y,
                             pd_format format, char** out) {
  if (!poset || !x || !y || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const Element a = p.at(x), b = p.at(y);
    const std::uint32_t d = distance(p, to_kind(kind), a, b);
    *out = copy_string(json(format) ? render::distance_json(p, to_kind(kind), a, b, d) : std::to_string(d) + "\n");
  });
}

pd_status pd_triangle_violations(const pd_poset* poset, pd_distance_kind kind, pd_format format, size_t* out_count,
                                 char** out) {
  if (!poset || !out_count || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const auto v = triangle_violations(p, to_kind(kind));
    *out = copy_string(json(format) ? render::violations_json(p, to_kind(kind), v)
                                    : render::violations_text(p, to_kind(kind), v));
    *out_count = v.size();
  });
}

pd_status pd_maximal_chains(const pd_poset* poset, pd_format format, size_t* out_count, char** out) {
  if (!poset || !out_count || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const auto chains = maximal_chains(p);
    *out = copy_string(json(format) ? render::chains_json(p, chains) : render::chains_text(p, chains));
    *out_count = chains.size();
  });
}

pd_status pd_chain_compatibility(const pd_poset* poset, pd_distance_kind kind, pd_format format, int* out_compatible,
                                 char** out) {
  if (!poset || !out_compatible || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const auto c = chain_compatibility(p, to_kind(kind));
    *out = copy_string(json(format) ? render::compatibility_json(p, to_kind(kind), c)
                                    : render::compatibility_text(p, to_kind(kind), c));
    *out_compatible = c.compatible ? 1 : 0;
  });
}

pd_status pd_compare_distances(const pd_poset* poset, pd_format format, char** out) {
  if (!poset || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const auto c = compare_distances(p);
    *out = copy_string(json(format) ? render::comparison_json(p, c) : render::comparison_text(p, c));
  });
}

pd_status pd_kinship(const pd_poset* poset, const char* ego, const char* alter, pd_kinship_result* out) {
  if (!poset || !ego || !alter || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const KinshipResult k = kinship(p, p.at(ego), p.at(alter));
    *out = pd_kinship_result{p.name(k.ancestor).c_str(), k.h_ego, k.h_alter, k.civil, k.canon};
  });
}

pd_status pd_kinship_render(const pd_poset* poset, const char* ego, const char* alter, pd_format format, char** out) {
  if (!poset || !ego || !alter || !out) return null_argument();
  return guarded([&] {
    const Poset& p = poset->poset;
    const Element e = p.at(ego), a = p.at(alter);
    const KinshipResult k = kinship(p, e, a);
    *out = copy_string(json(format) ? render::kinship_json(p, e, a, k)
                                    : "civil=" + std::to_string(k.civil) + "\ncanon=" + std::to_string(k.canon) + "\n");
  });
}

pd_status pd_enumerate(unsigned n, const char* filter, unsigned jobs, pd_poset_visitor visitor, void* user,
                       size_t* out_count) {
  if (!out_count) return null_argument();
  return guarded([&] {
    const auto posets = enumerate_posets(n, filter_from(filter), EnumerateOptions{jobs});
    *out_count = posets.size();
    if (!visitor) return;
    for (const auto& ep : posets) {
      const pd_poset handle{ep.poset};
      if (visitor(&handle, ep.code.hex().c_str(), user) != 0) break;
    }
  });
}

pd_status pd_enumerate_render(unsigned n, const char* filter, unsigned jobs, pd_format format, size_t* out_count,
                              char** out) {
  if (!out_count || !out) return null_argument();
  return guarded([&] {
    const auto posets = enumerate_posets(n, filter_from(filter), EnumerateOptions{jobs});
    *out = copy_string(json(format) ? render::enumerated_json(posets) : render::enumerated_text(posets));
    *out_count = posets.size();
  });
}

pd_status pd_verify(const char* proposition, unsigned n_max, unsigned jobs, pd_format format, int* out_holds,
                    size_t* out_witnesses, char** out) {
  if (!proposition || !out_holds || !out_witnesses || !out) return null_argument();
  return guarded([&] {
    const VerifyReport r = verify(parse_proposition(proposition), n_max, VerifyOptions{jobs});
    *out = copy_string(json(format) ? render::verify_json(r) : render::verify_text(r));
    *out_holds = r.holds ? 1 : 0;
    *out_witnesses = r.witnesses.size();
  });
}

}  // extern "C"
