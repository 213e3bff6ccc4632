// Command-line front end. Talks to the library only through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "posetdist/posetdist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct Failure {
  pd_status status;
};

void check(pd_status s) {
  if (s != PD_OK) throw Failure{s};
}

struct PosetDeleter {
  void operator()(pd_poset* p) const { pd_poset_free(p); }
};
using PosetHandle = std::unique_ptr<pd_poset, PosetDeleter>;

struct StringDeleter {
  void operator()(char* s) const { pd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

PosetHandle load(const std::string& path) {
  pd_poset* p = nullptr;
  check(pd_poset_load(path.c_str(), &p));
  return PosetHandle(p);
}

pd_distance_kind parse_kind(const std::string& text) {
  pd_distance_kind kind{};
  check(pd_parse_distance_kind(text.c_str(), &kind));
  return kind;
}

void emit(char* s) {
  OwnedString owned(s);
  std::fputs(owned.get(), stdout);
}

struct Options {
  bool json = false;
  std::string file;
  std::string kind = "zigzag";
  std::string x, y;
  std::string spec, output;
  std::uint64_t seed = 0;
  unsigned n = 0;
  std::string filter;
  bool count_only = false;
  unsigned jobs = 1;
  std::string prop;
  unsigned max_n = 0;
  std::string method = "civil";
};

pd_format format(const Options& o) { return o.json ? PD_FORMAT_JSON : PD_FORMAT_TEXT; }

int run_check(const Options& o) {
  auto p = load(o.file);
  char* out = nullptr;
  check(pd_poset_report_render(p.get(), format(o), &out));
  emit(out);
  return kExitOk;
}

int run_dist(const Options& o) {
  auto p = load(o.file);
  char* out = nullptr;
  check(pd_distance_render(p.get(), parse_kind(o.kind), o.x.c_str(), o.y.c_str(), format(o), &out));
  emit(out);
  return kExitOk;
}

int run_metric(const Options& o) {
  auto p = load(o.file);
  size_t count = 0;
  char* out = nullptr;
  check(pd_triangle_violations(p.get(), parse_kind(o.kind), format(o), &count, &out));
  emit(out);
  return count ? kExitViolation : kExitOk;
}

int run_chains(const Options& o) {
  auto p = load(o.file);
  size_t count = 0;
  char* out = nullptr;
  check(pd_maximal_chains(p.get(), format(o), &count, &out));
  emit(out);
  return kExitOk;
}

int run_compat(const Options& o) {
  auto p = load(o.file);
  int compatible = 0;
  char* out = nullptr;
  check(pd_chain_compatibility(p.get(), parse_kind(o.kind), format(o), &compatible, &out));
  emit(out);
  return compatible ? kExitOk : kExitViolation;
}

int run_compare(const Options& o) {
  auto p = load(o.file);
  char* out = nullptr;
  check(pd_compare_distances(p.get(), format(o), &out));
  emit(out);
  return kExitOk;
}

int run_gen(const Options& o) {
  pd_poset* raw = nullptr;
  check(pd_poset_generate(o.spec.c_str(), o.seed, &raw));
  PosetHandle p(raw);
  char* text = nullptr;
  check(pd_poset_render(p.get(), &text));
  OwnedString body(text);
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    f << body.get();
    if (!f) {
      std::fprintf(stderr, "error: IoError: cannot write %s\n", o.output.c_str());
      return kExitInputError;
    }
  }
  if (o.json) {
    char* js = nullptr;
    check(pd_poset_render_json(p.get(), &js));
    emit(js);
  } else if (o.output.empty()) {
    std::fputs(body.get(), stdout);
  }
  return kExitOk;
}

int run_enumerate(const Options& o) {
  size_t count = 0;
  if (o.count_only) {
    check(pd_enumerate(o.n, o.filter.c_str(), o.jobs, nullptr, nullptr, &count));
    if (o.json)
      std::printf("{\n  \"n\": %u,\n  \"count\": %zu\n}\n", o.n, count);
    else
      std::printf("%zu\n", count);
    return kExitOk;
  }
  char* out = nullptr;
  check(pd_enumerate_render(o.n, o.filter.c_str(), o.jobs, format(o), &count, &out));
  emit(out);
  return kExitOk;
}

int run_verify(const Options& o) {
  int holds = 0;
  size_t witnesses = 0;
  char* out = nullptr;
  check(pd_verify(o.prop.c_str(), o.max_n, o.jobs, format(o), &holds, &witnesses, &out));
  emit(out);
  return witnesses ? kExitViolation : kExitOk;
}

int run_kinship(const Options& o) {
  if (o.method != "civil" && o.method != "canon") {
    std::fprintf(stderr, "error: InvalidParameter: unknown method '%s'\n", o.method.c_str());
    return kExitInputError;
  }
  auto p = load(o.file);
  if (o.json) {
    char* out = nullptr;
    check(pd_kinship_render(p.get(), o.x.c_str(), o.y.c_str(), PD_FORMAT_JSON, &out));
    emit(out);
    return kExitOk;
  }
  pd_kinship_result k{};
  check(pd_kinship(p.get(), o.x.c_str(), o.y.c_str(), &k));
  std::printf("%u\n", o.method == "civil" ? k.civil : k.canon);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances and structure of finite posets"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("FILE", o.file, "Poset file")->required();
    return sub;
  };

  CLI::App* check_cmd = file_cmd("check", "Print the structural report");
  CLI::App* dist_cmd = file_cmd("dist", "Distance between two elements");
  dist_cmd->add_option("--kind", o.kind, "zigzag|updown|downup|chebyshev");
  dist_cmd->add_option("X", o.x)->required();
  dist_cmd->add_option("Y", o.y)->required();
  CLI::App* metric_cmd = file_cmd("metric", "Scan for triangle inequality violations");
  metric_cmd->add_option("--kind", o.kind, "zigzag|updown|downup|chebyshev");
  CLI::App* chains_cmd = file_cmd("chains", "List maximal chains");
  CLI::App* compat_cmd = file_cmd("compat", "Chain compatibility verdict");
  compat_cmd->add_option("--kind", o.kind, "zigzag|updown|downup|chebyshev");
  CLI::App* compare_cmd = file_cmd("compare", "Tabulate zigzag, up-down and Chebyshev distances");

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a family member");
  gen_cmd->fallthrough();
  gen_cmd->add_option("FAMILYSPEC", o.spec, "e.g. boolean:3, grid:3x3, random:8:0.4:7")->required();
  gen_cmd->add_option("-o,--output", o.output, "Write the poset file here");
  gen_cmd->add_option("--seed", o.seed, "Seed for random specs without one");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "All posets of a size up to isomorphism");
  enum_cmd->fallthrough();
  enum_cmd->add_option("--n", o.n, "Number of elements")->required();
  enum_cmd->add_option("--filter", o.filter, "Comma-separated predicates, '!' negates");
  enum_cmd->add_flag("--count-only", o.count_only);
  enum_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Exhaustive check of a proposition");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--prop", o.prop, "P1|P2|P3|P4|P5|cheb-search")->required();
  verify_cmd->add_option("--max-n", o.max_n, "Largest poset size")->required();
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

  CLI::App* kin_cmd = file_cmd("kinship", "Kinship degree in a tree order");
  kin_cmd->add_option("--method", o.method, "civil|canon");
  kin_cmd->add_option("EGO", o.x)->required();
  kin_cmd->add_option("ALTER", o.y)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check_cmd) return run_check(o);
    if (*dist_cmd) return run_dist(o);
    if (*metric_cmd) return run_metric(o);
    if (*chains_cmd) return run_chains(o);
    if (*compat_cmd) return run_compat(o);
    if (*compare_cmd) return run_compare(o);
    if (*gen_cmd) return run_gen(o);
    if (*enum_cmd) return run_enumerate(o);
    if (*verify_cmd) return run_verify(o);
    if (*kin_cmd) return run_kinship(o);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s: %s\n", pd_status_name(f.status), pd_last_error());
    return kExitInputError;
  }
  return kExitInputError;
}
