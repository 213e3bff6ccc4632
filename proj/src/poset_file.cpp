#include "posetdist/poset_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace posetdist {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& message) {
  throw PosetError(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Poset parse_poset_file(std::string_view text) {
  PosetBuilder builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    try {
      if (tok.size() == 3 && tok[1] == "<") {
        builder.relation(tok[0], tok[2]);
      } else if (tok.size() == 2 && tok[0] == "element") {
        builder.element(tok[1]);
      } else {
        parse_error(line_no, "expected 'a < b' or 'element x', got '" + std::string(line) + "'");
      }
    } catch (const PosetError& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      throw PosetError(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  return builder.build();
}

Poset load_poset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PosetError(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_file(buf.str());
}

std::string render_poset_file(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::string> isolated;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.upper_covers(x)) covers.emplace_back(p.name(x), p.name(y));
    if (p.upper_covers(x).empty() && p.lower_covers(x).empty()) isolated.push_back(p.name(x));
  }
  std::sort(covers.begin(), covers.end());
  std::sort(isolated.begin(), isolated.end());
  std::string out;
  for (const auto& [a, b] : covers) out += a + " < " + b + "\n";
  for (const auto& name : isolated) out += "element " + name + "\n";
  return out;
}

}  // namespace posetdist
